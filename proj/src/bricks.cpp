#include "oddedge/bricks.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace oddedge {

const char* BrickVerdict::describe() const {
    switch (failed) {
        case BrickFail::none: return "ok";
        case BrickFail::positivity: return "a length is zero";
        case BrickFail::edge_ab: return "a^2 + b^2 != d_ab^2";
        case BrickFail::edge_ac: return "a^2 + c^2 != d_ac^2";
        case BrickFail::edge_bc: return "b^2 + c^2 != d_bc^2";
    }
    return "?";
}

const char* classify_status_name(ClassifyStatus s) {
    switch (s) {
        case ClassifyStatus::ok: return "ok";
        case ClassifyStatus::not_euler_brick: return "not_euler_brick";
        case ClassifyStatus::no_odd_edge: return "no_odd_edge";
        case ClassifyStatus::multiple_odd_edges: return "multiple_odd_edges";
        case ClassifyStatus::no_representation: return "no_representation";
    }
    return "?";
}

// (t*e*f)^2 as a 128-bit value.  For n < 2^32 the product t*e*f is below
// n^2/4 < 2^62, so the square stays far inside 128 bits; larger n still
// fits since t*e*f <= n^2/4 < 2^63 is checked on entry.
static u128 cert_term(const DiffSquareRep& r) {
    u128 p = u128(r.t) * r.e * r.f;
    if (p >> 63)
        throw std::overflow_error("certificate term exceeds the supported range");
    return p * p;
}

static int scale_type(u64 t1, u64 t2) {
    int scaled = int(t1 > 1) + int(t2 > 1);
    return scaled == 0 ? 1 : (scaled == 1 ? 2 : 3);
}

std::vector<BrickWitness> search_brick_witnesses(u64 n, bool strict) {
    return search_brick_witnesses(n, diff_square_reps(n), strict);
}

std::vector<BrickWitness> search_brick_witnesses(u64 n, const std::vector<DiffSquareRep>& reps,
                                                 bool strict) {
    std::vector<BrickWitness> out;
    std::vector<u128> term(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) term[i] = cert_term(reps[i]);
    for (size_t i = 0; i < reps.size(); ++i) {
        if (strict && reps[i].f <= 1) continue;
        for (size_t j = i + 1; j < reps.size(); ++j) {
            if (strict && reps[j].f <= 1) continue;
            if (auto d = is_square128(term[i] + term[j]))
                out.push_back({n, reps[i], reps[j], checked_u64(*d), scale_type(reps[i].t, reps[j].t)});
        }
    }
    return out;
}

EulerBrick build_brick(const BrickWitness& w) {
    const auto& [t1, e1, f1] = w.rep1;
    const auto& [t2, e2, f2] = w.rep2;
    EulerBrick b;
    b.a = w.n;
    b.b = checked_mul(2, checked_mul(t1, checked_mul(e1, f1)));
    b.c = checked_mul(2, checked_mul(t2, checked_mul(e2, f2)));
    b.d_ab = checked_u64(u128(t1) * e1 * e1 + u128(t1) * f1 * f1);
    b.d_ac = checked_u64(u128(t2) * e2 * e2 + u128(t2) * f2 * f2);
    b.d_bc = checked_mul(2, w.d);
    b.primitive = gcd3(b.a, b.b, b.c) == 1;
    return b;
}

bool witness_degenerate(const BrickWitness& w) {
    return u128(w.rep1.t) * w.rep1.e * w.rep1.f == u128(w.rep2.t) * w.rep2.e * w.rep2.f;
}

bool brick_primitive(const EulerBrick& b) {
    return gcd3(b.a, b.b, b.c) == 1;
}

static bool square_pair(u64 p, u64 q, u64 d) {
    return u128(p) * p + u128(q) * q == u128(d) * d;
}

BrickVerdict verify_brick(const EulerBrick& b) {
    if (!b.a || !b.b || !b.c || !b.d_ab || !b.d_ac || !b.d_bc) return {BrickFail::positivity};
    if (!square_pair(b.a, b.b, b.d_ab)) return {BrickFail::edge_ab};
    if (!square_pair(b.a, b.c, b.d_ac)) return {BrickFail::edge_ac};
    if (!square_pair(b.b, b.c, b.d_bc)) return {BrickFail::edge_bc};
    return {BrickFail::none};
}

BrickVerdict verify_brick_tuple(u64 a, u64 b, u64 c, u64 d1, u64 d2, u64 d3) {
    // Try every assignment of the given diagonals to the edge pairs and keep
    // the first (in a fixed permutation order) with the most satisfied
    // identities, so a correct brick passes no matter how the caller ordered
    // the diagonals and a wrong one reports a stable first failure.
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const u64 ds[3] = {d1, d2, d3};
    EulerBrick best{};
    int best_score = -1;
    for (const auto& p : perms) {
        EulerBrick cand{a, b, c, ds[p[0]], ds[p[1]], ds[p[2]]};
        int score = int(square_pair(a, b, cand.d_ab)) + int(square_pair(a, c, cand.d_ac)) +
                    int(square_pair(b, c, cand.d_bc));
        if (score > best_score) {
            best_score = score;
            best = cand;
        }
    }
    return verify_brick(best);
}

// Recover (t,e,f) for the Pythagorean pair (n odd, E even, D): from
// n = t(e^2-f^2), D = t(e^2+f^2) we get D+n = 2te^2 and D-n = 2tf^2, and
// coprimality of (e,f) makes t unique among the divisors of gcd(n,D).
static bool recover_rep(u64 n, u64 D, DiffSquareRep& out) {
    u64 se = checked_u64((u128(D) + n) / 2), sf = (D - n) / 2;
    for (u64 t : divisors(factorize(std::gcd(n, D)))) {
        if (se % t || sf % t) continue;
        auto e = is_square(se / t), f = is_square(sf / t);
        if (e && f && std::gcd(*e, *f) == 1) {
            out = {t, *e, *f};
            return true;
        }
    }
    return false;
}

ClassifyResult classify_brick(u64 x, u64 y, u64 z) {
    if (!x || !y || !z) throw std::invalid_argument("classify_brick: edges must be positive");
    ClassifyResult res;
    u64 g = gcd3(x, y, z);
    res.scale = g;
    std::array<u64, 3> e{x / g, y / g, z / g};
    std::sort(e.begin(), e.end());

    std::array<u64, 3> diag{}; // diag[k] spans the two edges other than e[k]
    for (int k = 0; k < 3; ++k) {
        u64 p = e[(k + 1) % 3], q = e[(k + 2) % 3];
        auto d = is_square128(u128(p) * p + u128(q) * q);
        if (!d) {
            res.status = ClassifyStatus::not_euler_brick;
            return res;
        }
        diag[k] = checked_u64(*d);
    }

    int odd_count = int(e[0] & 1) + int(e[1] & 1) + int(e[2] & 1);
    if (odd_count == 0) {
        res.status = ClassifyStatus::no_odd_edge;
        return res;
    }
    if (odd_count > 1) {
        res.status = ClassifyStatus::multiple_odd_edges;
        return res;
    }
    u64 n = 0;
    for (int k = 0; k < 3; ++k)
        if (e[k] & 1) n = e[k];

    // the two diagonals whose pair contains n; each recovers one representation
    std::array<u64, 2> over_n{};
    int oi = 0;
    for (int k = 0; k < 3; ++k) {
        u64 p = e[(k + 1) % 3], q = e[(k + 2) % 3];
        if ((p & 1) || (q & 1)) over_n[oi++] = diag[k];
    }

    DiffSquareRep r1{}, r2{};
    if (!recover_rep(n, over_n[0], r1) || !recover_rep(n, over_n[1], r2)) {
        res.status = ClassifyStatus::no_representation;
        return res;
    }
    if (r2 < r1) std::swap(r1, r2);

    u64 dd = 0;
    for (int k = 0; k < 3; ++k) {
        u64 p = e[(k + 1) % 3], q = e[(k + 2) % 3];
        if (!(p & 1) && !(q & 1)) dd = diag[k] / 2; // even-even diagonal is 2d
    }
    res.witness = {n, r1, r2, dd, scale_type(r1.t, r2.t)};
    return res;
}

} // namespace oddedge
