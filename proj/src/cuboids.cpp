#include "oddedge/cuboids.hpp"

#include <algorithm>
#include <array>
#include <gmpxx.h>

namespace oddedge {

const char* CuboidVerdict::describe() const {
    switch (failed) {
        case CuboidFail::none: return "ok";
        case CuboidFail::positivity: return "a length is zero";
        case CuboidFail::face_ab: return "a^2 + b^2 != d_ab^2";
        case CuboidFail::face_ac: return "a^2 + c^2 != d_ac^2";
        case CuboidFail::face_bc: return "b^2 + c^2 != d_bc^2";
        case CuboidFail::body: return "a^2 + b^2 + c^2 != g^2";
    }
    return "?";
}

int cuboid_conjecture_index(u64 s1, u64 s2, u64 s3) {
    bool a = s1 > 1, b = s2 > 1, c = s3 > 1;
    if (!a && !b && !c) return 1;
    if (a && !b && !c) return 2;
    if (!a && b && !c) return 3;
    if (!a && b && c) return 4;
    if (a && b && !c) return 5;
    if (a && b && c) return 6;
    return 0; // (1, 1, >1) and (>1, 1, >1) are non-canonical: repG must carry the scale
}

static u128 cert_term(const DiffSquareRep& r) {
    u128 p = u128(r.t) * r.e * r.f;
    if (p >> 63) throw std::overflow_error("certificate term exceeds the supported range");
    return p * p;
}

std::vector<CuboidWitness> search_cuboid_witnesses(u64 n, unsigned conj_mask, bool strict) {
    return search_cuboid_witnesses(n, diff_square_reps(n), conj_mask, strict);
}

std::vector<CuboidWitness> search_cuboid_witnesses(u64 n, const std::vector<DiffSquareRep>& reps,
                                                   unsigned conj_mask, bool strict) {
    std::vector<CuboidWitness> out;
    size_t R = reps.size();
    if (R < 3) return out;

    // usable[i]: passes the strictness filter
    std::vector<char> usable(R, 1);
    if (strict)
        for (size_t i = 0; i < R; ++i) usable[i] = reps[i].f > 1;

    std::vector<u128> term(R);
    for (size_t i = 0; i < R; ++i) term[i] = cert_term(reps[i]);

    // index order sorted by certificate term, for two-pointer pair lookup
    std::vector<size_t> order(R);
    for (size_t i = 0; i < R; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return term[i] < term[j]; });

    auto emit = [&](size_t ie, size_t x, size_t y) {
        size_t ig = order[x], ik = order[y];
        if (ig == ie || ik == ie) return;
        if (!usable[ig] || !usable[ik]) return;
        // repG carries the lexicographically larger (t,e,f), so when exactly
        // one of the pair is scaled it lands in repG; certificate is symmetric
        size_t big = reps[ig] < reps[ik] ? ik : ig;
        size_t small = big == ig ? ik : ig;
        int conj = cuboid_conjecture_index(reps[ie].t, reps[big].t, reps[small].t);
        if (conj >= 1 && ((conj_mask >> conj) & 1u))
            out.push_back({n, reps[ie], reps[big], reps[small], conj});
    };

    for (size_t ie = 0; ie < R; ++ie) {
        if (!usable[ie]) continue;
        u128 target = term[ie];
        // classic sorted two-pointer; equal-value runs are emitted as blocks
        size_t lo = 0, hi = R - 1;
        while (lo < hi) {
            u128 sum = term[order[lo]] + term[order[hi]];
            if (sum < target) {
                ++lo;
            } else if (sum > target) {
                --hi;
            } else if (term[order[lo]] == term[order[hi]]) {
                // single run of equal values: every pair inside it matches
                for (size_t x = lo; x < hi; ++x)
                    for (size_t y = x + 1; y <= hi; ++y) emit(ie, x, y);
                break;
            } else {
                size_t lo_end = lo, hi_start = hi;
                while (term[order[lo_end + 1]] == term[order[lo]]) ++lo_end;
                while (term[order[hi_start - 1]] == term[order[hi]]) --hi_start;
                for (size_t x = lo; x <= lo_end; ++x)
                    for (size_t y = hi_start; y <= hi; ++y) emit(ie, x, y);
                lo = lo_end + 1;
                hi = hi_start - 1;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CuboidWitness& a, const CuboidWitness& b) {
        return std::tie(a.repE, a.repG, a.repK) < std::tie(b.repE, b.repG, b.repK);
    });
    return out;
}

PerfectCuboid build_perfect_cuboid(const CuboidWitness& w) {
    const auto& [s1, e, f] = w.repE;
    const auto& [s2, g, h] = w.repG;
    const auto& [s3, k, l] = w.repK;
    PerfectCuboid c;
    c.a = w.n;
    c.b = checked_mul(2, checked_mul(s2, checked_mul(g, h)));
    c.c = checked_mul(2, checked_mul(s3, checked_mul(k, l)));
    c.d_ab = checked_u64(u128(s2) * g * g + u128(s2) * h * h);
    c.d_ac = checked_u64(u128(s3) * k * k + u128(s3) * l * l);
    c.d_bc = checked_mul(2, checked_mul(s1, checked_mul(e, f)));
    c.g = checked_u64(u128(s1) * e * e + u128(s1) * f * f);
    return c;
}

static bool square_pair(u64 p, u64 q, u64 d) {
    return u128(p) * p + u128(q) * q == u128(d) * d;
}

CuboidVerdict verify_perfect_cuboid(const PerfectCuboid& c) {
    if (!c.a || !c.b || !c.c || !c.d_ab || !c.d_ac || !c.d_bc || !c.g)
        return {CuboidFail::positivity};
    if (!square_pair(c.a, c.b, c.d_ab)) return {CuboidFail::face_ab};
    if (!square_pair(c.a, c.c, c.d_ac)) return {CuboidFail::face_ac};
    if (!square_pair(c.b, c.c, c.d_bc)) return {CuboidFail::face_bc};
    if (u128(c.a) * c.a + u128(c.b) * c.b + u128(c.c) * c.c != u128(c.g) * c.g)
        return {CuboidFail::body};
    return {CuboidFail::none};
}

CuboidVerdict verify_cuboid_tuple(u64 a, u64 b, u64 c, u64 d1, u64 d2, u64 d3, u64 g) {
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const u64 ds[3] = {d1, d2, d3};
    PerfectCuboid best{};
    int best_score = -1;
    for (const auto& p : perms) {
        PerfectCuboid cand{a, b, c, ds[p[0]], ds[p[1]], ds[p[2]], g};
        int score = int(square_pair(a, b, cand.d_ab)) + int(square_pair(a, c, cand.d_ac)) +
                    int(square_pair(b, c, cand.d_bc));
        if (score > best_score) {
            best_score = score;
            best = cand;
        }
    }
    return verify_perfect_cuboid(best);
}

bool revalidate_witness_exact(const CuboidWitness& w) {
    // explicit return types: gmpxx expression templates must not outlive
    // the locals they reference
    auto rep_val = [](const DiffSquareRep& r) -> mpz_class {
        mpz_class e(r.e), f(r.f);
        return mpz_class(r.t) * (e * e - f * f);
    };
    auto rep_term = [](const DiffSquareRep& r) -> mpz_class {
        mpz_class p = mpz_class(r.t) * r.e * r.f;
        return p * p;
    };
    mpz_class n(w.n);
    for (const auto* r : {&w.repE, &w.repG, &w.repK}) {
        if (!(r->e > r->f && r->f >= 1)) return false;
        if (gcd(mpz_class(r->e), mpz_class(r->f)) != 1) return false;
        if (rep_val(*r) != n) return false;
    }
    if (rep_term(w.repE) != rep_term(w.repG) + rep_term(w.repK)) return false;
    if (w.repE == w.repG || w.repE == w.repK) return false;
    if (w.conjecture < 1 || w.conjecture > 6) return false;
    if (w.conjecture != cuboid_conjecture_index(w.repE.t, w.repG.t, w.repK.t)) return false;

    // assemble and check the solid entirely in mpz
    auto sq = [](const mpz_class& v) -> mpz_class { return v * v; };
    mpz_class a = n;
    mpz_class b = 2 * mpz_class(w.repG.t) * w.repG.e * w.repG.f;
    mpz_class c = 2 * mpz_class(w.repK.t) * w.repK.e * w.repK.f;
    mpz_class dab = mpz_class(w.repG.t) * (mpz_class(w.repG.e) * w.repG.e + mpz_class(w.repG.f) * w.repG.f);
    mpz_class dac = mpz_class(w.repK.t) * (mpz_class(w.repK.e) * w.repK.e + mpz_class(w.repK.f) * w.repK.f);
    mpz_class dbc = 2 * mpz_class(w.repE.t) * w.repE.e * w.repE.f;
    mpz_class body = mpz_class(w.repE.t) * (mpz_class(w.repE.e) * w.repE.e + mpz_class(w.repE.f) * w.repE.f);
    if (sq(a) + sq(b) != sq(dab)) return false;
    if (sq(a) + sq(c) != sq(dac)) return false;
    if (sq(b) + sq(c) != sq(dbc)) return false;
    if (sq(a) + sq(b) + sq(c) != sq(body)) return false;
    return true;
}

} // namespace oddedge
