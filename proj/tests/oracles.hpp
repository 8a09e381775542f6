#pragma once
// ----- brute-force oracles -----
// Deliberately dumb reimplementations used only by tests.  Each one takes the
// slowest defensible route so a shared bug with the library is implausible:
// trial division, exhaustive nested loops, no divisor tricks, no filters.

#include "oddedge/biquad.hpp"
#include "oddedge/cuboids.hpp"
#include "oddedge/pythag.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracle {

using oddedge::u128;
using oddedge::u64;

inline u64 slow_isqrt(u64 x) {
    u64 r = u64(std::sqrt(double(x)));
    while (r > 0 && r * r > x) r--;
    while ((r + 1) * (r + 1) <= x) r++;
    return r;
}

inline bool slow_is_square(u64 x, u64* root = nullptr) {
    u64 r = slow_isqrt(x);
    if (root) *root = r;
    return r * r == x;
}

inline bool slow_is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; p++)
        if (n % p == 0) return false;
    return true;
}

// every (t,e,f) with t*(e^2-f^2) = n, gcd(e,f) = 1, e > f >= 1
inline std::vector<oddedge::DiffSquareRep> slow_reps(u64 n) {
    std::vector<oddedge::DiffSquareRep> out;
    for (u64 t = 1; t <= n; t++) {
        if (n % t) continue;
        u64 z = n / t;
        for (u64 f = 1; 2 * f + 1 <= z; f++) { // e = f+1 already needs 2f+1 <= z
            u64 e;
            if (!slow_is_square(z + f * f, &e)) continue;
            if (e > f && std::gcd(e, f) == 1) out.push_back({t, e, f});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// T = U^2 + V^2 with U <= V, both odd and coprime; lo = 3 demands U,V > 1
inline std::vector<std::pair<u64, u64>> slow_two_squares(u64 T, bool require_gt1) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 U = require_gt1 ? 3 : 1; 2 * U * U <= T; U += 2) {
        u64 V;
        if (!slow_is_square(T - U * U, &V)) continue;
        if (V % 2 == 1 && std::gcd(U, V) == 1) out.push_back({U, V});
    }
    return out;
}

// all certificate triples over a representation list: cubic scan
inline std::vector<oddedge::CuboidWitness> slow_cuboid_pairs(
    u64 n, const std::vector<oddedge::DiffSquareRep>& reps, unsigned conj_mask, bool strict) {
    auto term = [](const oddedge::DiffSquareRep& r) {
        u128 p = u128(r.t) * r.e * r.f;
        return p * p;
    };
    std::vector<oddedge::CuboidWitness> out;
    for (size_t i = 0; i < reps.size(); i++) {
        if (strict && reps[i].f <= 1) continue;
        for (size_t j = 0; j < reps.size(); j++) {
            if (j == i || (strict && reps[j].f <= 1)) continue;
            for (size_t k = j + 1; k < reps.size(); k++) {
                if (k == i || (strict && reps[k].f <= 1)) continue;
                if (term(reps[i]) != term(reps[j]) + term(reps[k])) continue;
                oddedge::CuboidWitness w;
                w.n = n;
                w.repE = reps[i];
                w.repG = std::max(reps[j], reps[k]);
                w.repK = std::min(reps[j], reps[k]);
                w.conjecture = oddedge::cuboid_conjecture_index(w.repE.t, w.repG.t, w.repK.t);
                if (w.conjecture >= 1 && (conj_mask >> w.conjecture) & 1) out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.repE, x.repG, x.repK) < std::tie(y.repE, y.repG, y.repK);
    });
    return out;
}

// biquadratic hits as bare tuples (a,b,P,Q,R,S,T); notes are not the
// oracle's business
struct BiquadTuple {
    u64 a, b, P, Q, R, S, T;
    auto operator<=>(const BiquadTuple&) const = default;
};

inline std::vector<BiquadTuple> slow_biquad(int conjecture, u64 bound, u64 scale_bound) {
    std::vector<BiquadTuple> out;
    auto fourth = [](u64 x) { return u128(x) * x * x * x; };
    std::vector<u64> odds, scales;
    for (u64 v = 3; v <= bound; v += 2) odds.push_back(v);
    if (conjecture == 1)
        scales = {1};
    else
        for (u64 v = 3; v <= scale_bound; v += 2) scales.push_back(v);
    for (u64 a : conjecture == 3 ? scales : std::vector<u64>{1})
        for (u64 b : scales)
            for (u64 P : odds)
                for (u64 Q : odds) {
                    if (Q <= P || std::gcd(P, Q) != 1) continue;
                    for (u64 R : odds)
                        for (u64 S : odds) {
                            if (S <= R || std::gcd(R, S) != 1) continue;
                            if (conjecture == 1 && std::tie(P, Q) > std::tie(R, S)) continue;
                            if (conjecture == 3 && std::tie(a, P, Q) > std::tie(b, R, S)) continue;
                            u128 sum = u128(a) * a * (fourth(P) + fourth(Q)) +
                                       u128(b) * b * (fourth(R) + fourth(S));
                            auto T = oddedge::is_square128(sum);
                            if (T) out.push_back({a, b, P, Q, R, S, oddedge::checked_u64(*T)});
                        }
                }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
