#include "oddedge/pythag.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oddedge {

PythTriple param_primitive_triple(u64 u, u64 v) {
    if (!(u > v && v >= 1))
        throw std::invalid_argument("param_primitive_triple: need u > v >= 1");
    if (std::gcd(u, v) != 1)
        throw std::invalid_argument("param_primitive_triple: need gcd(u,v) = 1");
    if ((u + v) % 2 == 0)
        throw std::invalid_argument("param_primitive_triple: need u, v of opposite parity");
    u64 uu = checked_mul(u, u), vv = checked_mul(v, v);
    return {uu - vv, checked_mul(2, checked_mul(u, v)), checked_u64(u128(uu) + vv), 1};
}

std::vector<DiffSquareRep> diff_square_reps(u64 n) {
    return diff_square_reps(factorize(n));
}

std::vector<DiffSquareRep> diff_square_reps(const Factorization& fac) {
    u64 n = fac.n;
    if (n % 2 == 0) throw std::invalid_argument("diff_square_reps: n must be odd");
    std::vector<DiffSquareRep> out;
    std::vector<u64> divs = divisors(fac);
    for (u64 t : divs) {
        u64 z = n / t;
        // factor pairs s*w = z with s < w; both odd, so e and f are integral
        for (u64 s : divs) {
            if (z % s != 0) continue;
            u64 w = z / s;
            if (s >= w) break; // divs ascending: once s >= w it stays that way
            u64 e = (w + s) / 2, f = (w - s) / 2;
            if (std::gcd(e, f) == 1) out.push_back({t, e, f});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 count_triples_odd_edge(const Factorization& fac) {
    if (fac.n % 2 == 0) throw std::invalid_argument("count_triples_odd_edge: n must be odd");
    // 2^(omega-1) summed over divisors != 1, expanded prime by prime:
    // counts[w] = number of divisors built so far with exactly w distinct primes
    u64 total = 0;
    std::vector<u64> counts{1}; // the divisor 1
    for (const auto& [p, k] : fac.factors) {
        (void)p;
        std::vector<u64> next(counts.size() + 1, 0);
        for (size_t w = 0; w < counts.size(); ++w) {
            next[w] += counts[w];                    // exponent 0
            next[w + 1] += counts[w] * u64(k);       // exponents 1..k add one distinct prime
        }
        counts = std::move(next);
    }
    for (size_t w = 1; w < counts.size(); ++w) total += counts[w] << (w - 1);
    return total;
}

std::vector<PythTriple> triples_with_odd_edge(u64 n) {
    std::vector<PythTriple> out;
    for (const auto& r : diff_square_reps(n)) {
        u64 ee = checked_mul(r.e, r.e), ff = checked_mul(r.f, r.f);
        out.push_back({n,
                       checked_mul(2, checked_mul(r.t, checked_mul(r.e, r.f))),
                       checked_mul(r.t, checked_u64(u128(ee) + ff)),
                       r.t});
    }
    return out;
}

} // namespace oddedge
