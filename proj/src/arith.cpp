#include "oddedge/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace oddedge {

std::string to_string_u128(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s.push_back(char('0' + int(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u64 checked_u64(u128 x) {
    if (x > u128(UINT64_MAX))
        throw std::overflow_error("value exceeds 64 bits: " + to_string_u128(x));
    return u64(x);
}

u64 checked_mul(u64 a, u64 b) {
    return checked_u64(u128(a) * b);
}

// ----- integer square roots -----

static int bit_width_u128(u128 x) {
    u64 hi = u64(x >> 64);
    return hi ? 64 + std::bit_width(hi) : std::bit_width(u64(x));
}

// Newton's iteration r <- (r + x/r) / 2 from a seed >= sqrt(x) decreases
// monotonically and first fails to decrease exactly at floor(sqrt(x)).
u64 isqrt(u64 x) {
    if (x < 2) return x;
    u64 r = u64(1) << ((std::bit_width(x) + 1) / 2);
    for (;;) {
        u64 next = (r + x / r) >> 1;
        if (next >= r) return r;
        r = next;
    }
}

u128 isqrt128(u128 x) {
    if (x < 2) return x;
    if (x <= u128(UINT64_MAX)) return isqrt(u64(x));
    u128 r = u128(1) << ((bit_width_u128(x) + 1) / 2);
    for (;;) {
        u128 next = (r + x / r) >> 1;
        if (next >= r) return r;
        r = next;
    }
}

// ----- perfect square tests -----

// 44 of the 256 residues mod 256 are squares; the table kills ~83% of
// non-squares with one AND.  The second filter multiplies the odd prime
// powers 9*5*7*11*13 = 45045 (square residue density ~4.5%).
namespace {

struct SquareFilters {
    std::array<u64, 4> mod256{};
    std::vector<bool> mod45045;
    SquareFilters() : mod45045(45045, false) {
        for (u32 i = 0; i < 256; ++i) {
            u32 r = (i * i) & 255u;
            mod256[r >> 6] |= u64(1) << (r & 63u);
        }
        for (u64 i = 0; i < 45045; ++i) mod45045[(i * i) % 45045] = true;
    }
    bool plausible(u128 x) const {
        u32 r = u32(x) & 255u;
        if (!((mod256[r >> 6] >> (r & 63u)) & 1u)) return false;
        return mod45045[u64(x % 45045)];
    }
};

const SquareFilters& square_filters() {
    static const SquareFilters f;
    return f;
}

} // namespace

std::optional<u64> is_square(u64 x) {
    if (!square_filters().plausible(x)) return std::nullopt;
    u64 r = isqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

std::optional<u128> is_square128(u128 x) {
    if (!square_filters().plausible(x)) return std::nullopt;
    u128 r = isqrt128(x);
    if (r * r == x) return r;
    return std::nullopt;
}

u64 gcd3(u64 a, u64 b, u64 c) {
    return std::gcd(std::gcd(a, b), c);
}

// ----- primality -----

static u64 mulmod(u64 a, u64 b, u64 m) {
    return u64(u128(a) * b % m);
}

static u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    // This base set is deterministic for all n < 3.3e24, beyond the u64 range.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ----- factorization -----

namespace {

constexpr u32 SIEVE_LIMIT = 1'000'000;

const std::vector<u32>& small_primes() {
    static const std::vector<u32> primes = [] {
        std::vector<bool> composite(SIEVE_LIMIT + 1, false);
        std::vector<u32> ps;
        for (u32 i = 2; i <= SIEVE_LIMIT; ++i) {
            if (!composite[i]) {
                ps.push_back(i);
                for (u64 j = u64(i) * i; j <= SIEVE_LIMIT; j += i) composite[j] = true;
            }
        }
        return ps;
    }();
    return primes;
}

// Brent's variant of Pollard rho.  Deterministic: fixed start, polynomial
// increment stepped on failure, so the same input always splits the same way.
u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        auto step = [&](u64 v) { return u64((u128(v) * v + c) % n); };
        while (d == 1) {
            if (power == lam) {
                x = y;
                power <<= 1;
                lam = 0;
            }
            y = step(y);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    u64 rest = n;
    for (u32 p : small_primes()) {
        if (u64(p) * p > rest) break;
        if (rest % p == 0) {
            int k = 0;
            while (rest % p == 0) {
                rest /= p;
                ++k;
            }
            f.factors.push_back({p, k});
        }
    }
    if (rest > 1) {
        if (rest <= u64(SIEVE_LIMIT) * SIEVE_LIMIT && !is_prime(rest)) {
            // cannot happen: all prime factors <= 1e6 were removed
            throw std::logic_error("factorize: trial division left a small composite");
        }
        std::vector<u64> big;
        factor_rec(rest, big);
        std::sort(big.begin(), big.end());
        for (size_t i = 0; i < big.size();) {
            size_t j = i;
            while (j < big.size() && big[j] == big[i]) ++j;
            f.factors.push_back({big[i], int(j - i)});
            i = j;
        }
    }
    return f;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (const auto& [p, k] : f.factors) {
        size_t base = ds.size();
        u64 pe = 1;
        for (int i = 1; i <= k; ++i) {
            pe = checked_mul(pe, p);
            for (size_t j = 0; j < base; ++j) ds.push_back(checked_mul(ds[j], pe));
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

u64 divisor_count(const Factorization& f) {
    u64 c = 1;
    for (const auto& [p, k] : f.factors) c *= u64(k + 1);
    return c;
}

// ----- sums of two odd squares -----

std::vector<std::pair<u64, u64>> two_square_decompositions(u64 T, bool require_gt1) {
    std::vector<std::pair<u64, u64>> out;
    if (T % 2 != 0) return out;
    for (u64 U = require_gt1 ? 3 : 1; u128(U) * U * 2 <= T; U += 2) {
        u64 rest = T - U * U;
        if (auto V = is_square(rest)) {
            if (*V % 2 == 1 && std::gcd(U, *V) == 1) out.emplace_back(U, *V);
        }
    }
    return out;
}

} // namespace oddedge
