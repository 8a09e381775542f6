#pragma once
// ----- exact integer arithmetic -----
// Pure, deterministic, floating-point free.  Certificate sums reach the
// fourth power of the scanned values, so the 128-bit helpers carry the
// hot paths.  Overflow policy: every routine either documents why its
// intermediates fit or narrows through checked_u64 and throws.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oddedge {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string to_string_u128(u128 x);

// Narrow a 128-bit value back to 64 bits, throwing std::overflow_error
// when the value does not fit.
u64 checked_u64(u128 x);

// a*b with overflow detection (throws std::overflow_error).
u64 checked_mul(u64 a, u64 b);

// floor(sqrt(x)) by integer Newton iteration seeded from the bit width.
u64 isqrt(u64 x);
u128 isqrt128(u128 x);

// Exact square root if x is a perfect square, nullopt otherwise.
// Cheap residue filters (mod 256, mod 45045) reject most non-squares
// before the Newton iteration runs.
std::optional<u64> is_square(u64 x);
std::optional<u128> is_square128(u128 x);

u64 gcd3(u64 a, u64 b, u64 c);

// Deterministic Miller-Rabin, valid over the whole u64 range.
bool is_prime(u64 n);

struct PrimePower {
    u64 p;
    int k;
    bool operator==(const PrimePower&) const = default;
};

// Prime powers in ascending p; product reproduces n exactly.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;
};

// Trial division by sieved primes up to 1e6; larger cofactors go through
// Miller-Rabin and Brent's cycle-finding variant of Pollard rho.
Factorization factorize(u64 n);

// All divisors of f.n in ascending order.
std::vector<u64> divisors(const Factorization& f);

u64 divisor_count(const Factorization& f);

// All unordered pairs U <= V with U^2 + V^2 = T, both odd, gcd(U,V) = 1,
// ascending in U.  T odd has no such pair (odd^2 + odd^2 is even), so the
// result is empty.  With require_gt1 the pair (1, V) is excluded.
std::vector<std::pair<u64, u64>> two_square_decompositions(u64 T, bool require_gt1);

} // namespace oddedge
