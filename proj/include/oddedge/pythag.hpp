#pragma once
// ----- difference-of-squares representations -----
// Every Pythagorean triple with odd edge n factors as t * (e^2-f^2, 2ef,
// e^2+f^2) with gcd(e,f) = 1, e > f >= 1 and t | n.  These (t,e,f)
// representations are the raw material for the brick and cuboid searches.

#include <compare>
#include <cstdint>

#include "oddedge/arith.hpp"

namespace oddedge {

struct PythTriple {
    u64 x, y, z; // odd leg, even leg, hypotenuse
    u64 r;       // gcd(x,y,z); the triple is r times a primitive one
    bool operator==(const PythTriple&) const = default;
};

struct DiffSquareRep {
    u64 t, e, f; // n = t*(e^2 - f^2), gcd(e,f) = 1, e > f >= 1
    auto operator<=>(const DiffSquareRep&) const = default;
};

// Primitive triple from the classic parametrization u > v >= 1, gcd(u,v) = 1,
// opposite parity.  Violations throw std::invalid_argument naming the
// condition.
PythTriple param_primitive_triple(u64 u, u64 v);

// All representations of odd n, ordered by (t ascending, e ascending).
// (t,e) determines f, so the order is total.  n = 1 has none.
std::vector<DiffSquareRep> diff_square_reps(u64 n);
std::vector<DiffSquareRep> diff_square_reps(const Factorization& f);

// Number of Pythagorean triples with odd edge n, by the divisor-sum
// formula: sum over divisors z != 1 of n of 2^(omega(z)-1), where omega
// counts distinct primes.  Equals diff_square_reps(n).size().
u64 count_triples_odd_edge(const Factorization& f);

// The triples themselves: (n, 2tef, t(e^2+f^2)) per representation, in
// representation order.
std::vector<PythTriple> triples_with_odd_edge(u64 n);

} // namespace oddedge
