#pragma once
// ----- biquadratic square sums -----
// Three search families over odd coprime pairs (P,Q) and (R,S), all > 1:
//   1: P^4 + Q^4 + R^4 + S^4           = T^2
//   2: P^4 + Q^4 + b^2 (R^4 + S^4)     = T^2,  odd b > 1
//   3: a^2 (P^4 + Q^4) + b^2 (R^4+S^4) = T^2,  odd a, b > 1
// Each hit is annotated with every decomposition T = d (U^2 + V^2) over the
// odd divisors d of T (d = 1 is the direct kind).  When the weighted products
// line up, a*P*Q == b*R*S == d*U*V, the hit feeds the perfect-cuboid pathway
// and is escalated as an anomaly.

#include "oddedge/arith.hpp"

namespace oddedge {

struct TwoSquareNote {
    bool scaled = false; // d > 1
    u64 d = 1, U = 0, V = 0;
    bool product_ok = false; // a*P*Q == b*R*S == d*U*V
    bool operator==(const TwoSquareNote&) const = default;
};

struct BiquadHit {
    int conjecture = 0; // 1..3
    u64 a = 1, b = 1;   // scales on the (P,Q) and (R,S) pairs; 1 when unscaled
    u64 P = 0, Q = 0, R = 0, S = 0;
    u64 T = 0;
    std::vector<TwoSquareNote> notes;
    bool operator==(const BiquadHit&) const = default;
};

// Canonical form: P < Q, R < S.  Family 1 is symmetric under pair swap, so
// (P,Q) <= (R,S) lexicographically; family 3 has the same symmetry including
// the scales, so (a,P,Q) <= (b,R,S).  Family 2 keeps the unscaled pair left.
bool biquad_hit_canonical(const BiquadHit& h);

// Re-derive the annotations for a hit whose T is already known.
// require_gt1 demands U, V > 1 exactly as the scaled form is written;
// relaxing it admits U or V = 1 for exploratory runs.
void annotate_hit(BiquadHit& h, bool require_gt1);

bool hit_anomalous(const BiquadHit& h); // any note with product_ok

// Independent arbitrary-precision recheck of the defining equation and the
// product chain of every note (GMP).
bool revalidate_hit_exact(const BiquadHit& h);

// All hits of one family with max(P,Q,R,S) <= bound and scales <= scale_bound,
// canonically ordered by (P, Q, a, R, S, b).
std::vector<BiquadHit> search_biquadratic(int conjecture, u64 bound, u64 scale_bound,
                                          bool require_gt1_notes);

// Hits whose canonical P equals the given value; the search driver shards
// and orders by this outermost variable.
std::vector<BiquadHit> biquad_hits_for(int conjecture, u64 P, u64 bound, u64 scale_bound,
                                       bool require_gt1_notes);

} // namespace oddedge
