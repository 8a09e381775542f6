#pragma once
// ----- Euler bricks from representation pairs -----
// Two distinct representations n = t1(e1^2-f1^2) = t2(e2^2-f2^2) whose
// products satisfy (t1 e1 f1)^2 + (t2 e2 f2)^2 = d^2 yield the brick
//   edges (n, 2 t1 e1 f1, 2 t2 e2 f2)
//   face diagonals t1(e1^2+f1^2), t2(e2^2+f2^2), 2d
// Type 1: both scales 1.  Type 2: exactly one scale 1.  Type 3: none.

#include "oddedge/pythag.hpp"

namespace oddedge {

struct BrickWitness {
    u64 n = 0;
    DiffSquareRep rep1{}, rep2{}; // canonical: rep1 < rep2 by (t,e)
    u64 d = 0;                    // sqrt of the certificate sum
    int type = 0;                 // 1..3 from the scale pattern
    bool operator==(const BrickWitness&) const = default;
};

struct EulerBrick {
    u64 a = 0, b = 0, c = 0;          // a odd, b and c even
    u64 d_ab = 0, d_ac = 0, d_bc = 0; // face diagonal over each edge pair
    bool primitive = false;           // gcd(a,b,c) == 1
    bool operator==(const EulerBrick&) const = default;
};

enum class BrickFail {
    none,
    positivity, // some length is zero
    edge_ab,    // a^2 + b^2 != d_ab^2
    edge_ac,
    edge_bc,
};

struct BrickVerdict {
    BrickFail failed = BrickFail::none;
    bool ok() const { return failed == BrickFail::none; }
    const char* describe() const;
};

enum class ClassifyStatus {
    ok,
    not_euler_brick,    // a face diagonal is not an integer
    no_odd_edge,        // all edges even after removing the common factor
    multiple_odd_edges, // two or more odd edges after removing the common factor
    no_representation,  // diagonals are integral but no (t,e,f) recovers; anomaly
};

struct ClassifyResult {
    ClassifyStatus status = ClassifyStatus::ok;
    u64 scale = 1; // gcd removed from the input edges
    BrickWitness witness{};
    bool ok() const { return status == ClassifyStatus::ok; }
};

const char* classify_status_name(ClassifyStatus s);

// All witnesses among pairs of distinct representations of odd n, ordered by
// (rep1, rep2).  strict additionally demands f > 1 on both representations.
std::vector<BrickWitness> search_brick_witnesses(u64 n, bool strict = false);
std::vector<BrickWitness> search_brick_witnesses(u64 n, const std::vector<DiffSquareRep>& reps,
                                                 bool strict = false);

EulerBrick build_brick(const BrickWitness& w);

// Both even edges equal.  A true certificate forbids this (d^2 = 2m^2 has no
// positive solution); the flag exists so a corrupted witness cannot slip into
// census counts unnoticed.
bool witness_degenerate(const BrickWitness& w);

bool brick_primitive(const EulerBrick& b);

// Exact check of the three face identities on named fields, in the order
// (a,b), (a,c), (b,c); the verdict carries the first failure.
BrickVerdict verify_brick(const EulerBrick& b);

// Six raw lengths: the three diagonals are matched to edge pairs by
// identity-consistent assignment before checking, so callers may pass the
// diagonals in any order.
BrickVerdict verify_brick_tuple(u64 a, u64 b, u64 c, u64 d1, u64 d2, u64 d3);

// Edges in any order.  Removes gcd(x,y,z), finds the odd edge, and recovers
// the representation pair from the face diagonals.
ClassifyResult classify_brick(u64 x, u64 y, u64 z);

} // namespace oddedge
