#pragma once
// ----- perfect cuboid candidates from representation triples -----
// Three representations of the same odd n,
//   n = s1(e^2-f^2) = s2(g^2-h^2) = s3(k^2-l^2),
// with (s1 e f)^2 = (s2 g h)^2 + (s3 k l)^2 assemble a perfect cuboid:
//   edges (n, 2 s2 g h, 2 s3 k l)
//   face diagonals s2(g^2+h^2), s3(k^2+l^2), 2 s1 e f
//   body diagonal s1(e^2+f^2)
// The six conjecture indices are the scale patterns of (s1,s2,s3):
//   1 (1,1,1)   2 (>1,1,1)   3 (1,>1,1)   4 (1,>1,>1)   5 (>1,>1,1)   6 (>1,>1,>1)
// No hit has ever been found; any hit is an anomaly and must survive an
// independent arbitrary-precision recheck before it is reported.

#include "oddedge/pythag.hpp"

namespace oddedge {

struct CuboidWitness {
    u64 n = 0;
    DiffSquareRep repE{}; // left side of the certificate (body-diagonal rep)
    DiffSquareRep repG{}; // right side; repG >= repK by (t,e,f), so a single
    DiffSquareRep repK{}; // scaled rep always sits in repG
    int conjecture = 0;   // 1..6
    bool operator==(const CuboidWitness&) const = default;
};

struct PerfectCuboid {
    u64 a = 0, b = 0, c = 0;          // edges, a odd
    u64 d_ab = 0, d_ac = 0, d_bc = 0; // face diagonals
    u64 g = 0;                        // body diagonal
    bool operator==(const PerfectCuboid&) const = default;
};

enum class CuboidFail {
    none,
    positivity,
    face_ab,
    face_ac,
    face_bc,
    body, // a^2 + b^2 + c^2 != g^2
};

struct CuboidVerdict {
    CuboidFail failed = CuboidFail::none;
    bool ok() const { return failed == CuboidFail::none; }
    const char* describe() const;
};

// mask bit k (1..6) selects conjecture k
constexpr unsigned ALL_CONJECTURES = 0x7E;

int cuboid_conjecture_index(u64 s1, u64 s2, u64 s3);

// All certificate triples over the representations of odd n, restricted to
// the selected conjectures.  strict demands f > 1 on every representation.
// Order: (repE, repG, repK) lexicographic.
std::vector<CuboidWitness> search_cuboid_witnesses(u64 n, unsigned conj_mask = ALL_CONJECTURES,
                                                   bool strict = false);
std::vector<CuboidWitness> search_cuboid_witnesses(u64 n, const std::vector<DiffSquareRep>& reps,
                                                   unsigned conj_mask = ALL_CONJECTURES,
                                                   bool strict = false);

PerfectCuboid build_perfect_cuboid(const CuboidWitness& w);

// Exact check of the three face identities (order ab, ac, bc) and the body
// identity on named fields.
CuboidVerdict verify_perfect_cuboid(const PerfectCuboid& c);

// Seven raw lengths; face diagonals are assignment-matched like the brick
// tuple path, then the body identity is checked last.
CuboidVerdict verify_cuboid_tuple(u64 a, u64 b, u64 c, u64 d1, u64 d2, u64 d3, u64 g);

// Independent recheck of a witness with arbitrary-precision integers (GMP):
// representations multiply back to n, the certificate holds, and the
// assembled cuboid passes all four identities.  Never trusts the fixed-width
// path that produced the witness.
bool revalidate_witness_exact(const CuboidWitness& w);

} // namespace oddedge
