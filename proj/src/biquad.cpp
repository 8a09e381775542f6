#include "oddedge/biquad.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <gmpxx.h>

namespace oddedge {

static u128 fourth(u64 x) {
    u128 s = u128(x) * x;
    return s * s;
}

bool biquad_hit_canonical(const BiquadHit& h) {
    if (!(h.P < h.Q && h.R < h.S)) return false;
    if (h.conjecture == 1 && std::make_pair(h.P, h.Q) > std::make_pair(h.R, h.S)) return false;
    if (h.conjecture == 3 && std::tie(h.a, h.P, h.Q) > std::tie(h.b, h.R, h.S)) return false;
    return true;
}

void annotate_hit(BiquadHit& h, bool require_gt1) {
    h.notes.clear();
    u64 odd_part = h.T >> std::countr_zero(h.T);
    std::vector<u64> odd_divs = divisors(factorize(odd_part));
    u128 left = u128(h.a) * h.P * h.Q;
    u128 right = u128(h.b) * h.R * h.S;
    for (u64 d : odd_divs) {
        for (auto [U, V] : two_square_decompositions(h.T / d, require_gt1)) {
            TwoSquareNote note{d > 1, d, U, V, false};
            note.product_ok = left == right && left == u128(d) * U * V;
            h.notes.push_back(note);
        }
    }
}

bool hit_anomalous(const BiquadHit& h) {
    return std::any_of(h.notes.begin(), h.notes.end(),
                       [](const TwoSquareNote& n) { return n.product_ok; });
}

bool revalidate_hit_exact(const BiquadHit& h) {
    auto odd_gt1 = [](u64 x) { return x > 1 && x % 2 == 1; };
    if (!odd_gt1(h.P) || !odd_gt1(h.Q) || !odd_gt1(h.R) || !odd_gt1(h.S)) return false;
    if (gcd(mpz_class(h.P), mpz_class(h.Q)) != 1) return false;
    if (gcd(mpz_class(h.R), mpz_class(h.S)) != 1) return false;
    if (h.T == 0 || h.T % 2 != 0) return false;
    if (!biquad_hit_canonical(h)) return false;
    switch (h.conjecture) {
        case 1:
            if (h.a != 1 || h.b != 1) return false;
            break;
        case 2:
            if (h.a != 1 || !odd_gt1(h.b)) return false;
            break;
        case 3:
            if (!odd_gt1(h.a) || !odd_gt1(h.b)) return false;
            break;
        default: return false;
    }
    // explicit return type: gmpxx expression templates must not outlive m
    auto p4 = [](u64 x) -> mpz_class {
        mpz_class m(x);
        return m * m * m * m;
    };
    mpz_class sum = mpz_class(h.a) * h.a * (p4(h.P) + p4(h.Q)) +
                    mpz_class(h.b) * h.b * (p4(h.R) + p4(h.S));
    if (sum != mpz_class(h.T) * h.T) return false;
    mpz_class left = mpz_class(h.a) * h.P * h.Q, right = mpz_class(h.b) * h.R * h.S;
    for (const auto& note : h.notes) {
        if (note.d == 0 || h.T % note.d != 0 || note.d % 2 == 0) return false;
        if (note.scaled != (note.d > 1)) return false;
        if (note.U % 2 == 0 || note.V % 2 == 0) return false;
        if (gcd(mpz_class(note.U), mpz_class(note.V)) != 1) return false;
        if (mpz_class(note.U) * note.U + mpz_class(note.V) * note.V != mpz_class(h.T / note.d))
            return false;
        bool chain = left == right && left == mpz_class(note.d) * note.U * note.V;
        if (note.product_ok != chain) return false;
    }
    return true;
}

// ----- enumeration -----

// With bound < 2^24 and scales < 2^14 the sum a^2(P^4+Q^4) + b^2(R^4+S^4)
// stays below 4 * 2^28 * 2^96 = 2^126; reject anything larger instead of
// risking silent wraparound.
static void check_ranges(u64 bound, u64 scale_bound) {
    if (bound >= (u64(1) << 24)) throw std::overflow_error("bound too large for exact 128-bit sums");
    if (scale_bound >= (u64(1) << 14))
        throw std::overflow_error("scale bound too large for exact 128-bit sums");
}

static void try_hit(std::vector<BiquadHit>& out, int conj, u64 a, u64 b, u64 P, u64 Q, u64 R,
                    u64 S, u128 sum, bool require_gt1_notes) {
    auto T = is_square128(sum);
    if (!T) return;
    BiquadHit h{conj, a, b, P, Q, R, S, checked_u64(*T), {}};
    if (h.T % 2 != 0) return; // cannot occur: sum == 4 mod 16 forces T even
    annotate_hit(h, require_gt1_notes);
    out.push_back(std::move(h));
}

std::vector<BiquadHit> biquad_hits_for(int conjecture, u64 P, u64 bound, u64 scale_bound,
                                       bool require_gt1_notes) {
    check_ranges(bound, scale_bound);
    std::vector<BiquadHit> out;
    if (P % 2 == 0 || P < 3 || P > bound) return out;
    for (u64 Q = P + 2; Q <= bound; Q += 2) {
        if (std::gcd(P, Q) != 1) continue;
        u128 base = fourth(P) + fourth(Q);
        switch (conjecture) {
            case 1:
                // (R,S) >= (P,Q) lexicographically
                for (u64 R = P; R <= bound; R += 2) {
                    u128 r4 = fourth(R);
                    for (u64 S = (R == P ? Q : R + 2); S <= bound; S += 2) {
                        if (S <= R || std::gcd(R, S) != 1) continue;
                        try_hit(out, 1, 1, 1, P, Q, R, S, base + r4 + fourth(S),
                                require_gt1_notes);
                    }
                }
                break;
            case 2:
                for (u64 b = 3; b <= scale_bound; b += 2) {
                    u128 b2 = u128(b) * b;
                    for (u64 R = 3; R <= bound; R += 2) {
                        u128 r4 = fourth(R);
                        for (u64 S = R + 2; S <= bound; S += 2) {
                            if (std::gcd(R, S) != 1) continue;
                            try_hit(out, 2, 1, b, P, Q, R, S, base + b2 * (r4 + fourth(S)),
                                    require_gt1_notes);
                        }
                    }
                }
                break;
            case 3:
                for (u64 a = 3; a <= scale_bound; a += 2) {
                    u128 left = u128(a) * a * base;
                    // (a,P,Q) <= (b,R,S) lexicographically
                    for (u64 b = a; b <= scale_bound; b += 2) {
                        u128 b2 = u128(b) * b;
                        u64 r_lo = (b == a) ? P : 3;
                        for (u64 R = r_lo; R <= bound; R += 2) {
                            u128 r4 = fourth(R);
                            u64 s_lo = (b == a && R == P) ? Q : R + 2;
                            for (u64 S = s_lo; S <= bound; S += 2) {
                                if (S <= R || std::gcd(R, S) != 1) continue;
                                try_hit(out, 3, a, b, P, Q, R, S, left + b2 * (r4 + fourth(S)),
                                        require_gt1_notes);
                            }
                        }
                    }
                }
                break;
            default: throw std::invalid_argument("biquad family index must be 1, 2 or 3");
        }
    }
    std::sort(out.begin(), out.end(), [](const BiquadHit& x, const BiquadHit& y) {
        return std::tie(x.P, x.Q, x.a, x.R, x.S, x.b) < std::tie(y.P, y.Q, y.a, y.R, y.S, y.b);
    });
    return out;
}

std::vector<BiquadHit> search_biquadratic(int conjecture, u64 bound, u64 scale_bound,
                                          bool require_gt1_notes) {
    std::vector<BiquadHit> out;
    for (u64 P = 3; P <= bound; P += 2) {
        auto part = biquad_hits_for(conjecture, P, bound, scale_bound, require_gt1_notes);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

} // namespace oddedge
