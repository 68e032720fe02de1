#pragma once

#include <string>
#include <vector>

#include "quotientopes/errors.hpp"
#include "quotientopes/permutation.hpp"
#include "quotientopes/rational.hpp"
#include "quotientopes/shards.hpp"
#include "quotientopes/subset.hpp"

namespace qtp {

using RayVector = std::vector<int>;

// Integer normal of the braid-fan ray attached to R: r(R) = |R|*1 - n*chi_R.
// Lies in the sum-zero hyperplane; the empty and full sets give the zero
// vector, which makes the dependence identity below hold without special cases.
inline RayVector ray_vector(const Subset& R) {
    int n = R.n(), size = R.size();
    RayVector v(n);
    for (int k = 1; k <= n; ++k) v[k - 1] = size - (R.contains(k) ? n : 0);
    return v;
}

inline RationalVector to_rational(const RayVector& v) {
    RationalVector out(v.size());
    for (size_t k = 0; k < v.size(); ++k) out[k] = v[k];
    return out;
}

// Rays of the chamber of p: the proper nonempty prefix sets p({1..k}).
inline std::vector<Subset> chamber_rays(const Permutation& p) {
    std::vector<Subset> out;
    for (int k = 1; k < p.n(); ++k) out.push_back(p.prefix_set(k));
    return out;
}

// Wall between two adjacent chambers. lower has the swapped values in
// increasing order; R is lower's prefix through the swap (contains k),
// Rp is upper's (contains kp).
struct Wall {
    Permutation lower;
    Permutation upper;
    Subset R;
    Subset Rp;
    int k;
    int kp;
    Shard shard;
};

// The two permutations must differ by one adjacent transposition. The wall's
// shard is determined by the swapped values k < kp and the set of values
// between them already placed before the swap position.
inline Wall separating_wall(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw validation_error("permutations over different n");
    int n = a.n();
    int pos = 0;
    for (int p = 1; p <= n; ++p) {
        if (a.value_at(p) != b.value_at(p)) {
            pos = p;
            break;
        }
    }
    if (pos == 0 || pos == n || a.value_at(pos) != b.value_at(pos + 1) ||
        a.value_at(pos + 1) != b.value_at(pos))
        throw validation_error("chambers " + a.to_string() + ", " + b.to_string() +
                               " are not adjacent");
    for (int p = pos + 2; p <= n; ++p)
        if (a.value_at(p) != b.value_at(p))
            throw validation_error("chambers " + a.to_string() + ", " + b.to_string() +
                                   " are not adjacent");

    const bool a_is_lower = a.value_at(pos) < a.value_at(pos + 1);
    const Permutation& lower = a_is_lower ? a : b;
    const Permutation& upper = a_is_lower ? b : a;
    int k = lower.value_at(pos), kp = lower.value_at(pos + 1);
    Subset common = lower.prefix_set(pos - 1);
    Shard shard(k, kp, common.bits() & interval_interior_bits(k, kp));
    return Wall{lower, upper, lower.prefix_set(pos), upper.prefix_set(pos), k, kp, shard};
}

// Across any wall, r(R) + r(R') = r(R intersect R') + r(R union R') with all
// coefficients 1; the zero convention covers prefixes of length 0 and n.
inline bool check_linear_dependence(const Permutation& a, const Permutation& b) {
    Wall w = separating_wall(a, b);
    RayVector lhs = ray_vector(w.R), rhs = ray_vector(w.Rp);
    RayVector meet = ray_vector(w.R & w.Rp), join = ray_vector(w.R | w.Rp);
    for (int c = 0; c < a.n(); ++c)
        if (lhs[c] + rhs[c] != meet[c] + join[c]) return false;
    return true;
}

// Membership of the ray of R in the closed shard Sigma(i,j,S): either i and j
// both lie in R and S is contained in R's trace on the open interval, or both
// avoid R and R's trace is contained in S.
inline bool ray_in_shard(const Subset& R, const Shard& s) {
    if (!R.is_proper_nonempty())
        throw validation_error("ray membership needs a proper nonempty subset");
    if (s.j > R.n()) throw validation_error("shard exceeds the subset's ground set");
    uint32_t trace = R.bits() & s.interior_bits();
    bool i_in = R.contains(s.i), j_in = R.contains(s.j);
    if (i_in && j_in) return (s.s_bits & ~trace) == 0;
    if (!i_in && !j_in) return (trace & ~s.s_bits) == 0;
    return false;
}

}  // namespace qtp
