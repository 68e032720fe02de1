#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quotientopes/braid_fan.hpp"
#include "quotientopes/congruence.hpp"
#include "quotientopes/errors.hpp"
#include "quotientopes/rational.hpp"
#include "quotientopes/weights.hpp"

namespace qtp {

// Whether the wall inequality between R and R' holds strictly, with equality,
// or fails, judged from the heights of the pair and of their meet and join.
enum class WallRelation { strict, equal, violated };

// gamma(Sigma, R) = 1 when exactly one endpoint of the shard's interval lies
// in R and R's trace on the open interval equals the shard's side set.
inline int contribution(const Shard& s, const Subset& R) {
    if (s.j > R.n()) throw validation_error("shard exceeds the subset's ground set");
    int endpoints = (R.contains(s.i) ? 1 : 0) + (R.contains(s.j) ? 1 : 0);
    if (endpoints != 1) return 0;
    return (R.bits() & s.interior_bits()) == s.s_bits ? 1 : 0;
}

// Height per subset of [n], indexed by bitmask. The empty and full sets are
// pinned at zero, matching the zero ray vectors.
struct HeightFunction {
    int n = 0;
    std::vector<Rational> by_bits;  // size 2^n

    const Rational& at(const Subset& R) const { return by_bits[R.bits()]; }
};

// h(R) = sum of f over the ideal's shards contributing to R. Requires a
// dominance certificate on f that covers this congruence.
inline HeightFunction heights(const Congruence& c, const WeightFunction& f) {
    int n = c.n();
    if (f.n != n) throw validation_error("weights sized for different n");
    if (f.certificate == DominanceCertificate::none)
        throw validation_error("weights carry no dominance certificate");
    if (f.certificate == DominanceCertificate::per_ideal &&
        f.certified_ideal != std::optional(c.ideal.members()))
        throw validation_error("per-ideal dominance certificate is for another ideal");
    HeightFunction h;
    h.n = n;
    h.by_bits.assign(size_t{1} << n, Rational(0));
    for (uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
        Subset R(n, bits);
        Rational sum = 0;
        for (const Shard& s : c.ideal.members())
            if (contribution(s, R)) sum += f.at(s);
        h.by_bits[bits] = sum;
    }
    return h;
}

inline Rational wall_gap(const HeightFunction& h, const Wall& w) {
    return h.at(w.R) + h.at(w.Rp) - h.at(w.R & w.Rp) - h.at(w.R | w.Rp);
}

// Submodularity across one wall. With heights from dominant weights this is
// equal exactly when the wall's shard is outside the ideal, strict when
// inside, and never violated.
inline WallRelation check_wall_inequality(const HeightFunction& h, const Permutation& a,
                                          const Permutation& b) {
    Rational gap = wall_gap(h, separating_wall(a, b));
    if (gap > 0) return WallRelation::strict;
    if (gap == 0) return WallRelation::equal;
    return WallRelation::violated;
}

inline Rational dot_ray(const RayVector& r, const RationalVector& x) {
    if (r.size() != x.size()) throw validation_error("dot of vectors with different lengths");
    Rational s = 0;
    for (size_t k = 0; k < r.size(); ++k) s += Rational(r[k]) * x[k];
    return s;
}

// Vertex of the chamber system of one permutation: the unique point where all
// n-1 prefix inequalities are tight, pinned to the sum-zero hyperplane.
inline RationalVector chamber_vertex(const Permutation& p, const HeightFunction& h) {
    int n = p.n();
    RationalMatrix A(n, n);
    RationalVector b(n);
    for (int k = 1; k < n; ++k) {
        RayVector r = ray_vector(p.prefix_set(k));
        for (int c = 0; c < n; ++c) A.at(k - 1, c) = r[c];
        b[k - 1] = h.at(p.prefix_set(k));
    }
    for (int c = 0; c < n; ++c) A.at(n - 1, c) = 1;
    b[n - 1] = 0;
    return solve_linear_system(A, b);
}

inline RationalVector class_vertex(const ClassPartition& part, const HeightFunction& h,
                                   int class_index) {
    return chamber_vertex(part.representatives[class_index], h);
}

// Direction with strictly increasing coordinates summing to zero; lies in the
// interior of the identity's chamber, so no edge of any build is orthogonal
// to it (walls sit inside coordinate-equality hyperplanes).
inline RayVector orientation_direction(int n) {
    check_ground_set(n);
    RayVector a(n);
    for (int k = 1; k <= n; ++k) a[k - 1] = 2 * k - n - 1;
    return a;
}

struct Quotientope {
    Congruence congruence;
    ClassPartition classes;
    QuotientPoset poset;
    HeightFunction height;
    std::vector<RationalVector> vertices;         // one per class
    std::vector<std::vector<Subset>> tight_sets;  // per class, sorted by bits
    std::vector<Subset> facet_normals;
    std::vector<std::pair<int, int>> edges;  // cover pairs (lower, upper)
    int dimension = 0;
    char orientation_sign = '-';

    int n() const { return congruence.n(); }
};

// Construction pipeline: classes, covers, heights, one vertex per class, then
// full verification of the inequality system. Every vertex must satisfy every
// inequality (a failure aborts with the witness), facets are the normals
// whose tight vertices span one dimension less than the polytope, and every
// cover of the quotient must be a geometric edge.
inline Quotientope build_quotientope(const Congruence& c, const WeightFunction& f) {
    int n = c.n();
    Quotientope q{c, classes_from_ideal(c), {}, heights(c, f), {}, {}, {}, {}, 0, '-'};
    q.poset = quotient_covers(q.classes);

    const int m = q.classes.class_count();
    std::vector<Subset> proper;
    for (uint32_t bits = 1; bits + 1 < (1u << n); ++bits) proper.emplace_back(n, bits);
    std::vector<RayVector> rays;
    rays.reserve(proper.size());
    for (const Subset& R : proper) rays.push_back(ray_vector(R));

    for (int X = 0; X < m; ++X) q.vertices.push_back(class_vertex(q.classes, q.height, X));

    q.tight_sets.resize(m);
    for (int X = 0; X < m; ++X) {
        for (size_t t = 0; t < proper.size(); ++t) {
            Rational lhs = dot_ray(rays[t], q.vertices[X]);
            const Rational& rhs = q.height.at(proper[t]);
            if (lhs > rhs)
                throw verification_error("vertex of class " +
                                         q.classes.representatives[X].to_string() +
                                         " violates the inequality of " + proper[t].to_string());
            if (lhs == rhs) q.tight_sets[X].push_back(proper[t]);
        }
    }

    q.dimension = affine_dimension(q.vertices);

    for (size_t t = 0; t < proper.size(); ++t) {
        std::vector<RationalVector> touching;
        for (int X = 0; X < m; ++X)
            if (std::binary_search(q.tight_sets[X].begin(), q.tight_sets[X].end(), proper[t]))
                touching.push_back(q.vertices[X]);
        if (affine_dimension(touching) == q.dimension - 1) q.facet_normals.push_back(proper[t]);
    }

    const bool essential = c.ideal.is_essential();
    for (const auto& [X, Y] : q.poset.cover_edges) {
        std::vector<Subset> common;
        std::set_intersection(q.tight_sets[X].begin(), q.tight_sets[X].end(),
                              q.tight_sets[Y].begin(), q.tight_sets[Y].end(),
                              std::back_inserter(common));
        std::vector<int> on_face;
        for (int Z = 0; Z < m; ++Z) {
            bool all_tight = true;
            for (const Subset& R : common)
                if (!std::binary_search(q.tight_sets[Z].begin(), q.tight_sets[Z].end(), R)) {
                    all_tight = false;
                    break;
                }
            if (all_tight) on_face.push_back(Z);
        }
        if (on_face != std::vector<int>{std::min(X, Y), std::max(X, Y)})
            throw verification_error("cover between classes " +
                                     q.classes.representatives[X].to_string() + " and " +
                                     q.classes.representatives[Y].to_string() +
                                     " is not a geometric edge");
        if (essential) {
            RationalMatrix span(static_cast<int>(common.size()), n);
            for (size_t r = 0; r < common.size(); ++r) {
                RayVector rv = ray_vector(common[r]);
                for (int col = 0; col < n; ++col) span.at(static_cast<int>(r), col) = rv[col];
            }
            if (matrix_rank(std::move(span)) != q.dimension - 1)
                throw verification_error("edge normals between classes " +
                                         q.classes.representatives[X].to_string() + " and " +
                                         q.classes.representatives[Y].to_string() +
                                         " do not span a wall");
        }
        q.edges.emplace_back(X, Y);
    }
    std::sort(q.edges.begin(), q.edges.end());

    // Orientation sign: covers all move the alpha functional the same way;
    // the sign stored is the one that makes the identity's class the source.
    RayVector alpha = orientation_direction(n);
    int consensus = 0;
    for (const auto& [X, Y] : q.edges) {
        Rational d = dot_ray(alpha, q.vertices[Y]) - dot_ray(alpha, q.vertices[X]);
        if (d == 0)
            throw verification_error("cover between classes " +
                                     q.classes.representatives[X].to_string() + " and " +
                                     q.classes.representatives[Y].to_string() +
                                     " is orthogonal to the orientation direction");
        int s = d > 0 ? +1 : -1;
        if (consensus == 0) consensus = s;
        if (s != consensus)
            throw verification_error("orientation direction is not consistent across covers");
    }
    q.orientation_sign = (consensus >= 0) ? '+' : '-';
    return q;
}

struct NormalFanReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
};

// Normal-fan certificate: for every class X and every proper nonempty R, the
// inequality of R holds at X's vertex, with equality exactly when R is a
// chamber ray of some member of X. Recomputed from scratch.
inline NormalFanReport verify_normal_fan(const Quotientope& q) {
    NormalFanReport report;
    int n = q.n();
    for (int X = 0; X < q.classes.class_count(); ++X) {
        std::set<Subset> expected;
        for (const Permutation& p : q.classes.classes[X])
            for (const Subset& R : chamber_rays(p)) expected.insert(R);
        for (uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
            Subset R(n, bits);
            Rational lhs = dot_ray(ray_vector(R), q.vertices[X]);
            const Rational& rhs = q.height.at(R);
            ++report.checked;
            std::string where = "class " + q.classes.representatives[X].to_string() + ", R=" +
                                R.to_string();
            if (lhs > rhs) {
                report.ok = false;
                report.failures.push_back(where + ": inequality violated");
            } else if (lhs == rhs && !expected.count(R)) {
                report.ok = false;
                report.failures.push_back(where + ": tight but not a chamber ray of the class");
            } else if (lhs < rhs && expected.count(R)) {
                report.ok = false;
                report.failures.push_back(where + ": chamber ray of the class but not tight");
            }
        }
    }
    return report;
}

struct OrientedGraph {
    char sign = '-';
    std::vector<std::pair<int, int>> directed_edges;  // (from, to), sorted
    std::vector<int> iso;                             // class index -> class index
    bool matches_covers = false;
    std::vector<int> sources;
    std::vector<int> sinks;
};

// Orient every geometric edge by the alpha functional, choosing the global
// direction that makes the identity's class the unique source. The digraph
// must reproduce the quotient's cover relation edge for edge.
inline OrientedGraph oriented_graph(const Quotientope& q) {
    RayVector alpha = orientation_direction(q.n());
    OrientedGraph g;
    g.sign = q.orientation_sign;
    for (const auto& [X, Y] : q.edges) {
        Rational d = dot_ray(alpha, q.vertices[Y]) - dot_ray(alpha, q.vertices[X]);
        if (d == 0) throw verification_error("edge orthogonal to the orientation direction");
        // sign '-': covers descend in alpha, so orient each edge downward in
        // alpha to recover lower -> upper; sign '+': upward.
        bool toward_Y = (q.orientation_sign == '-') ? (d < 0) : (d > 0);
        g.directed_edges.emplace_back(toward_Y ? X : Y, toward_Y ? Y : X);
    }
    std::sort(g.directed_edges.begin(), g.directed_edges.end());
    g.iso.resize(q.classes.class_count());
    for (int X = 0; X < q.classes.class_count(); ++X) g.iso[X] = X;
    std::vector<std::pair<int, int>> covers = q.poset.cover_edges;
    std::sort(covers.begin(), covers.end());
    g.matches_covers = (g.directed_edges == covers);
    std::vector<int> indeg(q.classes.class_count(), 0), outdeg(q.classes.class_count(), 0);
    for (const auto& [a, b] : g.directed_edges) {
        ++outdeg[a];
        ++indeg[b];
    }
    for (int X = 0; X < q.classes.class_count(); ++X) {
        if (indeg[X] == 0) g.sources.push_back(X);
        if (outdeg[X] == 0) g.sinks.push_back(X);
    }
    return g;
}

}  // namespace qtp
