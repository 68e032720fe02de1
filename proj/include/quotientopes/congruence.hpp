#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "quotientopes/braid_fan.hpp"
#include "quotientopes/errors.hpp"
#include "quotientopes/permutation.hpp"
#include "quotientopes/shards.hpp"

namespace qtp {

// A lattice congruence of the weak order, encoded by its upper ideal of
// shards: an adjacent pair is merged exactly when its wall's shard is
// missing from the ideal.
struct Congruence {
    ShardIdeal ideal;
    int n() const { return ideal.n(); }
};

inline Congruence full_congruence(int n) { return {ShardIdeal(n, all_shards(n))}; }

// Up arcs Sigma(i,j,]i,j[). Already an upper ideal: any forcer of an up arc
// traces the full open interval, hence is an up arc.
inline Congruence sylvester_congruence(int n) {
    check_ground_set(n);
    std::vector<Shard> members;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) members.emplace_back(i, j, interval_interior_bits(i, j));
    return {ShardIdeal(n, std::move(members))};
}

// Down arcs Sigma(i,j,{}).
inline Congruence anti_sylvester_congruence(int n) {
    check_ground_set(n);
    std::vector<Shard> members;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) members.emplace_back(i, j, 0u);
    return {ShardIdeal(n, std::move(members))};
}

// Basic shards only: the smallest essential ideal.
inline Congruence cube_congruence(int n) {
    check_ground_set(n);
    std::vector<Shard> members;
    for (int i = 1; i < n; ++i) members.emplace_back(i, i + 1, 0u);
    return {ShardIdeal(n, std::move(members))};
}

namespace detail {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Partition of S_n into congruence classes. Classes are sorted by their
// representative (the unique weak-order minimum); members are sorted
// lexicographically inside each class.
struct ClassPartition {
    int n = 0;
    std::optional<Congruence> congruence;
    std::vector<std::vector<Permutation>> classes;
    std::vector<Permutation> representatives;
    std::vector<int> class_of_rank;

    int class_count() const { return static_cast<int>(classes.size()); }
    int class_index(const Permutation& p) const { return class_of_rank[perm_rank(p)]; }
};

namespace detail {

// Shared tail of both partition routes: group by DSU root, find each class's
// weak-order minimum and assert it is unique and below every member, then
// order classes by representative.
inline ClassPartition finish_partition(int n, DisjointSets& dsu,
                                       const std::vector<Permutation>& perms,
                                       std::optional<Congruence> congruence) {
    std::map<int, std::vector<int>> groups;
    for (size_t r = 0; r < perms.size(); ++r) groups[dsu.find(static_cast<int>(r))].push_back(static_cast<int>(r));

    struct Entry {
        Permutation rep;
        std::vector<Permutation> members;
    };
    std::vector<Entry> entries;
    for (auto& [root, ranks] : groups) {
        std::vector<Permutation> members;
        members.reserve(ranks.size());
        for (int r : ranks) members.push_back(perms[r]);
        std::sort(members.begin(), members.end());
        int best = 0, best_inv = inversion_set(members[0]).size(), min_count = 1;
        for (size_t k = 1; k < members.size(); ++k) {
            int inv = inversion_set(members[k]).size();
            if (inv < best_inv) {
                best = static_cast<int>(k);
                best_inv = inv;
                min_count = 1;
            } else if (inv == best_inv) {
                ++min_count;
            }
        }
        if (min_count != 1)
            throw verification_error("class of " + members[0].to_string() +
                                     " has no unique weak-order minimum");
        for (const Permutation& q : members)
            if (!weak_leq(members[best], q))
                throw verification_error("class minimum " + members[best].to_string() +
                                         " not below member " + q.to_string());
        entries.push_back({members[best], std::move(members)});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.rep < b.rep; });

    ClassPartition part;
    part.n = n;
    part.congruence = std::move(congruence);
    part.class_of_rank.assign(perms.size(), -1);
    for (auto& e : entries) {
        int idx = part.class_count();
        for (const Permutation& q : e.members) part.class_of_rank[perm_rank(q)] = idx;
        part.representatives.push_back(e.rep);
        part.classes.push_back(std::move(e.members));
    }
    return part;
}

}  // namespace detail

// Congruence classes by sweeping every wall of the weak order: merge the two
// sides when the wall's shard is outside the ideal. Afterwards every wall
// whose shard is in the ideal must separate distinct classes; a violation
// would mean the ideal does not define a congruence and is flagged, not fixed.
inline ClassPartition classes_from_ideal(const Congruence& c) {
    int n = c.n();
    if (n > 7) throw scale_guard_error("class partition supports n <= 7");
    std::vector<Permutation> perms = all_permutations(n);
    detail::DisjointSets dsu(perms.size());
    for (const Permutation& p : perms) {
        for (int pos = 1; pos < n; ++pos) {
            if (p.value_at(pos) >= p.value_at(pos + 1)) continue;
            Permutation q = p.adjacent_swap(pos);
            Wall w = separating_wall(p, q);
            if (!c.ideal.contains(w.shard))
                dsu.unite(static_cast<int>(perm_rank(p)), static_cast<int>(perm_rank(q)));
        }
    }
    ClassPartition part = detail::finish_partition(n, dsu, perms, c);
    for (const Permutation& p : perms) {
        for (int pos = 1; pos < n; ++pos) {
            if (p.value_at(pos) >= p.value_at(pos + 1)) continue;
            Permutation q = p.adjacent_swap(pos);
            Wall w = separating_wall(p, q);
            if (c.ideal.contains(w.shard) && part.class_index(p) == part.class_index(q))
                throw verification_error("wall " + p.to_string() + "|" + q.to_string() +
                                         " with shard " + format_shard(w.shard) +
                                         " in the ideal fell inside one class");
        }
    }
    return part;
}

// Hasse diagram of the quotient lattice. Cover edges point from the lower
// class to the upper one and carry one witnessing wall shard.
struct QuotientPoset {
    int class_count = 0;
    std::vector<std::pair<int, int>> cover_edges;
    std::map<std::pair<int, int>, Shard> wall_shards;
    int bottom_class = -1;
    int top_class = -1;
};

inline QuotientPoset quotient_covers(const ClassPartition& part) {
    if (!part.congruence) throw validation_error("partition carries no congruence");
    const Congruence& c = *part.congruence;
    QuotientPoset poset;
    poset.class_count = part.class_count();
    for (const std::vector<Permutation>& cls : part.classes) {
        for (const Permutation& p : cls) {
            for (int pos = 1; pos < part.n; ++pos) {
                if (p.value_at(pos) >= p.value_at(pos + 1)) continue;
                Permutation q = p.adjacent_swap(pos);
                Wall w = separating_wall(p, q);
                if (!c.ideal.contains(w.shard)) continue;
                std::pair<int, int> e(part.class_index(p), part.class_index(q));
                if (poset.wall_shards.emplace(e, w.shard).second) poset.cover_edges.push_back(e);
            }
        }
    }
    std::sort(poset.cover_edges.begin(), poset.cover_edges.end());
    poset.bottom_class = part.class_index(Permutation::identity(part.n));
    poset.top_class = part.class_index(Permutation::longest(part.n));
    return poset;
}

// Independent route to the sylvester classes: the rewriting relation that
// exchanges an adjacent pair a..c (a < c) whenever some value strictly
// between them occurs later in the word. n <= 7.
inline ClassPartition sylvester_classes_rewriting(int n) {
    check_ground_set(n);
    if (n > 7) throw scale_guard_error("rewriting route supports n <= 7");
    std::vector<Permutation> perms = all_permutations(n);
    detail::DisjointSets dsu(perms.size());
    for (const Permutation& p : perms) {
        for (int pos = 1; pos < n; ++pos) {
            int a = p.value_at(pos), c = p.value_at(pos + 1);
            if (a >= c) continue;
            bool witness = false;
            for (int q = pos + 2; q <= n; ++q)
                if (a < p.value_at(q) && p.value_at(q) < c) { witness = true; break; }
            if (witness)
                dsu.unite(static_cast<int>(perm_rank(p)),
                          static_cast<int>(perm_rank(p.adjacent_swap(pos))));
        }
    }
    return detail::finish_partition(n, dsu, perms, std::nullopt);
}

// Direct lattice-theoretic check that a partition is a congruence: meets and
// joins of related pairs stay related. Exhaustive over all pairs, n <= 4.
inline bool is_lattice_congruence_oracle(const ClassPartition& part) {
    int n = part.n;
    if (n > 4) throw scale_guard_error("congruence oracle supports n <= 4");
    std::vector<Permutation> perms = all_permutations(n);
    const int64_t m = static_cast<int64_t>(perms.size());
    std::vector<int> meet_table(m * m), join_table(m * m);
    for (int64_t x = 0; x < m; ++x)
        for (int64_t y = 0; y < m; ++y) {
            MeetJoin mj = lattice_meet_join_oracle(perms[x], perms[y]);
            meet_table[x * m + y] = static_cast<int>(perm_rank(mj.meet));
            join_table[x * m + y] = static_cast<int>(perm_rank(mj.join));
        }
    auto cls = [&](int64_t rank) { return part.class_of_rank[rank]; };
    for (const std::vector<Permutation>& X : part.classes) {
        for (const std::vector<Permutation>& Y : part.classes) {
            int64_t x0 = perm_rank(X[0]), y0 = perm_rank(Y[0]);
            for (const Permutation& x : X) {
                int64_t xr = perm_rank(x);
                for (const Permutation& y : Y) {
                    int64_t yr = perm_rank(y);
                    if (cls(meet_table[xr * m + yr]) != cls(meet_table[x0 * m + y0])) return false;
                    if (cls(join_table[xr * m + yr]) != cls(join_table[x0 * m + y0])) return false;
                }
            }
        }
    }
    return true;
}

// Arcs leaving a class downward: shards of walls from a member to a lower
// cover outside the class. These are exactly the descent walls of the class
// minimum whose shard lies in the ideal.
inline std::vector<Shard> arc_diagram_of_class(const ClassPartition& part, int class_index) {
    if (!part.congruence) throw validation_error("partition carries no congruence");
    if (class_index < 0 || class_index >= part.class_count())
        throw validation_error("class index out of range");
    std::set<Shard> arcs;
    for (const Permutation& p : part.classes[class_index]) {
        for (int pos = 1; pos < part.n; ++pos) {
            if (p.value_at(pos) <= p.value_at(pos + 1)) continue;
            Wall w = separating_wall(p, p.adjacent_swap(pos));
            if (part.congruence->ideal.contains(w.shard)) arcs.insert(w.shard);
        }
    }
    return std::vector<Shard>(arcs.begin(), arcs.end());
}

// Geometric crossing of two arcs drawn on a line of dots, each passing above
// the dots in its side set and below the rest. At every dot of the common
// interval where the vertical order of the two arcs is determined, record
// which is higher; the arcs cross exactly when both orders occur. Dots where
// both arcs terminate determine nothing and are skipped.
inline bool arcs_cross(const Shard& a, const Shard& b) {
    if (a == b) return false;
    int lo = std::max(a.i, b.i), hi = std::min(a.j, b.j);
    bool seen_a_above = false, seen_b_above = false;
    auto side = [](const Shard& s, int k) { return ((s.s_bits >> (k - 1)) & 1u) ? +1 : -1; };
    for (int k = lo; k <= hi; ++k) {
        bool end_a = (k == a.i || k == a.j), end_b = (k == b.i || k == b.j);
        int sign = 0;  // +1: a above b, -1: b above a
        if (end_a && end_b) continue;
        if (end_a) sign = -side(b, k);
        else if (end_b) sign = side(a, k);
        else if (side(a, k) != side(b, k)) sign = side(a, k);
        if (sign > 0) seen_a_above = true;
        if (sign < 0) seen_b_above = true;
    }
    return seen_a_above && seen_b_above;
}

// A valid arc diagram has pairwise noncrossing arcs with distinct left
// endpoints and distinct right endpoints.
inline bool is_noncrossing_diagram(const std::vector<Shard>& arcs) {
    for (size_t x = 0; x < arcs.size(); ++x)
        for (size_t y = x + 1; y < arcs.size(); ++y) {
            if (arcs[x].i == arcs[y].i || arcs[x].j == arcs[y].j) return false;
            if (arcs_cross(arcs[x], arcs[y])) return false;
        }
    return true;
}

}  // namespace qtp
