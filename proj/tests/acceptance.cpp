// Acceptance gate: ten structural criteria checked end to end at desk scale.
// One line per criterion; exits nonzero if any of them fails.

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quotientopes/quotientopes.hpp"

using namespace qtp;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<std::string()>& body) {
    std::string detail;
    bool pass = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    if (!pass) ++failures;
    std::cout << "criterion " << id << " (" << label << "): " << (pass ? "PASS" : "FAIL")
              << " - " << detail << "\n";
}

struct Fail : std::runtime_error {
    explicit Fail(const std::string& msg) : std::runtime_error(msg) {}
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Fail(msg);
}

std::vector<std::pair<Permutation, Permutation>> all_walls(int n) {
    std::vector<std::pair<Permutation, Permutation>> walls;
    for (const Permutation& p : all_permutations(n))
        for (int pos = 1; pos < n; ++pos)
            if (p.value_at(pos) < p.value_at(pos + 1)) walls.emplace_back(p, p.adjacent_swap(pos));
    return walls;
}

}  // namespace

int main() {
    // Shared corpus: every upper ideal of S_4, the essential ones built out.
    std::vector<ShardIdeal> all4 = enumerate_upper_ideals(4, false);
    std::vector<ShardIdeal> ess4 = enumerate_upper_ideals(4, true);
    WeightFunction f4 = default_weights(4);
    std::vector<Quotientope> built;
    built.reserve(ess4.size());
    for (const ShardIdeal& ideal : ess4) built.push_back(build_quotientope(Congruence{ideal}, f4));

    criterion(1, "essential congruence census", [&] {
        require(all4.size() == 60, "expected 60 upper ideals at n=4, got " +
                                       std::to_string(all4.size()));
        require(ess4.size() == 47, "expected 47 essential upper ideals at n=4, got " +
                                       std::to_string(ess4.size()));
        require(enumerate_upper_ideals(3, true).size() == 4, "essential count at n=3");
        return "60 upper ideals at n=4, 47 of them essential";
    });

    criterion(2, "preset class counts", [&] {
        require(classes_from_ideal(full_congruence(4)).class_count() == 24, "full: 24");
        require(classes_from_ideal(sylvester_congruence(4)).class_count() == 14, "sylvester: 14");
        require(classes_from_ideal(anti_sylvester_congruence(4)).class_count() == 14,
                "anti-sylvester: 14");
        require(classes_from_ideal(cube_congruence(4)).class_count() == 8, "cube: 8");
        int catalan[] = {0, 0, 2, 5, 14, 42, 132};
        for (int n = 2; n <= 6; ++n) {
            ClassPartition a = classes_from_ideal(sylvester_congruence(n));
            ClassPartition b = sylvester_classes_rewriting(n);
            require(a.class_count() == catalan[n],
                    "sylvester class count at n=" + std::to_string(n));
            require(a.classes == b.classes,
                    "shard route and rewriting route disagree at n=" + std::to_string(n));
        }
        return "24/14/14/8 at n=4; sylvester counts 2,5,14,42,132 by two routes";
    });

    criterion(3, "wall inequality classification", [&] {
        std::vector<std::pair<Permutation, Permutation>> walls = all_walls(4);
        int checked = 0;
        for (const ShardIdeal& ideal : all4) {
            Congruence c{ideal};
            HeightFunction h = heights(c, f4);
            for (const auto& [p, q] : walls) {
                Wall w = separating_wall(p, q);
                WallRelation rel = check_wall_inequality(h, p, q);
                require(rel != WallRelation::violated,
                        "violated wall " + p.to_string() + "|" + q.to_string());
                bool strict = rel == WallRelation::strict;
                require(strict == ideal.contains(w.shard),
                        "misclassified wall " + p.to_string() + "|" + q.to_string());
                ++checked;
            }
        }
        return std::to_string(checked) + " wall classifications across all 60 ideals";
    });

    criterion(4, "frozen exact coordinates", [&] {
        HeightFunction h = heights(sylvester_congruence(3), default_weights(3));
        auto expect_h = [&](std::initializer_list<int> elems, const char* v) {
            require(h.at(Subset::of(3, elems)) == parse_rational(v), std::string("height ") + v);
        };
        expect_h({1}, "1/3");
        expect_h({2}, "2/3");
        expect_h({3}, "1/3");
        expect_h({1, 2}, "28/81");
        expect_h({1, 3}, "2/3");
        expect_h({2, 3}, "28/81");
        RationalVector id_vertex = chamber_vertex(Permutation::identity(3), h);
        require(id_vertex == RationalVector{Rational(-1, 9), Rational(-1, 243), Rational(28, 243)},
                "identity chamber vertex");
        RationalVector merged = chamber_vertex(parse_permutation("132"), h);
        require(merged == RationalVector{Rational(-1, 9), Rational(2, 9), Rational(-1, 9)},
                "merged class vertex");
        require(chamber_vertex(parse_permutation("312"), h) == merged, "member independence");
        return "sylvester heights and vertices at n=3 match the hand computation";
    });

    criterion(5, "normal fan realization", [&] {
        int pairs = 0;
        for (const Quotientope& q : built) {
            NormalFanReport rep = verify_normal_fan(q);
            require(rep.ok, "fan mismatch for an ideal of " +
                                std::to_string(q.congruence.ideal.size()) + " shards: " +
                                (rep.failures.empty() ? "?" : rep.failures.front()));
            pairs += rep.checked;
        }
        return "normal fans of all 47 essential builds verified (" + std::to_string(pairs) +
               " class/subset pairs)";
    });

    criterion(6, "oriented skeleton", [&] {
        int count = 0;
        WeightFunction f3 = default_weights(3);
        std::vector<Quotientope> small;
        for (const ShardIdeal& ideal : enumerate_upper_ideals(3, true))
            small.push_back(build_quotientope(Congruence{ideal}, f3));
        for (const std::vector<Quotientope>* group : {&small, &built})
            for (const Quotientope& q : *group) {
                OrientedGraph g = oriented_graph(q);
                require(g.matches_covers, "digraph differs from quotient covers");
                require(g.sources.size() == 1 && g.sources.front() == q.poset.bottom_class,
                        "identity class is not the unique source");
                require(g.sinks.size() == 1 && g.sinks.front() == q.poset.top_class,
                        "longest class is not the unique sink");
                require(q.classes.class_index(Permutation::identity(q.n())) ==
                            q.poset.bottom_class,
                        "bottom class does not hold the identity");
                ++count;
            }
        return std::to_string(count) + " oriented skeletons match their quotient posets";
    });

    criterion(7, "lattice congruence oracle", [&] {
        int count = 0;
        for (int n = 3; n <= 4; ++n)
            for (const ShardIdeal& ideal : enumerate_upper_ideals(n, false)) {
                require(is_lattice_congruence_oracle(classes_from_ideal(Congruence{ideal})),
                        "oracle rejects an ideal at n=" + std::to_string(n));
                ++count;
            }
        return std::to_string(count) + " partitions confirmed as lattice congruences";
    });

    criterion(8, "forcing-dominant weights", [&] {
        for (int n = 2; n <= 8; ++n) {
            DominanceResult r = check_forcing_dominant(default_weights(n), n);
            require(r.ok, "default weights lose dominance at n=" + std::to_string(n));
        }
        for (int n = 3; n <= 8; ++n) {
            DominanceResult r = check_forcing_dominant(constant_weights(n, 1), n);
            require(!r.ok, "constant weights should fail at n=" + std::to_string(n));
            require(r.violator && r.violator->is_basic(),
                    "constant-weight violator should be basic at n=" + std::to_string(n));
        }
        return "default weights dominate for n=2..8; constant weights fail at a basic shard";
    });

    criterion(9, "monotone heights and nesting", [&] {
        int monotone_pairs = 0;
        for (size_t a = 0; a < ess4.size(); ++a)
            for (size_t b = 0; b < ess4.size(); ++b) {
                if (a == b) continue;
                const std::vector<Shard>&ma = ess4[a].members(), &mb = ess4[b].members();
                if (!std::includes(mb.begin(), mb.end(), ma.begin(), ma.end())) continue;
                for (uint32_t bits = 1; bits + 1 < (1u << 4); ++bits)
                    require(built[a].height.by_bits[bits] <= built[b].height.by_bits[bits],
                            "heights not monotone across nested ideals");
                ++monotone_pairs;
            }
        const Quotientope* cube = nullptr;
        const Quotientope* full = nullptr;
        for (const Quotientope& q : built) {
            if (q.congruence.ideal == cube_congruence(4).ideal) cube = &q;
            if (q.congruence.ideal == full_congruence(4).ideal) full = &q;
        }
        require(cube && full, "cube and full ideals must be in the essential census");
        for (const Quotientope& q : built)
            for (uint32_t bits = 1; bits + 1 < (1u << 4); ++bits) {
                Subset R(4, bits);
                RayVector r = ray_vector(R);
                for (const RationalVector& v : cube->vertices)
                    require(dot_ray(r, v) <= q.height.at(R),
                            "cube vertex escapes a quotientope");
                for (const RationalVector& v : q.vertices)
                    require(dot_ray(r, v) <= full->height.at(R),
                            "quotientope vertex escapes the permutahedron");
            }
        return std::to_string(monotone_pairs) +
               " nested ideal pairs monotone; every build sits between cube and permutahedron";
    });

    criterion(10, "polytopal face structure", [&] {
        for (const Quotientope& q : built) {
            long euler = long(q.classes.class_count()) - long(q.edges.size()) +
                         long(q.facet_normals.size());
            require(q.dimension == 3, "essential build at n=4 must be 3-dimensional");
            require(euler == 2, "Euler characteristic V-E+F=" + std::to_string(euler));
            std::vector<std::vector<int>> cycles = off_face_cycles(q);
            require(cycles.size() == q.facet_normals.size(), "one cycle per facet");
            std::set<std::pair<int, int>> edge_set(q.edges.begin(), q.edges.end());
            std::map<std::pair<int, int>, int> uses;
            for (const std::vector<int>& cycle : cycles) {
                require(cycle.size() >= 3, "degenerate face cycle");
                for (size_t k = 0; k < cycle.size(); ++k) {
                    int a = cycle[k], b = cycle[(k + 1) % cycle.size()];
                    require(a != b, "repeated vertex in a face cycle");
                    std::pair<int, int> e{std::min(a, b), std::max(a, b)};
                    require(edge_set.count(e) == 1, "face cycle uses a non-edge");
                    ++uses[e];
                }
            }
            require(uses.size() == edge_set.size(), "some edge is missing from the face cycles");
            for (const auto& [e, u] : uses)
                require(u == 2, "an edge is not on exactly two faces");
        }
        return "all 47 essential builds close up: V-E+F=2, each edge on exactly two facet cycles";
    });

    if (failures > 0) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
