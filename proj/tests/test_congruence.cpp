#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "quotientopes/congruence.hpp"

using namespace qtp;

namespace {

std::vector<std::vector<std::string>> class_names(const ClassPartition& part) {
    std::vector<std::vector<std::string>> out;
    for (const std::vector<Permutation>& cls : part.classes) {
        std::vector<std::string> names;
        for (const Permutation& p : cls) names.push_back(p.to_string());
        out.push_back(names);
    }
    return out;
}

}  // namespace

TEST_CASE("presets at frozen member lists for n = 3") {
    REQUIRE(sylvester_congruence(3).ideal.members() ==
            std::vector<Shard>{Shard(1, 2, 0), Shard(1, 3, 0b010), Shard(2, 3, 0)});
    REQUIRE(anti_sylvester_congruence(3).ideal.members() ==
            std::vector<Shard>{Shard(1, 2, 0), Shard(1, 3, 0), Shard(2, 3, 0)});
    REQUIRE(cube_congruence(3).ideal.members() ==
            std::vector<Shard>{Shard(1, 2, 0), Shard(2, 3, 0)});
    REQUIRE(full_congruence(3).ideal.members() == all_shards(3));
    for (int n = 2; n <= 5; ++n) {
        REQUIRE(sylvester_congruence(n).ideal.is_essential());
        REQUIRE(anti_sylvester_congruence(n).ideal.is_essential());
        REQUIRE(cube_congruence(n).ideal.is_essential());
    }
}

TEST_CASE("sylvester classes of S_3, frozen") {
    ClassPartition part = classes_from_ideal(sylvester_congruence(3));
    REQUIRE(class_names(part) == std::vector<std::vector<std::string>>{
                                     {"123"}, {"132", "312"}, {"213"}, {"231"}, {"321"}});
    REQUIRE(part.representatives[1].to_string() == "132");
    REQUIRE(part.class_index(parse_permutation("312")) == 1);
    REQUIRE(part.class_index(parse_permutation("321")) == 4);
}

TEST_CASE("cube classes of S_3, frozen") {
    ClassPartition part = classes_from_ideal(cube_congruence(3));
    REQUIRE(class_names(part) == std::vector<std::vector<std::string>>{
                                     {"123"}, {"132", "312"}, {"213", "231"}, {"321"}});
}

TEST_CASE("the full congruence has singleton classes, the empty one a single class") {
    REQUIRE(classes_from_ideal(full_congruence(4)).class_count() == 24);
    ClassPartition trivial = classes_from_ideal(Congruence{ShardIdeal(3, {})});
    REQUIRE(trivial.class_count() == 1);
    REQUIRE(trivial.classes[0].size() == 6);
    REQUIRE(trivial.representatives[0].to_string() == "123");
}

TEST_CASE("the rewriting route matches the shard route for the sylvester classes") {
    int expected[] = {0, 0, 2, 5, 14, 42};
    for (int n = 2; n <= 5; ++n) {
        ClassPartition a = classes_from_ideal(sylvester_congruence(n));
        ClassPartition b = sylvester_classes_rewriting(n);
        REQUIRE(a.class_count() == expected[n]);
        REQUIRE(a.classes == b.classes);
        REQUIRE(a.representatives == b.representatives);
    }
}

TEST_CASE("quotient covers of the sylvester congruence of S_3, frozen") {
    ClassPartition part = classes_from_ideal(sylvester_congruence(3));
    QuotientPoset poset = quotient_covers(part);
    REQUIRE(poset.class_count == 5);
    REQUIRE(poset.cover_edges == std::vector<std::pair<int, int>>{
                                     {0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}});
    REQUIRE(poset.bottom_class == 0);
    REQUIRE(poset.top_class == 4);
    REQUIRE(poset.wall_shards.at({0, 1}) == Shard(2, 3, 0));
    REQUIRE(poset.wall_shards.at({0, 2}) == Shard(1, 2, 0));
}

TEST_CASE("quotient covers never point into a merged class") {
    for (const ShardIdeal& ideal : enumerate_upper_ideals(3, false)) {
        ClassPartition part = classes_from_ideal(Congruence{ideal});
        QuotientPoset poset = quotient_covers(part);
        for (const auto& [a, b] : poset.cover_edges) REQUIRE(a != b);
    }
}

TEST_CASE("every upper ideal of S_3 and S_4 yields a lattice congruence") {
    for (int n = 3; n <= 4; ++n)
        for (const ShardIdeal& ideal : enumerate_upper_ideals(n, false))
            REQUIRE(is_lattice_congruence_oracle(classes_from_ideal(Congruence{ideal})));
}

TEST_CASE("the oracle rejects a hand-made non-congruence") {
    // Glue 123 and 321 into one class, leave the rest singletons. Meets leave
    // the classes: meet(321, 132) = 132 but meet(123, 132) = 123.
    std::vector<Permutation> perms = all_permutations(3);
    ClassPartition part;
    part.n = 3;
    part.class_of_rank.assign(6, -1);
    for (const Permutation& p : perms) {
        std::string s = p.to_string();
        if (s == "123" || s == "321") continue;
        part.class_of_rank[perm_rank(p)] = part.class_count();
        part.representatives.push_back(p);
        part.classes.push_back({p});
    }
    part.class_of_rank[perm_rank(parse_permutation("123"))] = part.class_count();
    part.class_of_rank[perm_rank(parse_permutation("321"))] = part.class_count();
    part.representatives.push_back(parse_permutation("123"));
    part.classes.push_back({parse_permutation("123"), parse_permutation("321")});
    REQUIRE(!is_lattice_congruence_oracle(part));
}

TEST_CASE("the oracle refuses n above 4") {
    ClassPartition part = classes_from_ideal(cube_congruence(5));
    REQUIRE_THROWS_AS(is_lattice_congruence_oracle(part), scale_guard_error);
}

TEST_CASE("classes are weak-order intervals for every upper ideal of S_3") {
    std::vector<Permutation> perms = all_permutations(3);
    for (const ShardIdeal& ideal : enumerate_upper_ideals(3, false)) {
        ClassPartition part = classes_from_ideal(Congruence{ideal});
        for (int X = 0; X < part.class_count(); ++X) {
            const Permutation& lo = part.representatives[X];
            const Permutation* hi = &part.classes[X][0];
            for (const Permutation& p : part.classes[X])
                if (inversion_set(p).size() > inversion_set(*hi).size()) hi = &p;
            for (const Permutation& p : perms)
                REQUIRE((part.class_index(p) == X) == (weak_leq(lo, p) && weak_leq(p, *hi)));
        }
    }
}

TEST_CASE("arc diagram of a singleton class lists its descent walls") {
    ClassPartition part = classes_from_ideal(full_congruence(4));
    int X = part.class_index(parse_permutation("4231"));
    std::vector<Shard> arcs = arc_diagram_of_class(part, X);
    REQUIRE(arcs == std::vector<Shard>{Shard(1, 3, 0b010), Shard(2, 4, 0)});
    REQUIRE(!arcs_cross(Shard(1, 3, 0b010), Shard(2, 4, 0)));
    REQUIRE(is_noncrossing_diagram(arcs));
}

TEST_CASE("arc diagram of a merged class, frozen") {
    ClassPartition part = classes_from_ideal(sylvester_congruence(3));
    REQUIRE(arc_diagram_of_class(part, part.class_index(parse_permutation("312"))) ==
            std::vector<Shard>{Shard(2, 3, 0)});
    REQUIRE(arc_diagram_of_class(part, part.class_index(parse_permutation("123"))).empty());
}

TEST_CASE("arc crossing at frozen pairs") {
    // Interleaved intervals cross or not depending on the sides.
    REQUIRE(arcs_cross(Shard(1, 3, 0), Shard(2, 4, 0)));
    REQUIRE(!arcs_cross(Shard(1, 3, 0), Shard(2, 4, 0b100)));
    REQUIRE(!arcs_cross(Shard(1, 3, 0b010), Shard(2, 4, 0)));
    // Nested intervals cross exactly when the sides disagree at the inner endpoints.
    REQUIRE(arcs_cross(Shard(1, 4, 0b010), Shard(2, 3, 0)));
    REQUIRE(!arcs_cross(Shard(1, 4, 0b0110), Shard(2, 3, 0)));
    // Disjoint or endpoint-sharing intervals never cross.
    REQUIRE(!arcs_cross(Shard(1, 2, 0), Shard(3, 4, 0)));
    REQUIRE(!arcs_cross(Shard(1, 2, 0), Shard(2, 4, 0)));
    REQUIRE(!arcs_cross(Shard(1, 3, 0b010), Shard(3, 4, 0)));
    // Symmetry.
    REQUIRE(arcs_cross(Shard(2, 4, 0), Shard(1, 3, 0)));
}

TEST_CASE("diagram validity also rejects shared endpoints") {
    REQUIRE(!is_noncrossing_diagram({Shard(1, 3, 0), Shard(1, 4, 0)}));
    REQUIRE(!is_noncrossing_diagram({Shard(1, 4, 0), Shard(2, 4, 0b100)}));
    REQUIRE(is_noncrossing_diagram({Shard(1, 2, 0), Shard(2, 4, 0b100)}));
}

TEST_CASE("arc diagrams of all classes are valid and match the minimum's walls") {
    for (int n = 3; n <= 4; ++n) {
        for (const ShardIdeal& ideal : enumerate_upper_ideals(n, true)) {
            Congruence c{ideal};
            ClassPartition part = classes_from_ideal(c);
            for (int X = 0; X < part.class_count(); ++X) {
                std::vector<Shard> arcs = arc_diagram_of_class(part, X);
                REQUIRE(is_noncrossing_diagram(arcs));
                std::set<Shard> from_min;
                const Permutation& m = part.representatives[X];
                for (int pos = 1; pos < n; ++pos)
                    if (m.value_at(pos) > m.value_at(pos + 1)) {
                        Wall w = separating_wall(m, m.adjacent_swap(pos));
                        if (c.ideal.contains(w.shard)) from_min.insert(w.shard);
                    }
                REQUIRE(std::set<Shard>(arcs.begin(), arcs.end()) == from_min);
            }
        }
    }
}

TEST_CASE("distinct ideals give distinct partitions of S_3") {
    std::set<std::vector<std::vector<std::string>>> seen;
    for (const ShardIdeal& ideal : enumerate_upper_ideals(3, false))
        seen.insert(class_names(classes_from_ideal(Congruence{ideal})));
    REQUIRE(seen.size() == 7);
}

TEST_CASE("class partition refuses n above 7") {
    REQUIRE_THROWS_AS(classes_from_ideal(cube_congruence(8)), scale_guard_error);
    REQUIRE_THROWS_AS(sylvester_classes_rewriting(8), scale_guard_error);
}
