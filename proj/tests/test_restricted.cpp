#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cag/oracle.hpp"
#include "cag/restricted.hpp"
#include "fixtures.hpp"

using namespace cag;
namespace fx = fixtures;

TEST_CASE("table constant sanity") {
    const auto& t = restricted_table();
    CHECK(t.size() == 17);
    // group sizes 4,4,2,2,2,2,1 by adjacency pattern toward the cycle
    auto mask_of = [](const std::array<IType, 4>& col) {
        int m = 0;
        for (int i = 0; i < 4; ++i)
            if (col[i] != IType::D) m |= 1 << i;
        return m;
    };
    std::map<int, int> group_sizes;
    for (const auto& col : t) group_sizes[mask_of(col)]++;
    CHECK(group_sizes[0b1001] == 4); // u and u'
    CHECK(group_sizes[0b0110] == 4); // w and w'
    CHECK(group_sizes[0b1101] == 2); // all but w
    CHECK(group_sizes[0b1011] == 2); // all but w'
    CHECK(group_sizes[0b0111] == 2); // all but u'
    CHECK(group_sizes[0b1110] == 2); // all but u
    CHECK(group_sizes[0b1111] == 1);
    for (const auto& col : t)
        for (IType e : col) {
            CHECK(e != IType::CD);
            CHECK(e != IType::CC);
        }
}

TEST_CASE("non-uniformity witnesses") {
    ColoredGraph oct = fx::octahedron();
    auto w = find_nonuniformity_witness(oct, neighborhood_matrix(oct), 6);
    REQUIRE(w.has_value());
    CHECK((w->center == 4 || w->center == 5));

    ColoredGraph c5 = fx::cycle_graph(5);
    CHECK_FALSE(find_nonuniformity_witness(c5, neighborhood_matrix(c5), 6).has_value());

    ColoredGraph x0 = fx::x0();
    CHECK(find_nonuniformity_witness(x0, neighborhood_matrix(x0), 7).has_value());
}

TEST_CASE("restricted checks on the named models") {
    for (const CircularModel& m : {fx::octahedron_model(), fx::x0_model(), fx::x4_model()}) {
        IntersectionMatrix mu = matrix_of(m);
        CHECK(is_restricted_by_definition(mu).is_restricted);
        CHECK(is_restricted_by_table(mu).is_restricted);
    }
    CHECK(is_restricted_by_definition(neighborhood_matrix(fx::cycle_graph(4))).is_restricted);
    CHECK_FALSE(is_restricted_by_definition(neighborhood_matrix(fx::cycle_graph(5))).is_restricted);
}

TEST_CASE("table patterns: contained outside vertex matches, container does not") {
    // C4 ring with an extra arc containing arc 0 and overlapping its cycle
    // neighbors: the containing vertex matches a column only in mirror
    // orientation; verdicts of the two checks agree
    CircularModel m = CircularModel::from_order({fx::L(4), fx::L(0), fx::R(3), fx::L(1), fx::R(0),
                                                 fx::R(4), fx::L(2), fx::R(1), fx::L(3), fx::R(2)});
    IntersectionMatrix mu = matrix_of(m);
    REQUIRE(mu.at(4, 0) == IType::CS); // 4 contains 0
    REQUIRE(mu.at(4, 2) == IType::D);
    CHECK(is_restricted_by_definition(mu).is_restricted ==
          is_restricted_by_table(mu).is_restricted);

    // X0's pendant-like vertices are contained in two cycle vertices:
    // pattern (CS, D, D, CS) from the cycle's perspective
    IntersectionMatrix x0 = matrix_of(fx::x0_model());
    CHECK(x0.at(0, 5) == IType::CS);
    CHECK(x0.at(1, 5) == IType::D);
    CHECK(x0.at(2, 5) == IType::D);
    CHECK(x0.at(3, 5) == IType::CS);
    const auto& t = restricted_table();
    CHECK(std::find(t.begin(), t.end(),
                    std::array<IType, 4>{IType::CS, IType::D, IType::D, IType::CS}) != t.end());
}

TEST_CASE("r_flip_selector") {
    ColoredGraph net = fx::net_graph();
    CHECK(r_flip_selector(net, neighborhood_matrix(net)).candidates.empty());

    ColoredGraph oct = fx::octahedron();
    IntersectionMatrix lam = neighborhood_matrix(oct);
    auto certified = certified_r_flip_sets(oct, lam);
    REQUIRE_FALSE(certified.empty());
    for (const auto& X : certified) {
        IntersectionMatrix f = flip(lam, X);
        CHECK(is_restricted_by_definition(f).is_restricted);
        CHECK(is_restricted_by_table(f).is_restricted);
        CHECK(flip(f, X) == lam);
    }
}

TEST_CASE("r_flip_selector is relabeling-equivariant") {
    std::mt19937_64 rng(31337);
    ColoredGraph g = fx::x0();
    IntersectionMatrix lam = neighborhood_matrix(g);
    auto base = r_flip_selector(g, lam).candidates;
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        ColoredGraph pg = g.relabeled(perm);
        auto got = r_flip_selector(pg, neighborhood_matrix(pg)).candidates;
        std::vector<std::vector<int>> mapped;
        for (auto X : base) {
            for (int& v : X) v = perm[v];
            std::sort(X.begin(), X.end());
            mapped.push_back(X);
        }
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == got);
    }
}

TEST_CASE("reduce_to_restricted canonizes the hard instances") {
    std::mt19937_64 rng(999);
    for (ColoredGraph g : {fx::octahedron(), fx::x0()}) {
        IntersectionMatrix lam = neighborhood_matrix(g);
        auto ref = reduce_to_restricted(g, lam, 7);
        REQUIRE(ref.has_value());
        // result represents lam
        IntersectionMatrix got = matrix_of(ref->rep.model);
        for (int u = 0; u < lam.n(); ++u)
            for (int v = 0; v < lam.n(); ++v)
                if (u != v) CHECK(got.at(ref->rep.arc_of[u], ref->rep.arc_of[v]) == lam.at(u, v));
        // identical payload under random relabelings
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<int> perm(g.n());
            for (int i = 0; i < g.n(); ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            ColoredGraph pg = g.relabeled(perm);
            auto got2 = reduce_to_restricted(pg, neighborhood_matrix(pg), 7);
            REQUIRE(got2.has_value());
            CHECK(got2->payload == ref->payload);
        }
    }
}

TEST_CASE("obstruction scan") {
    CHECK_FALSE(obstruction_scan(fx::net_graph()).any());
    CHECK(obstruction_scan(fx::octahedron()).octahedron_found);
    CHECK(obstruction_scan(fx::x0()).x0_found);
    CHECK_FALSE(obstruction_scan(fx::cycle_graph(6)).any());
}
