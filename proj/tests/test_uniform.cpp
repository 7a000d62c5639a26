#include <doctest.h>

#include <algorithm>
#include <random>

#include "cag/oracle.hpp"
#include "cag/uniform.hpp"
#include "fixtures.hpp"

using namespace cag;
namespace fx = fixtures;

namespace {

struct Ctx {
    ColoredGraph g;
    IntersectionMatrix lam;
    explicit Ctx(const ColoredGraph& graph) : g(graph), lam(neighborhood_matrix(graph)) {}
};

} // namespace

TEST_CASE("overlap triangle listing") {
    CHECK(overlap_triangles(neighborhood_matrix(fx::cycle_graph(4))).empty());

    IntersectionMatrix oct = neighborhood_matrix(fx::octahedron());
    auto ts = overlap_triangles(oct);
    CHECK(std::find(ts.begin(), ts.end(), std::array<int, 3>{0, 1, 4}) != ts.end());

    CircularModel three = CircularModel::from_order(
        {fx::L(1), fx::R(0), fx::L(2), fx::R(1), fx::L(0), fx::R(2)});
    CHECK(overlap_triangles(matrix_of(three)).size() == 1);
}

TEST_CASE("amidst conditions") {
    Ctx net(fx::net_graph());
    NhtDecider no = {NhtDecider::Tag::ORACLE, [](const std::array<int, 3>&) { return false; }};
    // pendants give both triangle corners private neighbors: condition 1
    CHECK(amidst(net.g, net.lam, 0, 1, 2, no));

    // bare triangle of arcs has no private or shared outside vertices
    CircularModel three = CircularModel::from_order(
        {fx::L(1), fx::R(0), fx::L(2), fx::R(1), fx::L(0), fx::R(2)});
    IntersectionMatrix mu = matrix_of(three);
    CHECK_FALSE(amidst(adjacency_graph(mu), mu, 0, 1, 2, no));

    CHECK_THROWS_AS(amidst(net.g, net.lam, 0, 1, 3, no), std::invalid_argument);
}

TEST_CASE("amidst forces containment in every normalized representation") {
    // long net: the central triangle is not representable as a covering
    // triple (vertex 6 is outside its closed neighborhoods), and both outer
    // triangle corners keep private neighbors, so 1 is amidst 0 and 2
    Ctx lnet(fx::long_net_graph());
    NhtDecider orc = oracle_nht_decider(lnet.lam, 7);
    REQUIRE_FALSE(triangle_representable(lnet.lam, {0, 1, 2}, TriangleKind::NHT, 7));
    REQUIRE(amidst(lnet.g, lnet.lam, 0, 1, 2, orc));
    for_each_normalized(lnet.lam, 7, [&](const CircularModel& m) {
        for (int p = 0; p < m.size(); ++p) {
            if (m.covers_position(1, p)) CHECK((m.covers_position(0, p) || m.covers_position(2, p)));
            if (m.covers_gap(1, p)) CHECK((m.covers_gap(0, p) || m.covers_gap(2, p)));
        }
        return true;
    });
}

TEST_CASE("sim_u on C5: two singleton classes per vertex") {
    Ctx c5(fx::cycle_graph(5));
    NhtDecider orc = oracle_nht_decider(c5.lam, 6);
    for (int u = 0; u < 5; ++u) {
        SimURelation r = sim_u(c5.g, c5.lam, u, orc);
        REQUIRE(r.is_equivalence);
        CHECK(r.classes.size() == 2);
        for (const auto& c : r.classes) CHECK(c.size() == 1);
    }
}

TEST_CASE("sim_u with empty overlap neighborhood") {
    Ctx p4(fx::path_graph(4));
    NhtDecider orc = oracle_nht_decider(p4.lam, 6);
    SimURelation r = sim_u(p4.g, p4.lam, 0, orc);
    CHECK(r.domain.empty());
    CHECK(r.is_equivalence);
    CHECK(r.classes.empty());
}

TEST_CASE("sim_u classes equal the oracle partition on uniform graphs") {
    for (const ColoredGraph& g :
         {fx::cycle_graph(5), fx::cycle_graph(6), fx::pendant_cycle_graph(), fx::net_graph()}) {
        Ctx c(g);
        NhtDecider orc = oracle_nht_decider(c.lam, 6);
        for (int u = 0; u < g.n(); ++u) {
            auto parts = overlap_partitions(c.lam, u, 6);
            REQUIRE(parts.size() == 1); // uniform instances
            SimURelation r = sim_u(c.g, c.lam, u, orc);
            REQUIRE(r.is_equivalence);
            OverlapPartition got;
            for (const auto& cls : r.classes) got.insert(std::set<int>(cls.begin(), cls.end()));
            if (r.classes.empty()) got.insert({});
            OverlapPartition expect = *parts.begin();
            // the oracle partition may carry an empty side; normalize
            OverlapPartition expect_n, got_n;
            for (const auto& side : expect)
                if (!side.empty()) expect_n.insert(side);
            for (const auto& side : got)
                if (!side.empty()) got_n.insert(side);
            CHECK(got_n == expect_n);
        }
    }
}

TEST_CASE("delta_g membership") {
    Ctx oct(fx::octahedron());
    auto d = delta_g(oct.g, oct.lam);
    CHECK(d.count({0, 1, 4}) == 1);

    // net: the central triangle qualifies (pendants are contained, no 4-cycles)
    Ctx net(fx::net_graph());
    CHECK(delta_g(net.g, net.lam).count({0, 1, 2}) == 1);

    // long net: closed neighborhoods no longer cover everything
    Ctx lnet(fx::long_net_graph());
    CHECK(delta_g(lnet.g, lnet.lam).empty());
}

TEST_CASE("delta decider is label-independent") {
    std::mt19937_64 rng(404);
    Ctx oct(fx::octahedron());
    NhtDecider d = delta_nht_decider(oct.g, oct.lam);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<int> perm(6);
        for (int i = 0; i < 6; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        ColoredGraph pg = oct.g.relabeled(perm);
        NhtDecider pd = delta_nht_decider(pg, neighborhood_matrix(pg));
        for (const auto& T : overlap_triangles(oct.lam)) {
            std::array<int, 3> pT{perm[T[0]], perm[T[1]], perm[T[2]]};
            std::sort(pT.begin(), pT.end());
            CHECK(d.query(T) == pd.query(pT));
        }
    }
}

TEST_CASE("f_uniform candidates") {
    Ctx c5(fx::cycle_graph(5));
    FlipSetFamily f = f_uniform(c5.g, c5.lam, oracle_nht_decider(c5.lam, 6));
    // two candidates per vertex, both flip sets; as sets, the five edges
    CHECK(f.candidates.size() == 5);
    for (const auto& X : f.candidates) {
        CHECK(X.size() == 2);
        CHECK(is_flip_set(c5.lam, X));
    }

    // vertex whose overlap neighborhood is empty and has a container
    Ctx p4(fx::path_graph(4));
    FlipSetFamily fp = f_uniform(p4.g, p4.lam, oracle_nht_decider(p4.lam, 6));
    CHECK(std::find(fp.candidates.begin(), fp.candidates.end(), std::vector<int>{0, 1}) !=
          fp.candidates.end());

    // isolated vertex: bare singleton candidate
    ColoredGraph p4_iso(5);
    p4_iso.add_edge(0, 1);
    p4_iso.add_edge(1, 2);
    p4_iso.add_edge(2, 3);
    IntersectionMatrix lam_iso = neighborhood_matrix(p4_iso);
    FlipSetFamily fi = f_uniform(p4_iso, lam_iso, oracle_nht_decider(lam_iso, 6));
    CHECK(std::find(fi.candidates.begin(), fi.candidates.end(), std::vector<int>{4}) !=
          fi.candidates.end());
}

TEST_CASE("uniformity classification") {
    CHECK(is_uniform(neighborhood_matrix(fx::cycle_graph(4)), 6));
    CHECK(is_uniform(neighborhood_matrix(fx::cycle_graph(5)), 6));
    CHECK_FALSE(is_uniform(neighborhood_matrix(fx::octahedron()), 6));
}

TEST_CASE("delta-uniform classification") {
    Ctx net(fx::net_graph());
    CHECK(is_delta_uniform(net.g, net.lam, 6));
    Ctx oct(fx::octahedron());
    CHECK_FALSE(is_delta_uniform(oct.g, oct.lam, 6));
    Ctx hub(fx::two_hub_graph());
    CHECK(is_delta_uniform(hub.g, hub.lam, 6));
}

TEST_CASE("canonize_uniform") {
    // C5: identical canonical payload over every relabeling
    Ctx c5(fx::cycle_graph(5));
    auto ref = canonize_uniform(c5.g, c5.lam);
    REQUIRE(ref.has_value());
    std::vector<int> perm{0, 1, 2, 3, 4};
    do {
        ColoredGraph pg = c5.g.relabeled(perm);
        auto got = canonize_uniform(pg, neighborhood_matrix(pg));
        REQUIRE(got.has_value());
        CHECK(got->payload == ref->payload);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // hub graph succeeds and the result represents its matrix, like the
    // HCA route does
    Ctx hub(fx::two_hub_graph());
    auto r = canonize_uniform(hub.g, hub.lam);
    REQUIRE(r.has_value());
    IntersectionMatrix got = matrix_of(r->rep.model);
    for (int u = 0; u < hub.lam.n(); ++u)
        for (int v = 0; v < hub.lam.n(); ++v)
            if (u != v) CHECK(got.at(r->rep.arc_of[u], r->rep.arc_of[v]) == hub.lam.at(u, v));

    // octahedron: the delta selector is only guaranteed to find flip sets on
    // delta-uniform graphs, but its edge candidates happen to be flip sets
    // here, so the uniform route succeeds and must still represent lam
    Ctx oct(fx::octahedron());
    auto ro = canonize_uniform(oct.g, oct.lam);
    REQUIRE(ro.has_value());
    CHECK(is_flip_set(oct.lam, ro->flip_set_used));
    IntersectionMatrix gm = matrix_of(ro->rep.model);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
            if (u != v) CHECK(gm.at(ro->rep.arc_of[u], ro->rep.arc_of[v]) == oct.lam.at(u, v));
}
