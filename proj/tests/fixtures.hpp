// Shared instances for unit and acceptance tests: small named graphs, the
// hand-transcribed arc models they come from, and an independent
// region-walking classifier used to cross-check intersection_type.
#ifndef CAG_TESTS_FIXTURES_HPP
#define CAG_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "cag/graphs.hpp"
#include "cag/matrix.hpp"
#include "cag/model.hpp"

namespace fixtures {

using cag::CircularModel;
using cag::ColoredGraph;
using cag::Endpoint;
using cag::IntersectionMatrix;
using cag::IType;
using cag::Side;

inline Endpoint L(int a) { return {a, Side::Left}; }
inline Endpoint R(int a) { return {a, Side::Right}; }

inline ColoredGraph path_graph(int n) {
    ColoredGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline ColoredGraph cycle_graph(int n) {
    ColoredGraph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline ColoredGraph complete_graph(int n) {
    ColoredGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline ColoredGraph star_graph(int leaves) {
    ColoredGraph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// 4-cycle 1-2-3-4 plus pendant vertex 0 attached to 1.
inline ColoredGraph pendant_cycle_graph() {
    ColoredGraph g(5);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 1);
    g.add_edge(0, 1);
    return g;
}

// Its five-arc model; the small arc 0 sits inside arc 1.
inline CircularModel pendant_cycle_model() {
    return CircularModel::from_order(
        {R(3), L(1), R(4), L(0), R(0), L(2), R(1), L(3), R(2), L(4)});
}

// Four arcs exhibiting every intersection type: 0 contains 1, 0/3 cover the
// circle, 0-2 and 2-3 overlap, 1 disjoint from 2 and 3.
inline CircularModel four_type_model() {
    return CircularModel::from_order({R(3), R(2), L(1), R(1), L(3), R(0), L(2), L(0)});
}

// Six vertices; edges 0-1 (circle cover), 4 under 0, 5 under 1, rest overlaps.
inline ColoredGraph two_hub_graph() {
    ColoredGraph g(6);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(0, 1);
    g.add_edge(4, 0);
    g.add_edge(4, 2);
    g.add_edge(4, 3);
    g.add_edge(5, 1);
    g.add_edge(5, 2);
    g.add_edge(5, 3);
    return g;
}

// Complement of a perfect matching on six vertices; the 4-cycle is
// (0,1,2,3) with non-edges {0,2}, {1,3}, centers 4 and 5 non-adjacent.
inline ColoredGraph octahedron() {
    ColoredGraph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) {
            bool matched = (u == 0 && v == 2) || (u == 1 && v == 3) || (u == 4 && v == 5);
            if (!matched) g.add_edge(u, v);
        }
    return g;
}

inline CircularModel octahedron_model() {
    return CircularModel::from_order(
        {L(4), R(2), L(0), R(1), L(3), R(4), L(5), R(0), L(2), R(3), L(1), R(5)});
}

// 4-cycle (0,1,2,3), center 4 adjacent to the whole cycle, 5 under the edge
// {0,3}, 6 under the edge {1,2}.
inline ColoredGraph x0() {
    ColoredGraph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    for (int z = 0; z < 4; ++z) g.add_edge(4, z);
    g.add_edge(5, 0);
    g.add_edge(5, 3);
    g.add_edge(6, 1);
    g.add_edge(6, 2);
    return g;
}

inline CircularModel x0_model() {
    return CircularModel::from_order({R(6), L(4), R(2), L(0), R(1), L(3), R(4), L(5), R(5), R(0),
                                      L(2), R(3), L(1), L(6)});
}

// Octahedron plus a short arc 6 (inside 0 and 4) and a long arc 7 also
// under 4; uniform with a unique model but not delta-uniform.
inline ColoredGraph x4() {
    ColoredGraph g(8);
    // octahedron part
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) {
            bool matched = (u == 0 && v == 2) || (u == 1 && v == 3) || (u == 4 && v == 5);
            if (!matched) g.add_edge(u, v);
        }
    g.add_edge(6, 0);
    g.add_edge(6, 3);
    g.add_edge(6, 4);
    g.add_edge(6, 7);
    g.add_edge(7, 0);
    g.add_edge(7, 1);
    g.add_edge(7, 2);
    g.add_edge(7, 4);
    return g;
}

inline CircularModel x4_model() {
    return CircularModel::from_order({L(4), L(7), R(2), L(0), R(1), L(6), R(7), L(3), R(6), R(4),
                                      L(5), R(0), L(2), R(3), L(1), R(5)});
}

// Triangle {0,1,2} with pendants 3-0, 4-1, 5-2.
inline ColoredGraph net_graph() {
    ColoredGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 0);
    g.add_edge(4, 1);
    g.add_edge(5, 2);
    return g;
}

// Net plus one extra pendant 6 on vertex 3.
inline ColoredGraph long_net_graph() {
    ColoredGraph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 0);
    g.add_edge(4, 1);
    g.add_edge(5, 2);
    g.add_edge(6, 3);
    return g;
}

// Complete bipartite {0,1} x {2,3,4}; famously not a CA graph.
inline ColoredGraph k23() {
    ColoredGraph g(5);
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 5; ++b) g.add_edge(a, b);
    return g;
}

// Triangle 0-1-2 with pendant 3-0; has twins {1,2} and universal vertex 0.
inline ColoredGraph paw_graph() {
    ColoredGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    return g;
}

inline CircularModel random_model(int n, std::mt19937_64& rng) {
    std::vector<Endpoint> order;
    for (int a = 0; a < n; ++a) {
        order.push_back(L(a));
        order.push_back(R(a));
    }
    std::shuffle(order.begin(), order.end(), rng);
    return CircularModel::from_order(order);
}

inline std::vector<int> random_subset(int n, std::mt19937_64& rng) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (rng() & 1) s.push_back(v);
    return s;
}

inline ColoredGraph random_graph(int n, double p, std::mt19937_64& rng) {
    ColoredGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Independent classifier: walks the covered samples (endpoints and gap
// interiors) of each arc and applies the set definitions directly.
inline IType reference_type(const CircularModel& m, int i, int j) {
    const int sz = m.size();
    auto samples = [&](int a) {
        std::vector<char> cov(2 * sz, 0);
        int walk = m.position(a, Side::Left);
        cov[2 * walk] = 1;
        while (walk != m.position(a, Side::Right)) {
            cov[2 * walk + 1] = 1; // gap after `walk`
            walk = (walk + 1) % sz;
            cov[2 * walk] = 1;
        }
        return cov;
    };
    const auto ca = samples(i), cb = samples(j);
    bool inter = false, aonly = false, bonly = false, full = true;
    for (int s = 0; s < 2 * sz; ++s) {
        if (ca[s] && cb[s]) inter = true;
        if (ca[s] && !cb[s]) aonly = true;
        if (cb[s] && !ca[s]) bonly = true;
        if (!ca[s] && !cb[s]) full = false;
    }
    if (!inter) return IType::D;
    if (!aonly) return IType::CD;
    if (!bonly) return IType::CS;
    if (full) return IType::CC;
    return IType::OV;
}

inline std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

} // namespace fixtures

#endif
