#include "cag/restricted.hpp"

#include <algorithm>
#include <set>

#include "cag/oracle.hpp"
#include "cag/uniform.hpp"

namespace cag {

const std::vector<std::array<IType, 4>>& restricted_table() {
    // Row order (u, w, w', u'); entry k is the type of cycle vertex k versus
    // the outside vertex. Groups of size 4,4,2,2,2,2,1.
    static const std::vector<std::array<IType, 4>> t = {
        // x adjacent to u and u' only
        {IType::CS, IType::D, IType::D, IType::CS},
        {IType::OV, IType::D, IType::D, IType::CS},
        {IType::CS, IType::D, IType::D, IType::OV},
        {IType::OV, IType::D, IType::D, IType::OV},
        // x adjacent to w and w' only
        {IType::D, IType::CS, IType::CS, IType::D},
        {IType::D, IType::OV, IType::CS, IType::D},
        {IType::D, IType::CS, IType::OV, IType::D},
        {IType::D, IType::OV, IType::OV, IType::D},
        // x adjacent to all but w
        {IType::OV, IType::D, IType::OV, IType::OV},
        {IType::OV, IType::D, IType::OV, IType::CS},
        // x adjacent to all but w'
        {IType::OV, IType::OV, IType::D, IType::OV},
        {IType::CS, IType::OV, IType::D, IType::OV},
        // x adjacent to all but u'
        {IType::OV, IType::OV, IType::OV, IType::D},
        {IType::OV, IType::CS, IType::OV, IType::D},
        // x adjacent to all but u
        {IType::D, IType::OV, IType::OV, IType::OV},
        {IType::D, IType::OV, IType::CS, IType::OV},
        // x adjacent to the whole cycle
        {IType::OV, IType::OV, IType::OV, IType::OV},
    };
    return t;
}

std::optional<WitnessCycle> find_nonuniformity_witness(const ColoredGraph& g,
                                                       const IntersectionMatrix& lam, int cap) {
    auto both_ways = [&](int a, int b, int c) {
        std::array<int, 3> T{a, b, c};
        std::sort(T.begin(), T.end());
        return triangle_representable(lam, T, TriangleKind::IT, cap) &&
               triangle_representable(lam, T, TriangleKind::NHT, cap);
    };
    for (const auto& C : induced_4cycles(g)) {
        const int u = C[0], w = C[1], w2 = C[2], u2 = C[3];
        for (int v = 0; v < g.n(); ++v) {
            if (v == u || v == w || v == w2 || v == u2) continue;
            if (lam.at(v, u) != IType::OV || lam.at(v, w) != IType::OV ||
                lam.at(v, u2) != IType::OV || lam.at(v, w2) != IType::OV)
                continue;
            if (both_ways(u, v, w) && both_ways(u2, v, w2)) return WitnessCycle{C, v};
        }
    }
    return std::nullopt;
}

RestrictedVerdict is_restricted_by_definition(const IntersectionMatrix& lam) {
    RestrictedVerdict out;
    out.method = RestrictedMethod::DEFINITION;
    for (const auto& C : induced_4cycles(lam)) {
        const int u = C[0], w = C[1], w2 = C[2], u2 = C[3];
        const std::vector<int> Cv{u, w, w2, u2};
        if (!exclusive_neighborhood(lam, Cv, {u, w}).empty()) continue;
        if (!exclusive_neighborhood(lam, Cv, {u2, w2}).empty()) continue;
        bool ok = true;
        for (int z : Cv)
            if (!exclusive_neighborhood(lam, Cv, {z}).empty()) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int x : exclusive_neighborhood(lam, Cv, Cv)) {
            for (int z : Cv)
                if (lam.at(x, z) != IType::OV) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (!ok) continue;
        out.is_restricted = true;
        out.witness = WitnessCycle{C, -1};
        return out;
    }
    return out;
}

RestrictedVerdict is_restricted_by_table(const IntersectionMatrix& lam) {
    RestrictedVerdict out;
    out.method = RestrictedMethod::TABLE;
    // Columns are matched up to entrywise converse: on a CA matrix an
    // outside vertex may contain the cycle vertex opposite to its missing
    // one, which is the mirror image of the printed column. Without the
    // mirror the two restricted checks genuinely disagree on some CA
    // matrices.
    const auto& base = restricted_table();
    std::vector<std::array<IType, 4>> table(base);
    for (const auto& col : base) {
        std::array<IType, 4> conv{converse(col[0]), converse(col[1]), converse(col[2]),
                                  converse(col[3])};
        if (std::find(table.begin(), table.end(), conv) == table.end()) table.push_back(conv);
    }
    for (const auto& C : induced_4cycles(lam)) {
        bool all_match = true;
        for (int x = 0; x < lam.n() && all_match; ++x) {
            if (x == C[0] || x == C[1] || x == C[2] || x == C[3]) continue;
            std::array<IType, 4> pat{lam.at(C[0], x), lam.at(C[1], x), lam.at(C[2], x),
                                     lam.at(C[3], x)};
            all_match = std::find(table.begin(), table.end(), pat) != table.end();
        }
        if (all_match) {
            out.is_restricted = true;
            out.witness = WitnessCycle{C, -1};
            return out;
        }
    }
    return out;
}

FlipSetFamily r_flip_selector(const ColoredGraph& g, const IntersectionMatrix& lam) {
    std::set<std::vector<int>> cands;
    for (const auto& C : induced_4cycles(g)) {
        std::vector<int> X;
        for (int x = 0; x < lam.n(); ++x) {
            if (x == C[0] || x == C[1] || x == C[2] || x == C[3]) continue;
            for (int y : C)
                if (lam.at(x, y) == IType::CS) {
                    X.push_back(x);
                    break;
                }
        }
        cands.insert(std::move(X));
    }
    FlipSetFamily f;
    f.source = FamilySource::RFLIP;
    f.candidates.assign(cands.begin(), cands.end());
    return f;
}

std::vector<std::vector<int>> certified_r_flip_sets(const ColoredGraph& g,
                                                    const IntersectionMatrix& lam) {
    std::vector<std::vector<int>> out;
    for (const auto& X : r_flip_selector(g, lam).candidates)
        if (is_restricted_by_definition(flip(lam, X)).is_restricted) out.push_back(X);
    return out;
}

std::optional<RestrictedCanonResult> reduce_to_restricted(const ColoredGraph& g,
                                                          const IntersectionMatrix& lam, int cap) {
    std::optional<RestrictedCanonResult> best;
    std::string best_str;
    for (const auto& X : certified_r_flip_sets(g, lam)) {
        IntersectionMatrix mx = flip(lam, X);
        std::vector<char> in_x(lam.n(), 0);
        for (int v : X) in_x[v] = 1;
        for (int v = 0; v < lam.n(); ++v)
            mx.set_color(v, flip_membership_color(lam.color(v), in_x[v]));
        auto canon = canonical_exhaustive(mx, cap);
        if (!canon) continue; // flipped matrix turned out non-CA
        if (best && best_str <= canon->str) continue;
        RestrictedCanonResult r;
        r.flip_set_used = X;
        r.payload = canon->str;
        std::vector<int> x_arcs;
        for (int v : X) x_arcs.push_back(canon->rep.arc_of[v]);
        r.rep.model = flip_arcs(canon->rep.model, x_arcs);
        r.rep.arc_of = canon->rep.arc_of;
        best_str = canon->str;
        best = std::move(r);
    }
    return best;
}

namespace {

ColoredGraph octahedron_graph() {
    // complement of a perfect matching on 6 vertices
    ColoredGraph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2 && u % 2 == 0 && v == u + 1)) g.add_edge(u, v);
    return g;
}

ColoredGraph x0_graph() {
    // 4-cycle 0-1-2-3, center 4 adjacent to all of it, 5 on {0,3}, 6 on {1,2}
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

} // namespace

ObstructionReport obstruction_scan(const ColoredGraph& g) {
    ObstructionReport r;
    r.octahedron_found = find_induced_subgraph(g, octahedron_graph());
    r.x0_found = find_induced_subgraph(g, x0_graph());
    return r;
}

} // namespace cag
