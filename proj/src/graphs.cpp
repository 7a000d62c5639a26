#include "cag/graphs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace cag {

ColoredGraph::ColoredGraph(int n, std::string default_color)
    : n_(n), adj_(n, 0), colors_(n, std::move(default_color)) {
    if (n < 0 || n > 64) throw capacity_error("ColoredGraph supports at most 64 vertices");
}

void ColoredGraph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("add_edge: bad endpoints");
    adj_[u] |= std::uint64_t(1) << v;
    adj_[v] |= std::uint64_t(1) << u;
}

int ColoredGraph::degree(int v) const { return std::popcount(adj_[v]); }

ColoredGraph ColoredGraph::relabeled(const std::vector<int>& perm) const {
    ColoredGraph r(n_);
    for (int v = 0; v < n_; ++v) r.set_color(perm[v], colors_[v]);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) r.add_edge(perm[u], perm[v]);
    return r;
}

bool ColoredGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[v] & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == all_mask();
}

std::vector<int> closed_neighborhood(const ColoredGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("closed_neighborhood: bad vertex");
    std::vector<int> r;
    std::uint64_t m = g.closed_nbhd_mask(v);
    while (m) {
        r.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return r;
}

namespace {

template <typename Adjacent>
std::vector<int> exclusive_nbhd_impl(int n, Adjacent adjacent, const std::vector<int>& S,
                                     const std::vector<int>& Sprime) {
    std::vector<char> in_s(n, 0), in_sp(n, 0);
    for (int v : S) in_s[v] = 1;
    for (int v : Sprime) {
        if (!in_s[v]) throw std::invalid_argument("exclusive_neighborhood: S' not a subset of S");
        in_sp[v] = 1;
    }
    std::vector<int> out;
    for (int x = 0; x < n; ++x) {
        if (in_s[x]) continue;
        bool ok = true;
        for (int v : S) {
            if (adjacent(x, v) != static_cast<bool>(in_sp[v])) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

} // namespace

std::vector<int> exclusive_neighborhood(const ColoredGraph& g, const std::vector<int>& S,
                                        const std::vector<int>& Sprime) {
    return exclusive_nbhd_impl(
        g.n(), [&](int a, int b) { return g.adjacent(a, b); }, S, Sprime);
}

std::vector<int> exclusive_neighborhood(const IntersectionMatrix& mu, const std::vector<int>& S,
                                        const std::vector<int>& Sprime) {
    return exclusive_nbhd_impl(
        mu.n(), [&](int a, int b) { return mu.adjacent(a, b); }, S, Sprime);
}

bool has_universal_vertex(const ColoredGraph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.closed_nbhd_mask(v) == g.all_mask()) return true;
    return false;
}

bool has_twins(const ColoredGraph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.closed_nbhd_mask(u) == g.closed_nbhd_mask(v)) return true;
    return false;
}

ReducedInstance reduce(const ColoredGraph& g) {
    ReducedInstance r;
    r.original_n = g.n();
    r.back_map.assign(g.n(), -1);

    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v) {
        if (g.closed_nbhd_mask(v) == g.all_mask())
            r.universal_vertices.push_back(v);
        else
            rest.push_back(v);
    }

    // twin classes of the remainder, keyed by closed neighborhood within it
    std::uint64_t rest_mask = 0;
    for (int v : rest) rest_mask |= std::uint64_t(1) << v;
    std::map<std::pair<std::uint64_t, std::string>, std::vector<int>> classes;
    for (int v : rest) classes[{g.closed_nbhd_mask(v) & rest_mask, g.color(v)}].push_back(v);

    std::vector<std::vector<int>> class_list;
    for (auto& [key, members] : classes) class_list.push_back(members);
    // deterministic core order: by smallest member
    std::sort(class_list.begin(), class_list.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    const int cn = static_cast<int>(class_list.size());
    r.core = ColoredGraph(cn);
    for (int i = 0; i < cn; ++i) {
        const auto& members = class_list[i];
        int rep = members.front();
        r.core.set_color(i, g.color(rep) + "#" + std::to_string(members.size()));
        r.twin_counts.push_back(static_cast<int>(members.size()));
        r.twin_members.push_back(members);
        for (int v : members) r.back_map[v] = i;
    }
    for (int i = 0; i < cn; ++i)
        for (int j = i + 1; j < cn; ++j)
            if (g.adjacent(class_list[i].front(), class_list[j].front())) r.core.add_edge(i, j);
    return r;
}

Representation lift_representation(const ReducedInstance& r, const Representation& core_rep) {
    // contract check: the core representation's intersection graph must be
    // the core graph
    const CircularModel& cm = core_rep.model;
    if (cm.n() != r.core.n() || static_cast<int>(core_rep.arc_of.size()) != r.core.n())
        throw std::invalid_argument("lift_representation: model does not match core size");
    for (int u = 0; u < r.core.n(); ++u)
        for (int v = u + 1; v < r.core.n(); ++v) {
            bool meet = intersection_type(cm, core_rep.arc_of[u], core_rep.arc_of[v]) != IType::D;
            if (meet != r.core.adjacent(u, v))
                throw std::invalid_argument("lift_representation: model does not represent core");
        }

    // core vertex owning each arc
    std::vector<int> vertex_of(r.core.n(), -1);
    for (int v = 0; v < r.core.n(); ++v) vertex_of[core_rep.arc_of[v]] = v;

    std::vector<Endpoint> order;
    order.reserve(2 * r.original_n);
    for (int p = 0; p < cm.size(); ++p) {
        const Endpoint& e = cm.at(p);
        const std::vector<int>& members = r.twin_members[vertex_of[e.arc]];
        if (e.side == Side::Left) {
            for (int v : members) order.push_back({v, Side::Left}); // outermost first
        } else {
            for (auto it = members.rbegin(); it != members.rend(); ++it)
                order.push_back({*it, Side::Right});
        }
    }
    // universal vertices: almost-full nested arcs appended past the end
    const auto& uni = r.universal_vertices;
    for (auto it = uni.rbegin(); it != uni.rend(); ++it) order.push_back({*it, Side::Right});
    for (int v : uni) order.push_back({v, Side::Left});

    Representation out;
    out.model = CircularModel::from_order(std::move(order));
    out.arc_of.resize(r.original_n);
    for (int v = 0; v < r.original_n; ++v) out.arc_of[v] = v;
    return out;
}

namespace {

template <typename Adjacent>
std::vector<std::array<int, 4>> induced_4cycles_impl(int n, Adjacent adj) {
    std::vector<std::array<int, 4>> out;
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (w == u || !adj(u, w)) continue;
            for (int w2 = 0; w2 < n; ++w2) {
                if (w2 == u || w2 == w || !adj(w, w2) || adj(u, w2)) continue;
                for (int u2 = 0; u2 < n; ++u2) {
                    if (u2 == u || u2 == w || u2 == w2) continue;
                    if (adj(w2, u2) && adj(u2, u) && !adj(w, u2)) out.push_back({u, w, w2, u2});
                }
            }
        }
    return out;
}

} // namespace

std::vector<std::array<int, 4>> induced_4cycles(const ColoredGraph& g) {
    return induced_4cycles_impl(g.n(), [&](int a, int b) { return g.adjacent(a, b); });
}

std::vector<std::array<int, 4>> induced_4cycles(const IntersectionMatrix& mu) {
    return induced_4cycles_impl(mu.n(), [&](int a, int b) { return mu.adjacent(a, b); });
}

namespace {

bool extend_graph_map(const ColoredGraph& g, const ColoredGraph& h, std::vector<int>& map,
                      std::vector<char>& used, int u) {
    if (u == g.n()) return true;
    for (int x = 0; x < h.n(); ++x) {
        if (used[x] || g.color(u) != h.color(x) || g.degree(u) != h.degree(x)) continue;
        bool ok = true;
        for (int w = 0; w < u && ok; ++w)
            if (g.adjacent(u, w) != h.adjacent(x, map[w])) ok = false;
        if (!ok) continue;
        map[u] = x;
        used[x] = 1;
        if (extend_graph_map(g, h, map, used, u + 1)) return true;
        used[x] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> brute_isomorphic(const ColoredGraph& g, const ColoredGraph& h,
                                                 int cap) {
    if (g.n() > cap || h.n() > cap)
        throw capacity_error("brute_isomorphic: size exceeds cap " + std::to_string(cap));
    if (g.n() != h.n()) return std::nullopt;
    auto degseq = [](const ColoredGraph& x) {
        std::vector<std::pair<std::string, int>> d;
        for (int v = 0; v < x.n(); ++v) d.push_back({x.color(v), x.degree(v)});
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degseq(g) != degseq(h)) return std::nullopt;
    std::vector<int> map(g.n(), -1);
    std::vector<char> used(g.n(), 0);
    if (extend_graph_map(g, h, map, used, 0)) return map;
    return std::nullopt;
}

namespace {

bool extend_induced_map(const ColoredGraph& g, const ColoredGraph& h,
                        const std::vector<int>& order, std::vector<int>& map,
                        std::vector<char>& used, size_t k) {
    if (k == order.size()) return true;
    int hu = order[k];
    for (int x = 0; x < g.n(); ++x) {
        if (used[x]) continue;
        bool ok = true;
        for (size_t j = 0; j < k && ok; ++j)
            if (h.adjacent(hu, order[j]) != g.adjacent(x, map[order[j]])) ok = false;
        if (!ok) continue;
        map[hu] = x;
        used[x] = 1;
        if (extend_induced_map(g, h, order, map, used, k + 1)) return true;
        used[x] = 0;
    }
    return false;
}

} // namespace

bool find_induced_subgraph(const ColoredGraph& g, const ColoredGraph& h) {
    if (h.n() > g.n()) return false;
    std::vector<int> order(h.n());
    for (int i = 0; i < h.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> map(h.n(), -1);
    std::vector<char> used(g.n(), 0);
    return extend_induced_map(g, h, order, map, used, 0);
}

IntersectionMatrix neighborhood_matrix(const ColoredGraph& g) {
    if (has_universal_vertex(g))
        throw std::invalid_argument(
            "neighborhood_matrix: universal vertex present; apply reduce() first");
    if (has_twins(g))
        throw std::invalid_argument("neighborhood_matrix: twins present; apply reduce() first");
    const int n = g.n();
    IntersectionMatrix mu(n);
    for (int v = 0; v < n; ++v) mu.set_color(v, g.color(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue; // D by default
            std::uint64_t nu = g.closed_nbhd_mask(u), nv = g.closed_nbhd_mask(v);
            if ((nu & ~nv) == 0) {
                mu.set(u, v, IType::CD);
                continue;
            }
            if ((nv & ~nu) == 0) {
                mu.set(u, v, IType::CS);
                continue;
            }
            if ((nu | nv) == g.all_mask()) {
                bool cc = true;
                std::uint64_t only_u = nu & ~nv, only_v = nv & ~nu;
                for (std::uint64_t m = only_u; m && cc; m &= m - 1)
                    cc = (g.closed_nbhd_mask(std::countr_zero(m)) & ~nu) == 0;
                for (std::uint64_t m = only_v; m && cc; m &= m - 1)
                    cc = (g.closed_nbhd_mask(std::countr_zero(m)) & ~nv) == 0;
                if (cc) {
                    mu.set(u, v, IType::CC);
                    continue;
                }
            }
            mu.set(u, v, IType::OV);
        }
    return mu;
}

ColoredGraph adjacency_graph(const IntersectionMatrix& mu) {
    ColoredGraph g(mu.n());
    for (int v = 0; v < mu.n(); ++v) g.set_color(v, mu.color(v));
    for (int u = 0; u < mu.n(); ++u)
        for (int v = u + 1; v < mu.n(); ++v)
            if (mu.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

} // namespace cag
