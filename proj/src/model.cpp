#include "cag/model.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace cag {

CircularModel CircularModel::from_order(std::vector<Endpoint> order) {
    if (order.size() % 2 != 0) throw std::invalid_argument("odd endpoint count");
    const int n = static_cast<int>(order.size() / 2);
    CircularModel m;
    m.n_ = n;
    m.pos_l_.assign(n, -1);
    m.pos_r_.assign(n, -1);
    for (int p = 0; p < static_cast<int>(order.size()); ++p) {
        const Endpoint& e = order[p];
        if (e.arc < 0 || e.arc >= n) throw std::invalid_argument("endpoint arc id out of range");
        int& slot = e.side == Side::Left ? m.pos_l_[e.arc] : m.pos_r_[e.arc];
        if (slot != -1) throw std::invalid_argument("duplicate endpoint");
        slot = p;
    }
    m.order_ = std::move(order);
    return m;
}

bool CircularModel::covers_position(int a, int p) const {
    const int m = size();
    int len = pos_r_[a] - pos_l_[a];
    if (len < 0) len += m;
    int d = p - pos_l_[a];
    if (d < 0) d += m;
    return d <= len;
}

bool CircularModel::covers_gap(int a, int g) const {
    // gap g = the open region between positions g and g+1 (mod 2n); it is
    // covered iff g lies in [l, r) of the arc's traversal.
    const int m = size();
    int len = pos_r_[a] - pos_l_[a];
    if (len < 0) len += m;
    int d = g - pos_l_[a];
    if (d < 0) d += m;
    return d < len;
}

IType classify_arcs(int la, int ra, int lb, int rb, int m) {
    auto covers = [m](int l, int r, int x) {
        int len = r - l;
        if (len < 0) len += m;
        int d = x - l;
        if (d < 0) d += m;
        return d <= len;
    };
    const bool alb = covers(la, ra, lb);
    const bool arb = covers(la, ra, rb);
    const bool bla = covers(lb, rb, la);
    const bool bra = covers(lb, rb, ra);
    if (alb && arb && bla && bra) return IType::CC;
    if (bla && bra) return IType::CD; // a strictly inside b
    if (alb && arb) return IType::CS;
    if (!alb && !arb && !bla && !bra) return IType::D;
    return IType::OV;
}

IType intersection_type(const CircularModel& m, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= m.n() || j >= m.n())
        throw std::invalid_argument("intersection_type: bad arc pair");
    return classify_arcs(m.position(i, Side::Left), m.position(i, Side::Right),
                         m.position(j, Side::Left), m.position(j, Side::Right), m.size());
}

IntersectionMatrix matrix_of(const CircularModel& m) {
    IntersectionMatrix mu(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = i + 1; j < m.n(); ++j)
            mu.set(i, j, intersection_type(m, i, j));
    return mu;
}

CircularModel reverse(const CircularModel& m) {
    std::vector<Endpoint> order(m.order().rbegin(), m.order().rend());
    for (Endpoint& e : order) e.side = e.side == Side::Left ? Side::Right : Side::Left;
    return CircularModel::from_order(std::move(order));
}

CircularModel flip_arcs(const CircularModel& m, const std::vector<int>& X) {
    std::vector<char> in_x(m.n(), 0);
    for (int v : X) in_x[v] = 1;
    std::vector<Endpoint> order = m.order();
    for (Endpoint& e : order)
        if (in_x[e.arc]) e.side = e.side == Side::Left ? Side::Right : Side::Left;
    return CircularModel::from_order(std::move(order));
}

bool has_hole(const CircularModel& m) {
    if (m.n() == 0) return true;
    for (int g = 0; g < m.size(); ++g) {
        bool covered = false;
        for (int a = 0; a < m.n() && !covered; ++a) covered = m.covers_gap(a, g);
        if (!covered) return true;
    }
    return false;
}

namespace {

// Inclusion-maximal cliques of the intersection graph, Bron-Kerbosch.
void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t R, std::uint64_t P,
                   std::uint64_t X, std::vector<std::uint64_t>& out) {
    if (P == 0 && X == 0) {
        out.push_back(R);
        return;
    }
    std::uint64_t PX = P | X;
    int pivot = std::countr_zero(PX);
    std::uint64_t cand = P & ~adj[pivot];
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t bit = std::uint64_t(1) << v;
        bron_kerbosch(adj, R | bit, P & adj[v], X & adj[v], out);
        P &= ~bit;
        X |= bit;
    }
}

} // namespace

bool is_helly_model(const CircularModel& m) {
    const int n = m.n();
    if (n == 0) return true;
    if (n > 64) throw capacity_error("is_helly_model: n > 64");
    std::vector<std::uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && intersection_type(m, i, j) != IType::D) adj[i] |= std::uint64_t(1) << j;
    std::vector<std::uint64_t> cliques;
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    bron_kerbosch(adj, 0, all, 0, cliques);
    for (std::uint64_t c : cliques) {
        bool common = false;
        // probe endpoints and gap interiors
        for (int p = 0; p < m.size() && !common; ++p) {
            bool all_cover = true;
            for (int a = 0; a < n && all_cover; ++a)
                if (c >> a & 1) all_cover = m.covers_position(a, p);
            common = all_cover;
        }
        for (int g = 0; g < m.size() && !common; ++g) {
            bool all_cover = true;
            for (int a = 0; a < n && all_cover; ++a)
                if (c >> a & 1) all_cover = m.covers_gap(a, g);
            common = all_cover;
        }
        if (!common) return false;
    }
    return true;
}

namespace {

struct AnnotatedToken {
    int arc;
    Side side;
    const std::string* color; // null when uncolored

    friend auto operator<=>(const AnnotatedToken& a, const AnnotatedToken& b) {
        if (auto c = a.arc <=> b.arc; c != 0) return c;
        if (auto c = static_cast<int>(a.side) <=> static_cast<int>(b.side); c != 0) return c;
        if (a.color && b.color) {
            if (auto c = a.color->compare(*b.color); c != 0) return c <=> 0;
        }
        return std::strong_ordering::equal;
    }
};

std::vector<AnnotatedToken> traversal_string(const CircularModel& m, int start_arc,
                                             const std::vector<std::string>* colors) {
    const int sz = m.size();
    std::vector<int> new_id(m.n(), -1);
    int next = 0;
    const int start = m.position(start_arc, Side::Left);
    for (int k = 0; k < sz; ++k) {
        const Endpoint& e = m.at((start + k) % sz);
        if (e.side == Side::Left) new_id[e.arc] = next++;
    }
    std::vector<AnnotatedToken> out;
    out.reserve(sz);
    for (int k = 0; k < sz; ++k) {
        const Endpoint& e = m.at((start + k) % sz);
        out.push_back({new_id[e.arc], e.side, colors ? &(*colors)[e.arc] : nullptr});
    }
    return out;
}

ModelString best_string(const CircularModel& m, const std::vector<std::string>* colors) {
    ModelString best;
    bool have = false;
    std::vector<std::string> rev_colors;
    for (int orient = 0; orient < 2; ++orient) {
        const CircularModel mm = orient == 0 ? m : reverse(m);
        for (int a = 0; a < m.n(); ++a) {
            auto s = traversal_string(mm, a, colors);
            ModelString cand;
            cand.tokens.reserve(s.size());
            for (const auto& t : s) cand.tokens.push_back({t.arc, t.side});
            if (colors)
                for (const auto& t : s) cand.colors.push_back(*t.color);
            auto less = [&](const ModelString& x, const ModelString& y) {
                for (size_t i = 0; i < x.tokens.size(); ++i) {
                    if (x.tokens[i].arc != y.tokens[i].arc) return x.tokens[i].arc < y.tokens[i].arc;
                    if (x.tokens[i].side != y.tokens[i].side) return x.tokens[i].side == Side::Left;
                    if (colors && x.colors[i] != y.colors[i]) return x.colors[i] < y.colors[i];
                }
                return false;
            };
            if (!have || less(cand, best)) {
                best = std::move(cand);
                have = true;
            }
        }
    }
    return best;
}

} // namespace

std::string ModelString::text() const {
    std::string s;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) s += ' ';
        s += tokens[i].side == Side::Left ? 'L' : 'R';
        s += std::to_string(tokens[i].arc + 1);
        if (!colors.empty()) {
            s += ':';
            s += colors[i];
        }
    }
    return s;
}

ModelString model_string(const CircularModel& m) {
    if (m.n() == 0) return {};
    return best_string(m, nullptr);
}

ModelString model_string(const CircularModel& m, const std::vector<std::string>& arc_colors) {
    if (m.n() == 0) return {};
    return best_string(m, &arc_colors);
}

Representation flip_representation(const Representation& rho, const std::vector<int>& X) {
    std::vector<int> arcs;
    arcs.reserve(X.size());
    for (int v : X) arcs.push_back(rho.arc_of[v]);
    return {flip_arcs(rho.model, arcs), rho.arc_of};
}

} // namespace cag
