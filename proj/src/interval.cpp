#include "cag/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace cag {

LinearModel LinearModel::from_order(std::vector<Endpoint> order) {
    if (order.size() % 2 != 0) throw std::invalid_argument("odd endpoint count");
    const int n = static_cast<int>(order.size() / 2);
    LinearModel m;
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
    for (int a = 0; a < n; ++a)
        if (m.pos_l_[a] > m.pos_r_[a])
            throw std::invalid_argument("left endpoint must precede right endpoint");
    m.order_ = std::move(order);
    return m;
}

CircularModel LinearModel::as_circular() const { return CircularModel::from_order(order_); }

IType intersection_type(const LinearModel& m, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= m.n() || j >= m.n())
        throw std::invalid_argument("intersection_type: bad arc pair");
    int li = m.position(i, Side::Left), ri = m.position(i, Side::Right);
    int lj = m.position(j, Side::Left), rj = m.position(j, Side::Right);
    if (ri < lj || rj < li) return IType::D;
    if (lj < li && ri < rj) return IType::CD;
    if (li < lj && rj < ri) return IType::CS;
    return IType::OV;
}

IntersectionMatrix matrix_of(const LinearModel& m) {
    IntersectionMatrix mu(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = i + 1; j < m.n(); ++j)
            mu.set(i, j, intersection_type(m, i, j));
    return mu;
}

namespace {

// Shared incremental feasibility for left-to-right endpoint placement.
// Opening v against a closed arc forces D; opening v against an open arc u
// forces mu(u,v) in {CS, OV}; closing a against a still-open arc b forces
// CS (b opened first, a nested) or OV (a opened first).
struct LinearSearch {
    const IntersectionMatrix& mu;
    int n;
    std::vector<int> open;    // open arcs in opening order
    std::vector<char> opened; // ever opened
    std::vector<char> closed;
    std::vector<int> rank1;   // 1-based opening rank per vertex
    std::vector<Endpoint> seq;
    int opened_count = 0;

    explicit LinearSearch(const IntersectionMatrix& m)
        : mu(m), n(m.n()), opened(m.n(), 0), closed(m.n(), 0), rank1(m.n(), 0) {}

    bool can_open(int v) const {
        for (int u = 0; u < n; ++u) {
            if (u == v || !opened[u]) continue;
            if (closed[u]) {
                if (mu.at(u, v) != IType::D) return false;
            } else {
                IType t = mu.at(u, v);
                if (t != IType::CS && t != IType::OV) return false;
            }
        }
        return true;
    }

    bool can_close(int a) const {
        for (int b : open) {
            if (b == a) continue;
            if (rank1[b] < rank1[a]) {
                if (mu.at(b, a) != IType::CS) return false;
            } else {
                if (mu.at(a, b) != IType::OV) return false;
            }
        }
        return true;
    }

    void do_open(int v) {
        opened[v] = 1;
        rank1[v] = ++opened_count;
        open.push_back(v);
        seq.push_back({v, Side::Left});
    }
    void undo_open(int v) {
        opened[v] = 0;
        rank1[v] = 0;
        --opened_count;
        open.pop_back();
        seq.pop_back();
    }
    void do_close(int a) {
        closed[a] = 1;
        open.erase(std::find(open.begin(), open.end(), a));
        seq.push_back({a, Side::Right});
    }
    void undo_close(int a, size_t open_pos) {
        closed[a] = 0;
        open.insert(open.begin() + open_pos, a);
        seq.pop_back();
    }

    bool find_any(int placed) {
        if (placed == 2 * n) return true;
        for (int a : std::vector<int>(open)) {
            if (!can_close(a)) continue;
            size_t pos = std::find(open.begin(), open.end(), a) - open.begin();
            do_close(a);
            if (find_any(placed + 1)) return true;
            undo_close(a, pos);
        }
        for (int v = 0; v < n; ++v) {
            if (opened[v] || !can_open(v)) continue;
            do_open(v);
            if (find_any(placed + 1)) return true;
            undo_open(v);
        }
        return false;
    }
};

} // namespace

std::optional<LinearModel> represent_interval(const IntersectionMatrix& mu) {
    if (mu.contains_entry(IType::CC)) return std::nullopt;
    LinearSearch s(mu);
    if (!s.find_any(0)) return std::nullopt;
    return LinearModel::from_order(s.seq);
}

bool is_interval_matrix(const IntersectionMatrix& mu) {
    return represent_interval(mu).has_value();
}

std::string interval_tokens_to_string(const std::vector<IntervalToken>& toks) {
    std::string s;
    for (size_t i = 0; i < toks.size(); ++i) {
        if (i) s += ';';
        s += toks[i].side == Side::Left ? 'L' : 'R';
        s += ',';
        s += toks[i].color;
        s += ',';
        s += std::to_string(toks[i].rank);
    }
    return s;
}

namespace {

// Branch-and-bound for the lexicographically least token string. Children
// are visited in token order; a prefix that already exceeds the incumbent at
// its first divergent position is cut.
struct CanonSearch {
    LinearSearch ls;
    const IntersectionMatrix& mu;
    std::vector<IntervalToken> prefix;
    std::vector<IntervalToken> best;
    std::vector<Endpoint> best_seq;
    bool have_best = false;

    explicit CanonSearch(const IntersectionMatrix& m) : ls(m), mu(m) {}

    struct Move {
        IntervalToken token;
        bool is_open;
        int vertex; // vertex to open or close
    };

    void run() { dfs(true); }

    void dfs(bool tight) {
        const int placed = static_cast<int>(ls.seq.size());
        if (placed == 2 * mu.n()) {
            if (!have_best || prefix < best) {
                best = prefix;
                best_seq = ls.seq;
                have_best = true;
            }
            return;
        }
        std::vector<Move> moves;
        for (int a : ls.open)
            if (ls.can_close(a))
                moves.push_back({{Side::Right, mu.color(a), ls.rank1[a]}, false, a});
        const int next_rank = ls.opened_count + 1;
        for (int v = 0; v < mu.n(); ++v)
            if (!ls.opened[v] && ls.can_open(v))
                moves.push_back({{Side::Left, mu.color(v), next_rank}, true, v});
        std::stable_sort(moves.begin(), moves.end(),
                         [](const Move& a, const Move& b) { return a.token < b.token; });
        for (const Move& mv : moves) {
            bool child_tight = tight;
            if (have_best && tight) {
                auto cmp = mv.token <=> best[placed];
                if (cmp > 0) break; // sorted; every later move is worse
                if (cmp < 0) child_tight = false;
            }
            prefix.push_back(mv.token);
            if (mv.is_open) {
                ls.do_open(mv.vertex);
                dfs(child_tight);
                ls.undo_open(mv.vertex);
            } else {
                size_t pos = std::find(ls.open.begin(), ls.open.end(), mv.vertex) - ls.open.begin();
                ls.do_close(mv.vertex);
                dfs(child_tight);
                ls.undo_close(mv.vertex, pos);
            }
            prefix.pop_back();
        }
    }
};

} // namespace

std::optional<IntervalCanonResult> canonical_interval_representation(const IntersectionMatrix& mu) {
    if (mu.contains_entry(IType::CC)) return std::nullopt;
    CanonSearch cs(mu);
    cs.run();
    if (!cs.have_best) return std::nullopt;

    IntervalCanonResult res;
    res.tokens = std::move(cs.best);
    res.str = interval_tokens_to_string(res.tokens);
    res.rank_of.assign(mu.n(), 0);
    std::vector<Endpoint> ranked;
    ranked.reserve(cs.best_seq.size());
    int next = 0;
    std::vector<int> rank0(mu.n(), -1);
    for (const Endpoint& e : cs.best_seq) {
        if (e.side == Side::Left) rank0[e.arc] = next++;
        ranked.push_back({rank0[e.arc], e.side});
    }
    for (int v = 0; v < mu.n(); ++v) res.rank_of[v] = rank0[v] + 1;
    res.model = LinearModel::from_order(std::move(ranked));
    return res;
}

} // namespace cag
