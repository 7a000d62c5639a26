#include "cag/oracle.hpp"

#include <algorithm>

namespace cag {

namespace {

// Backtracking placement of endpoints at positions 1..2n-1; position 0 is
// pinned to (arc 0, Left). When an arc completes, its types against every
// complete arc must match lam; half-open/complete pairs are pruned by an
// existence check over the remaining positions of the unplaced endpoint.
struct Enumerator {
    const IntersectionMatrix& lam;
    const std::function<bool(const CircularModel&)>& visit;
    int n, m;
    std::vector<int> pos_l, pos_r;
    std::vector<int> placed; // 0/1/2 per arc
    std::vector<Endpoint> order;
    std::vector<int> complete;
    std::vector<int> half; // arcs with exactly one endpoint placed
    bool stopped = false;

    Enumerator(const IntersectionMatrix& l, const std::function<bool(const CircularModel&)>& v)
        : lam(l), visit(v), n(l.n()), m(2 * l.n()), pos_l(n, -1), pos_r(n, -1), placed(n, 0),
          order(2 * l.n(), Endpoint{-1, Side::Left}) {}

    // Can the unplaced endpoint of arc a land somewhere after position p so
    // that a's type against complete arc b comes out right?
    bool feasible_vs_complete(int a, int p, int b) const {
        const IType want = lam.at(a, b);
        const int pa = pos_l[a] != -1 ? pos_l[a] : pos_r[a];
        const bool placed_left = pos_l[a] != -1;
        for (int q = p + 1; q < m; ++q) {
            const int la = placed_left ? pa : q;
            const int ra = placed_left ? q : pa;
            if (classify_arcs(la, ra, pos_l[b], pos_r[b], m) == want) return true;
        }
        return false;
    }

    bool check_placement(int a, int p) {
        if (placed[a] == 2) {
            for (int b : complete)
                if (b != a &&
                    classify_arcs(pos_l[a], pos_r[a], pos_l[b], pos_r[b], m) != lam.at(a, b))
                    return false;
            for (int h : half)
                if (!feasible_vs_complete(h, p, a)) return false;
        } else {
            for (int b : complete)
                if (!feasible_vs_complete(a, p, b)) return false;
        }
        return true;
    }

    void extend(int p) {
        if (stopped) return;
        if (p == m) {
            if (!visit(CircularModel::from_order(order))) stopped = true;
            return;
        }
        for (int a = 0; a < n; ++a) {
            if (placed[a] == 2) continue;
            for (int s = 0; s < 2; ++s) {
                if (stopped) return;
                const Side side = s == 0 ? Side::Left : Side::Right;
                int& slot = side == Side::Left ? pos_l[a] : pos_r[a];
                if (slot != -1) continue;
                slot = p;
                placed[a]++;
                order[p] = {a, side};
                const bool completes = placed[a] == 2;
                if (completes) {
                    half.erase(std::find(half.begin(), half.end(), a));
                    complete.push_back(a);
                } else {
                    half.push_back(a);
                }
                if (check_placement(a, p)) extend(p + 1);
                if (completes) {
                    complete.pop_back();
                    half.push_back(a);
                } else {
                    // half is order-insensitive and may have been reshuffled
                    // by deeper undos
                    half.erase(std::find(half.begin(), half.end(), a));
                }
                placed[a]--;
                slot = -1;
            }
        }
    }

    void run() {
        if (n == 0) {
            visit(CircularModel::from_order({}));
            return;
        }
        pos_l[0] = 0;
        placed[0] = 1;
        order[0] = {0, Side::Left};
        half.push_back(0);
        extend(1);
    }
};

} // namespace

void for_each_normalized(const IntersectionMatrix& lam, int cap,
                         const std::function<bool(const CircularModel&)>& visit) {
    if (lam.n() > cap)
        throw capacity_error("oracle: n=" + std::to_string(lam.n()) + " exceeds cap " +
                             std::to_string(cap));
    Enumerator e(lam, visit);
    e.run();
}

std::vector<CircularModel> enumerate_normalized(const IntersectionMatrix& lam, int cap) {
    std::vector<CircularModel> out;
    for_each_normalized(lam, cap, [&](const CircularModel& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

bool is_ca_matrix(const IntersectionMatrix& lam, int cap) {
    bool found = false;
    for_each_normalized(lam, cap, [&](const CircularModel&) {
        found = true;
        return false;
    });
    return found;
}

bool triangle_representable(const IntersectionMatrix& lam, const std::array<int, 3>& T,
                            TriangleKind kind, int cap) {
    bool found = false;
    for_each_normalized(lam, cap, [&](const CircularModel& m) {
        bool covers_circle = true;
        for (int g = 0; g < m.size() && covers_circle; ++g)
            covers_circle = m.covers_gap(T[0], g) || m.covers_gap(T[1], g) || m.covers_gap(T[2], g);
        if ((kind == TriangleKind::NHT) == covers_circle) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

std::set<OverlapPartition> overlap_partitions(const IntersectionMatrix& lam, int u, int cap) {
    std::vector<int> ov = lam.neighbors_of_type(u, IType::OV);
    std::set<OverlapPartition> out;
    for_each_normalized(lam, cap, [&](const CircularModel& m) {
        std::set<int> left, right;
        for (int v : ov) {
            if (m.covers_position(v, m.position(u, Side::Left)))
                left.insert(v);
            else
                right.insert(v);
        }
        out.insert(OverlapPartition{left, right});
        return true;
    });
    return out;
}

namespace {

std::vector<int> cover_set_at_position(const CircularModel& m, int p) {
    std::vector<int> s;
    for (int a = 0; a < m.n(); ++a)
        if (m.covers_position(a, p)) s.push_back(a);
    return s;
}

std::vector<int> cover_set_at_gap(const CircularModel& m, int g) {
    std::vector<int> s;
    for (int a = 0; a < m.n(); ++a)
        if (m.covers_gap(a, g)) s.push_back(a);
    return s;
}

} // namespace

bool is_flip_set_oracle(const IntersectionMatrix& lam, const std::vector<int>& X, int cap) {
    std::vector<int> want(X);
    std::sort(want.begin(), want.end());
    bool found = false;
    for_each_normalized(lam, cap, [&](const CircularModel& m) {
        for (int p = 0; p < m.size(); ++p) {
            if (cover_set_at_position(m, p) == want || cover_set_at_gap(m, p) == want) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

std::set<std::vector<int>> all_flip_sets(const IntersectionMatrix& lam, int cap) {
    std::set<std::vector<int>> out;
    for_each_normalized(lam, cap, [&](const CircularModel& m) {
        for (int p = 0; p < m.size(); ++p) {
            out.insert(cover_set_at_position(m, p));
            out.insert(cover_set_at_gap(m, p));
        }
        return true;
    });
    return out;
}

std::optional<ExhaustiveCanon> canonical_exhaustive(const IntersectionMatrix& lam, int cap) {
    std::vector<std::string> colors(lam.n());
    for (int v = 0; v < lam.n(); ++v) colors[v] = lam.color(v);

    bool have = false;
    ModelString best;
    CircularModel best_model;
    for_each_normalized(lam, cap, [&](const CircularModel& m) {
        ModelString s = model_string(m, colors);
        auto less = [](const ModelString& x, const ModelString& y) {
            for (size_t i = 0; i < x.tokens.size(); ++i) {
                if (x.tokens[i].arc != y.tokens[i].arc) return x.tokens[i].arc < y.tokens[i].arc;
                if (x.tokens[i].side != y.tokens[i].side) return x.tokens[i].side == Side::Left;
                if (x.colors[i] != y.colors[i]) return x.colors[i] < y.colors[i];
            }
            return false;
        };
        if (!have || less(s, best)) {
            best = std::move(s);
            best_model = m;
            have = true;
        }
        return true;
    });
    if (!have) return std::nullopt;

    // rebuild the witness in canonical labels: arc of vertex v = its rank in
    // the best string's relabeling
    ExhaustiveCanon res;
    res.str = best.text();
    if (lam.n() == 0) {
        res.rep.model = CircularModel::from_order({});
        return res;
    }
    // recover the traversal that produced `best` from best_model
    std::vector<std::string> cvec(colors);
    for (int orient = 0; orient < 2; ++orient) {
        CircularModel mm = orient == 0 ? best_model : reverse(best_model);
        for (int a = 0; a < mm.n(); ++a) {
            // relabel by traversal from arc a
            const int sz = mm.size();
            std::vector<int> new_id(mm.n(), -1);
            int next = 0;
            const int start = mm.position(a, Side::Left);
            for (int k = 0; k < sz; ++k) {
                const Endpoint& e = mm.at((start + k) % sz);
                if (e.side == Side::Left) new_id[e.arc] = next++;
            }
            ModelString cand;
            for (int k = 0; k < sz; ++k) {
                const Endpoint& e = mm.at((start + k) % sz);
                cand.tokens.push_back({new_id[e.arc], e.side});
                cand.colors.push_back(cvec[e.arc]);
            }
            if (cand == best) {
                std::vector<Endpoint> order;
                for (int k = 0; k < sz; ++k) {
                    const Endpoint& e = mm.at((start + k) % sz);
                    order.push_back({new_id[e.arc], e.side});
                }
                res.rep.model = CircularModel::from_order(order);
                res.rep.arc_of = new_id;
                return res;
            }
        }
    }
    // unreachable: best came from best_model
    throw std::logic_error("canonical_exhaustive: witness reconstruction failed");
}

std::optional<bool> is_helly_graph(const IntersectionMatrix& lam, int cap) {
    std::optional<bool> res;
    for_each_normalized(lam, cap, [&](const CircularModel& m) {
        res = is_helly_model(m);
        return false;
    });
    return res;
}

} // namespace cag
