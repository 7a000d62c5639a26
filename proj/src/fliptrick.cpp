#include "cag/fliptrick.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cag {

bool is_flip_set(const IntersectionMatrix& lam, const std::vector<int>& X) {
    return is_interval_matrix(flip(lam, X));
}

FlipSetFamily f_hca(const ColoredGraph& g) {
    std::set<std::vector<int>> cands;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u; v < g.n(); ++v) {
            std::uint64_t m = g.closed_nbhd_mask(u) & g.closed_nbhd_mask(v);
            std::vector<int> s;
            while (m) {
                s.push_back(std::countr_zero(m));
                m &= m - 1;
            }
            cands.insert(std::move(s));
        }
    FlipSetFamily f;
    f.source = FamilySource::HCA;
    f.candidates.assign(cands.begin(), cands.end());
    return f;
}

std::string flip_membership_color(const std::string& base, bool in_flip_set) {
    return (in_flip_set ? "r/" : "b/") + base;
}

std::optional<FamilyCanonResult> canonize_with_family(const IntersectionMatrix& lam,
                                                      const FlipSetFamily& family) {
    std::optional<FamilyCanonResult> best;
    std::optional<IntervalCanonResult> best_interval;
    std::vector<std::vector<int>> cands = family.candidates;
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    for (const std::vector<int>& X : cands) {
        IntersectionMatrix mx = flip(lam, X);
        std::vector<char> in_x(lam.n(), 0);
        for (int v : X) in_x[v] = 1;
        for (int v = 0; v < lam.n(); ++v)
            mx.set_color(v, flip_membership_color(lam.color(v), in_x[v]));
        auto canon = canonical_interval_representation(mx);
        if (!canon) continue; // not a flip set
        if (best_interval && !(canon->tokens < best_interval->tokens)) continue;

        FamilyCanonResult r;
        r.flip_set_used = X;
        r.tokens = canon->tokens;
        // flip the red arcs back on the circle
        std::vector<int> red_arcs;
        for (int v : X) red_arcs.push_back(canon->rank_of[v] - 1);
        std::sort(red_arcs.begin(), red_arcs.end());
        r.rep.model = flip_arcs(canon->model.as_circular(), red_arcs);
        r.rep.arc_of.resize(lam.n());
        for (int v = 0; v < lam.n(); ++v) r.rep.arc_of[v] = canon->rank_of[v] - 1;
        std::string red;
        for (size_t i = 0; i < red_arcs.size(); ++i) {
            if (i) red += ',';
            red += std::to_string(red_arcs[i] + 1);
        }
        r.payload = canon->str + "|red=" + red;
        best = std::move(r);
        best_interval = std::move(canon);
    }
    return best;
}

} // namespace cag
