#include "cag/uniform.hpp"

#include <algorithm>
#include <memory>

#include "cag/oracle.hpp"

namespace cag {

std::vector<std::array<int, 3>> overlap_triangles(const IntersectionMatrix& lam) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < lam.n(); ++a)
        for (int b = a + 1; b < lam.n(); ++b) {
            if (lam.at(a, b) != IType::OV) continue;
            for (int c = b + 1; c < lam.n(); ++c)
                if (lam.at(a, c) == IType::OV && lam.at(b, c) == IType::OV)
                    out.push_back({a, b, c});
        }
    return out;
}

namespace {

bool is_ov_triangle(const IntersectionMatrix& lam, int a, int b, int c) {
    return a != b && b != c && a != c && lam.at(a, b) == IType::OV &&
           lam.at(a, c) == IType::OV && lam.at(b, c) == IType::OV;
}

std::array<int, 3> sorted_triangle(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

bool amidst(const ColoredGraph& g, const IntersectionMatrix& lam, int u, int v, int w,
            const NhtDecider& A) {
    if (!is_ov_triangle(lam, u, v, w)) throw std::invalid_argument("amidst: not an overlap triangle");
    const std::vector<int> T{u, v, w};
    if (!exclusive_neighborhood(g, T, {u}).empty() && !exclusive_neighborhood(g, T, {w}).empty())
        return true;
    for (int z : exclusive_neighborhood(g, T, {u, w}))
        if (is_ov_triangle(lam, u, w, z) && A.query(sorted_triangle(u, w, z))) return true;
    return false;
}

SimURelation sim_u(const ColoredGraph& g, const IntersectionMatrix& lam, int u,
                   const NhtDecider& A) {
    SimURelation r;
    r.domain = lam.neighbors_of_type(u, IType::OV);
    const int k = static_cast<int>(r.domain.size());
    r.rel.assign(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) r.rel[i][i] = true;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const int x = r.domain[i], y = r.domain[j];
            bool related = false;
            const IType t = lam.at(x, y);
            if (t == IType::CD || t == IType::CS) {
                related = true;
            } else if (t == IType::OV) {
                related = !A.query(sorted_triangle(u, x, y)) && !amidst(g, lam, x, u, y, A);
            }
            r.rel[i][j] = r.rel[j][i] = related;
        }
    // transitivity check; classes only when it holds
    r.is_equivalence = true;
    for (int i = 0; i < k && r.is_equivalence; ++i)
        for (int j = 0; j < k && r.is_equivalence; ++j)
            for (int l = 0; l < k && r.is_equivalence; ++l)
                if (r.rel[i][j] && r.rel[j][l] && !r.rel[i][l]) r.is_equivalence = false;
    if (r.is_equivalence) {
        std::vector<char> seen(k, 0);
        for (int i = 0; i < k; ++i) {
            if (seen[i]) continue;
            std::vector<int> cls;
            for (int j = 0; j < k; ++j)
                if (r.rel[i][j]) {
                    cls.push_back(r.domain[j]);
                    seen[j] = 1;
                }
            std::sort(cls.begin(), cls.end());
            r.classes.push_back(std::move(cls));
        }
    }
    return r;
}

std::set<std::array<int, 3>> delta_g(const ColoredGraph& g, const IntersectionMatrix& lam) {
    std::set<std::array<int, 3>> out;
    const auto cycles = induced_4cycles(g);
    for (const auto& T : overlap_triangles(lam)) {
        // conditions 1 and 2 are symmetric in the roles
        std::uint64_t cover = 0;
        for (int z : T) cover |= g.closed_nbhd_mask(z);
        if (cover != g.all_mask()) continue;
        bool cond2 = true;
        const std::vector<int> Tv{T[0], T[1], T[2]};
        for (int z : T) {
            for (int x : exclusive_neighborhood(g, Tv, {z}))
                if (lam.at(x, z) != IType::CD) {
                    cond2 = false;
                    break;
                }
            if (!cond2) break;
        }
        if (!cond2) continue;
        // condition 3: some middle role v such that every induced 4-cycle
        // (u,w,w',u') with v overlapping u' and w' keeps N[v] inside
        // N[u'] + N[w']
        bool member = false;
        for (int vi = 0; vi < 3 && !member; ++vi) {
            const int v = T[vi], u = T[(vi + 1) % 3], w = T[(vi + 2) % 3];
            bool ok = true;
            for (const auto& C : cycles) {
                if (!((C[0] == u && C[1] == w) || (C[0] == w && C[1] == u))) continue;
                const int w2 = C[2], u2 = C[3]; // never equal to v: v is adjacent to u and w
                if (lam.at(v, u2) != IType::OV || lam.at(v, w2) != IType::OV) continue;
                std::uint64_t nu = g.closed_nbhd_mask(u2) | g.closed_nbhd_mask(w2);
                if ((g.closed_nbhd_mask(v) & ~nu) != 0) {
                    ok = false;
                    break;
                }
            }
            member = ok;
        }
        if (member) out.insert(T);
    }
    return out;
}

NhtDecider delta_nht_decider(const ColoredGraph& g, const IntersectionMatrix& lam) {
    auto dg = std::make_shared<std::set<std::array<int, 3>>>(delta_g(g, lam));
    NhtDecider d;
    d.tag = NhtDecider::Tag::DELTA;
    d.query = [dg](const std::array<int, 3>& T) {
        std::array<int, 3> s = T;
        std::sort(s.begin(), s.end());
        return dg->count(s) > 0;
    };
    return d;
}

NhtDecider oracle_nht_decider(const IntersectionMatrix& lam, int cap) {
    NhtDecider d;
    d.tag = NhtDecider::Tag::ORACLE;
    d.query = [lam, cap](const std::array<int, 3>& T) {
        return triangle_representable(lam, T, TriangleKind::NHT, cap);
    };
    return d;
}

FlipSetFamily f_uniform(const ColoredGraph& g, const IntersectionMatrix& lam,
                        const NhtDecider& A) {
    std::set<std::vector<int>> cands;
    for (int u = 0; u < lam.n(); ++u) {
        std::vector<int> base{u};
        for (int v : lam.neighbors_of_type(u, IType::CD)) base.push_back(v);
        for (int v : lam.neighbors_of_type(u, IType::CC)) base.push_back(v);
        SimURelation rel = sim_u(g, lam, u, A);
        if (rel.domain.empty()) {
            std::vector<int> c = base;
            std::sort(c.begin(), c.end());
            cands.insert(std::move(c));
            continue;
        }
        if (!rel.is_equivalence) continue; // this u contributes nothing
        for (const auto& cls : rel.classes) {
            std::vector<int> c = base;
            c.insert(c.end(), cls.begin(), cls.end());
            std::sort(c.begin(), c.end());
            cands.insert(std::move(c));
        }
    }
    FlipSetFamily f;
    f.source = A.tag == NhtDecider::Tag::DELTA ? FamilySource::DELTA : FamilySource::UNIFORM;
    f.candidates.assign(cands.begin(), cands.end());
    return f;
}

bool is_uniform(const IntersectionMatrix& lam, int cap) {
    for (const auto& T : overlap_triangles(lam))
        if (triangle_representable(lam, T, TriangleKind::NHT, cap) &&
            triangle_representable(lam, T, TriangleKind::IT, cap))
            return false;
    return true;
}

bool is_delta_uniform(const ColoredGraph& g, const IntersectionMatrix& lam, int cap) {
    for (const auto& T : delta_g(g, lam))
        if (triangle_representable(lam, T, TriangleKind::IT, cap)) return false;
    return true;
}

std::optional<FamilyCanonResult> canonize_uniform(const ColoredGraph& g,
                                                  const IntersectionMatrix& lam) {
    return canonize_with_family(lam, f_uniform(g, lam, delta_nht_decider(g, lam)));
}

} // namespace cag
