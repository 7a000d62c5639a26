#include "cag/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cag {

IntersectionMatrix IntersectionMatrix::relabeled(const std::vector<int>& perm) const {
    // perm[old] = new
    IntersectionMatrix r(n_);
    for (int u = 0; u < n_; ++u) {
        r.set_color(perm[u], colors_[u]);
        for (int v = 0; v < n_; ++v)
            if (u != v) r.set_one_sided(perm[u], perm[v], at(u, v));
    }
    return r;
}

IType z_apply(int i, int j, IType a) {
    if (a == IType::OV) return IType::OV;
    if (i == 0 && j == 0) return a;
    if (i == 0 && j == 1) {
        switch (a) {
        case IType::CC: return IType::CS;
        case IType::CD: return IType::D;
        case IType::CS: return IType::CC;
        case IType::D: return IType::CD;
        default: break;
        }
    }
    if (i == 1 && j == 0) {
        switch (a) {
        case IType::CC: return IType::CD;
        case IType::CD: return IType::CC;
        case IType::CS: return IType::D;
        case IType::D: return IType::CS;
        default: break;
        }
    }
    // i == 1 && j == 1
    switch (a) {
    case IType::CC: return IType::D;
    case IType::CD: return IType::CS;
    case IType::CS: return IType::CD;
    case IType::D: return IType::CC;
    default: break;
    }
    return a;
}

IntersectionMatrix flip(const IntersectionMatrix& mu, const std::vector<int>& X) {
    std::vector<char> in_x(mu.n(), 0);
    for (int v : X) in_x[v] = 1;
    IntersectionMatrix r(mu.n());
    for (int v = 0; v < mu.n(); ++v) r.set_color(v, mu.color(v));
    for (int u = 0; u < mu.n(); ++u)
        for (int v = 0; v < mu.n(); ++v)
            if (u != v) r.set_one_sided(u, v, z_apply(in_x[u], in_x[v], mu.at(u, v)));
    return r;
}

std::vector<std::string> validate(const IntersectionMatrix& mu) {
    std::vector<std::string> out;
    for (int u = 0; u < mu.n(); ++u)
        for (int v = u + 1; v < mu.n(); ++v)
            if (mu.at(v, u) != converse(mu.at(u, v)))
                out.push_back("entries (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                              ") and (" + std::to_string(v + 1) + "," + std::to_string(u + 1) +
                              ") are not converses");
    return out;
}

namespace {

bool extend_matrix_map(const IntersectionMatrix& a, const IntersectionMatrix& b,
                       std::vector<int>& map, std::vector<char>& used, int u) {
    if (u == a.n()) return true;
    for (int x = 0; x < b.n(); ++x) {
        if (used[x] || a.color(u) != b.color(x)) continue;
        bool ok = true;
        for (int w = 0; w < u && ok; ++w)
            if (a.at(u, w) != b.at(x, map[w])) ok = false;
        if (!ok) continue;
        map[u] = x;
        used[x] = 1;
        if (extend_matrix_map(a, b, map, used, u + 1)) return true;
        used[x] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> matrix_isomorphic(const IntersectionMatrix& a,
                                                  const IntersectionMatrix& b, int cap) {
    if (a.n() > cap || b.n() > cap)
        throw capacity_error("matrix_isomorphic: size exceeds cap " + std::to_string(cap));
    if (a.n() != b.n()) return std::nullopt;
    // cheap screen: colored entry multisets must match
    auto profile = [](const IntersectionMatrix& m) {
        std::map<std::pair<std::string, std::vector<int>>, int> p;
        for (int u = 0; u < m.n(); ++u) {
            std::vector<int> row(5, 0);
            for (int v = 0; v < m.n(); ++v)
                if (v != u) row[static_cast<int>(m.at(u, v))]++;
            p[{m.color(u), row}]++;
        }
        return p;
    };
    if (profile(a) != profile(b)) return std::nullopt;
    std::vector<int> map(a.n(), -1);
    std::vector<char> used(a.n(), 0);
    if (extend_matrix_map(a, b, map, used, 0)) return map;
    return std::nullopt;
}

} // namespace cag
