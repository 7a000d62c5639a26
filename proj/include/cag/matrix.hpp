#ifndef CAG_MATRIX_HPP
#define CAG_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "cag/types.hpp"

namespace cag {

// Square matrix over intersection types with optional vertex colors.
// Off-diagonal entries are kept converse-consistent by set(); the diagonal
// is unused and reads as D.
class IntersectionMatrix {
public:
    IntersectionMatrix() : n_(0) {}
    explicit IntersectionMatrix(int n, std::string default_color = "_")
        : n_(n), e_(static_cast<size_t>(n) * n, IType::D), colors_(n, std::move(default_color)) {}

    int n() const { return n_; }

    IType at(int u, int v) const { return e_[idx(u, v)]; }
    void set(int u, int v, IType t) {
        e_[idx(u, v)] = t;
        e_[idx(v, u)] = converse(t);
    }
    // Writes one direction only; exists so validate() has something to catch.
    void set_one_sided(int u, int v, IType t) { e_[idx(u, v)] = t; }

    bool adjacent(int u, int v) const { return u != v && at(u, v) != IType::D; }

    const std::string& color(int v) const { return colors_[v]; }
    void set_color(int v, std::string c) { colors_[v] = std::move(c); }

    std::vector<int> neighbors_of_type(int u, IType t) const {
        std::vector<int> r;
        for (int v = 0; v < n_; ++v)
            if (v != u && at(u, v) == t) r.push_back(v);
        return r;
    }

    bool contains_entry(IType t) const {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (at(u, v) == t || at(v, u) == t) return true;
        return false;
    }

    IntersectionMatrix relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }
    int n_;
    std::vector<IType> e_;
    std::vector<std::string> colors_;
};

// Table 1 flip algebra. i/j say whether the row/column vertex is flipped.
IType z_apply(int i, int j, IType a);

// Entrywise flip of the vertex set X.
IntersectionMatrix flip(const IntersectionMatrix& mu, const std::vector<int>& X);

// Consistency diagnostics: converse violations and out-of-range colors.
// Empty result means the matrix is well-formed.
std::vector<std::string> validate(const IntersectionMatrix& mu);

// Entry- and color-preserving bijection test, n <= cap (throws capacity_error).
std::optional<std::vector<int>> matrix_isomorphic(const IntersectionMatrix& a,
                                                  const IntersectionMatrix& b,
                                                  int cap = 10);

} // namespace cag

#endif
