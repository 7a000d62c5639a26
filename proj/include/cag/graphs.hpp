#ifndef CAG_GRAPHS_HPP
#define CAG_GRAPHS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cag/matrix.hpp"
#include "cag/model.hpp"
#include "cag/types.hpp"

namespace cag {

// Simple graph with vertex colors; adjacency as bitmask rows (n <= 64).
class ColoredGraph {
public:
    ColoredGraph() = default;
    explicit ColoredGraph(int n, std::string default_color = "_");

    int n() const { return n_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return u != v && (adj_[u] >> v & 1); }
    std::uint64_t open_nbhd_mask(int v) const { return adj_[v]; }
    std::uint64_t closed_nbhd_mask(int v) const { return adj_[v] | (std::uint64_t(1) << v); }
    std::uint64_t all_mask() const { return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1; }
    int degree(int v) const;

    const std::string& color(int v) const { return colors_[v]; }
    void set_color(int v, std::string c) { colors_[v] = std::move(c); }

    ColoredGraph relabeled(const std::vector<int>& perm) const;
    bool is_connected() const;

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> colors_;
};

std::vector<int> closed_neighborhood(const ColoredGraph& g, int v);

// N_S(S'): vertices outside S adjacent to every vertex of S' and to none of
// S \ S'. Throws if S' is not a subset of S.
std::vector<int> exclusive_neighborhood(const ColoredGraph& g,
                                        const std::vector<int>& S,
                                        const std::vector<int>& Sprime);

// Same, on a matrix (adjacent = non-D entry).
std::vector<int> exclusive_neighborhood(const IntersectionMatrix& mu,
                                        const std::vector<int>& S,
                                        const std::vector<int>& Sprime);

// Twin/universal preprocessing. Universal vertices are deleted first, then
// twin classes of the remainder are contracted; core colors become
// "<color>#<class size>".
struct ReducedInstance {
    ColoredGraph core;
    std::vector<int> twin_counts;        // per core vertex
    std::vector<std::vector<int>> twin_members; // original ids per core vertex, sorted
    std::vector<int> universal_vertices; // original ids, sorted
    std::vector<int> back_map;           // original -> core vertex, -1 for universal
    int original_n = 0;
};

ReducedInstance reduce(const ColoredGraph& g);

bool has_universal_vertex(const ColoredGraph& g);
bool has_twins(const ColoredGraph& g);

// Expands a representation of the core back to the original graph: twins as
// nested copies, universal vertices as near-full arcs appended at the end.
// The resulting intersection graph equals the original graph under the
// identity vertex map.
Representation lift_representation(const ReducedInstance& r, const Representation& core_rep);

// Ordered tuples (u,w,w',u') with edges uw, ww', w'u', u'u and non-edges
// uw', wu'. Every geometric 4-cycle appears in all 8 orderings.
std::vector<std::array<int, 4>> induced_4cycles(const ColoredGraph& g);
std::vector<std::array<int, 4>> induced_4cycles(const IntersectionMatrix& mu);

// Color-preserving isomorphism by backtracking; n <= cap or capacity_error.
std::optional<std::vector<int>> brute_isomorphic(const ColoredGraph& g, const ColoredGraph& h,
                                                 int cap = 10);

// Does g contain an induced subgraph isomorphic to h (colors ignored)?
bool find_induced_subgraph(const ColoredGraph& g, const ColoredGraph& h);

// Neighborhood matrix: the intersection types forced on every normalized
// representation. Requires a twin-free graph without universal vertices.
IntersectionMatrix neighborhood_matrix(const ColoredGraph& g);

// Adjacency graph of a matrix (non-D entries), colors carried over.
ColoredGraph adjacency_graph(const IntersectionMatrix& mu);

} // namespace cag

#endif
