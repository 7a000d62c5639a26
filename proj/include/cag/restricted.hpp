#ifndef CAG_RESTRICTED_HPP
#define CAG_RESTRICTED_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cag/fliptrick.hpp"
#include "cag/graphs.hpp"
#include "cag/matrix.hpp"
#include "cag/model.hpp"

namespace cag {

struct WitnessCycle {
    std::array<int, 4> cycle; // ordered induced 4-cycle (u,w,w',u')
    int center = -1;          // witness vertex v, -1 when not applicable
};

enum class RestrictedMethod { DEFINITION, TABLE };

struct RestrictedVerdict {
    bool is_restricted = false;
    std::optional<WitnessCycle> witness;
    RestrictedMethod method = RestrictedMethod::DEFINITION;
};

// Table 2 column patterns: entry k of a column is the intersection type of
// cycle vertex k versus the outside vertex (rows u,w,w',u').
const std::vector<std::array<IType, 4>>& restricted_table();

// Oracle-backed search for an induced 4-cycle plus center vertex whose two
// triangles are each representable both ways.
std::optional<WitnessCycle> find_nonuniformity_witness(const ColoredGraph& g,
                                                       const IntersectionMatrix& lam,
                                                       int cap);

RestrictedVerdict is_restricted_by_definition(const IntersectionMatrix& lam);
RestrictedVerdict is_restricted_by_table(const IntersectionMatrix& lam);

// Per ordered induced 4-cycle C: the outside vertices containing some cycle
// vertex. Certification of a candidate X means flip(lam, X) passes the
// definition check.
FlipSetFamily r_flip_selector(const ColoredGraph& g, const IntersectionMatrix& lam);
std::vector<std::vector<int>> certified_r_flip_sets(const ColoredGraph& g,
                                                    const IntersectionMatrix& lam);

struct RestrictedCanonResult {
    std::string payload;
    Representation rep;
    std::vector<int> flip_set_used;
};

// Canonizes via the lexicographically least exhaustive canonization of a
// certified red/blue-colored flipped matrix, then flips the red arcs back.
std::optional<RestrictedCanonResult> reduce_to_restricted(const ColoredGraph& g,
                                                          const IntersectionMatrix& lam,
                                                          int cap);

struct ObstructionReport {
    bool octahedron_found = false;
    bool x0_found = false;
    bool any() const { return octahedron_found || x0_found; }
};

// Necessary-condition screen for non-uniformity: induced complement-of-3K2
// or X0 subgraph.
ObstructionReport obstruction_scan(const ColoredGraph& g);

} // namespace cag

#endif
