#ifndef CAG_ORACLE_HPP
#define CAG_ORACLE_HPP

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cag/matrix.hpp"
#include "cag/model.hpp"
#include "cag/types.hpp"

namespace cag {

// Exhaustive ground truth over all combinatorial CA models of a matrix.
// Rotations are quotiented by pinning endpoint (arc 0, Left) at position 0;
// reflections are enumerated. Deliberately brute force, capacity-guarded.

inline constexpr int kDefaultOracleCap = 6;

// Visits every normalized model of lam exactly once; visitor returns false
// to stop early. Throws capacity_error when lam.n() > cap.
void for_each_normalized(const IntersectionMatrix& lam, int cap,
                         const std::function<bool(const CircularModel&)>& visit);

std::vector<CircularModel> enumerate_normalized(const IntersectionMatrix& lam,
                                                int cap = kDefaultOracleCap);

bool is_ca_matrix(const IntersectionMatrix& lam, int cap = kDefaultOracleCap);

enum class TriangleKind { NHT, IT };

// NHT: some model where the three arcs cover the circle; IT: some model
// where they do not.
bool triangle_representable(const IntersectionMatrix& lam, const std::array<int, 3>& T,
                            TriangleKind kind, int cap = kDefaultOracleCap);

// Unordered partition of N^OV(u) by which endpoint of u's arc each
// neighbor contains; one entry per distinct partition over all models.
using OverlapPartition = std::set<std::set<int>>;
std::set<OverlapPartition> overlap_partitions(const IntersectionMatrix& lam, int u,
                                              int cap = kDefaultOracleCap);

bool is_flip_set_oracle(const IntersectionMatrix& lam, const std::vector<int>& X,
                        int cap = kDefaultOracleCap);

// Every subset realized as the exact cover set of some circle point in some
// model, i.e. all flip sets of lam.
std::set<std::vector<int>> all_flip_sets(const IntersectionMatrix& lam,
                                         int cap = kDefaultOracleCap);

struct ExhaustiveCanon {
    std::string str;
    Representation rep;
};

// Minimum color-annotated model string over all normalized models.
std::optional<ExhaustiveCanon> canonical_exhaustive(const IntersectionMatrix& lam,
                                                    int cap = kDefaultOracleCap);

// A reduced CA graph is Helly iff any (equivalently every) normalized
// representation is a Helly model; decided on the first model found.
std::optional<bool> is_helly_graph(const IntersectionMatrix& lam, int cap = kDefaultOracleCap);

} // namespace cag

#endif
