#ifndef CAG_FLIPTRICK_HPP
#define CAG_FLIPTRICK_HPP

#include <optional>
#include <string>
#include <vector>

#include "cag/graphs.hpp"
#include "cag/interval.hpp"
#include "cag/matrix.hpp"
#include "cag/model.hpp"

namespace cag {

enum class FamilySource { HCA, UNIFORM, DELTA, RFLIP, CUSTOM };

struct FlipSetFamily {
    std::vector<std::vector<int>> candidates; // sorted sets, deduplicated
    FamilySource source = FamilySource::CUSTOM;
};

// X is a flip set iff the flipped matrix is an interval matrix. For a
// non-CA matrix this is false for every X; callers must not read that as
// "the matrix is CA".
bool is_flip_set(const IntersectionMatrix& lam, const std::vector<int>& X);

// All pairwise closed-neighborhood intersections, u = v included.
FlipSetFamily f_hca(const ColoredGraph& g);

// Color composed for the flip-trick interval instance: membership prefix
// r/ or b/ in front of the vertex color.
std::string flip_membership_color(const std::string& base, bool in_flip_set);

struct FamilyCanonResult {
    std::string payload;            // canonical interval string + red ranks
    Representation rep;             // CA representation of lam
    std::vector<int> flip_set_used;
    std::vector<IntervalToken> tokens;
};

// For each flip set X in the family, canonize the red/blue-colored interval
// matrix lam^(X); keep the lexicographically least string; flip the red arcs
// back. Empty when no member of the family is a flip set.
std::optional<FamilyCanonResult> canonize_with_family(const IntersectionMatrix& lam,
                                                      const FlipSetFamily& family);

} // namespace cag

#endif
