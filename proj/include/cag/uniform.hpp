#ifndef CAG_UNIFORM_HPP
#define CAG_UNIFORM_HPP

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cag/fliptrick.hpp"
#include "cag/graphs.hpp"
#include "cag/matrix.hpp"

namespace cag {

// Answers "is this overlap triangle representable as a non-Helly triangle".
// DELTA deciders are label-independent by construction; the ORACLE decider
// is exact but capacity-bounded.
struct NhtDecider {
    enum class Tag { ORACLE, DELTA };
    Tag tag = Tag::DELTA;
    std::function<bool(const std::array<int, 3>&)> query;
};

std::vector<std::array<int, 3>> overlap_triangles(const IntersectionMatrix& lam);

// Is v amidst u and w within the overlap triangle {u,v,w}?
bool amidst(const ColoredGraph& g, const IntersectionMatrix& lam, int u, int v, int w,
            const NhtDecider& A);

struct SimURelation {
    std::vector<int> domain;              // N^OV(u)
    std::vector<std::vector<bool>> rel;   // over domain indices
    bool is_equivalence = false;
    std::vector<std::vector<int>> classes; // empty unless is_equivalence
};

SimURelation sim_u(const ColoredGraph& g, const IntersectionMatrix& lam, int u,
                   const NhtDecider& A);

// The label-independent over-approximation of the NHT-representable
// triangles.
std::set<std::array<int, 3>> delta_g(const ColoredGraph& g, const IntersectionMatrix& lam);

NhtDecider delta_nht_decider(const ColoredGraph& g, const IntersectionMatrix& lam);
NhtDecider oracle_nht_decider(const IntersectionMatrix& lam, int cap);

// Per vertex u and class X of ~u: {u} + containers of u + circle-cover
// partners of u + X. Vertices with empty overlap neighborhood contribute the
// bare candidate without X.
FlipSetFamily f_uniform(const ColoredGraph& g, const IntersectionMatrix& lam,
                        const NhtDecider& A);

// Oracle-backed classification (diagnostics only; the pipeline never needs
// these to canonize).
bool is_uniform(const IntersectionMatrix& lam, int cap);
bool is_delta_uniform(const ColoredGraph& g, const IntersectionMatrix& lam, int cap);

// f_uniform with the DELTA decider fed into the flip trick; empty when no
// candidate is a flip set.
std::optional<FamilyCanonResult> canonize_uniform(const ColoredGraph& g,
                                                  const IntersectionMatrix& lam);

} // namespace cag

#endif
