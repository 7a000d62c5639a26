#ifndef CAG_PIPELINE_HPP
#define CAG_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cag/graphs.hpp"
#include "cag/matrix.hpp"
#include "cag/model.hpp"

namespace cag {

enum class PipelinePath { INTERVAL, HCA, DELTA_UNIFORM, RESTRICTED, ORACLE_FALLBACK, FAIL };

const char* path_name(PipelinePath p);

struct PipelineOptions {
    int oracle_cap = 6;
};

struct PipelineResult {
    PipelinePath path = PipelinePath::FAIL;
    std::string canonical_string;            // empty iff path == FAIL
    std::optional<Representation> rep;       // of the original input
    std::vector<std::string> diagnostics;
    bool capacity_hit = false;               // some stage skipped for capacity
};

// Full canonization pipeline for a colored graph: reduce, then try the
// interval, HCA, delta-uniform, restricted and oracle routes in order.
PipelineResult canonize_graph(const ColoredGraph& g, const PipelineOptions& opt = {});

// Same pipeline on a raw colored intersection matrix (no reduction step).
PipelineResult canonize_matrix(const IntersectionMatrix& mu, const PipelineOptions& opt = {});

} // namespace cag

#endif
