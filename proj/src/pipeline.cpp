#include "cag/pipeline.hpp"

#include <algorithm>

#include "cag/fliptrick.hpp"
#include "cag/interval.hpp"
#include "cag/oracle.hpp"
#include "cag/restricted.hpp"
#include "cag/uniform.hpp"

namespace cag {

const char* path_name(PipelinePath p) {
    switch (p) {
    case PipelinePath::INTERVAL: return "INTERVAL";
    case PipelinePath::HCA: return "HCA";
    case PipelinePath::DELTA_UNIFORM: return "DELTA_UNIFORM";
    case PipelinePath::RESTRICTED: return "RESTRICTED";
    case PipelinePath::ORACLE_FALLBACK: return "ORACLE_FALLBACK";
    case PipelinePath::FAIL: return "FAIL";
    }
    return "?";
}

namespace {

struct StageOutcome {
    PipelinePath path;
    std::string payload;
    Representation rep; // of the matrix vertices
};

// Runs stages 3..7 on a colored matrix. Every stage's success condition is
// label-independent, so the chosen path and payload are isomorphism
// invariants of the colored matrix.
std::optional<StageOutcome> run_stages(const IntersectionMatrix& lam, const PipelineOptions& opt,
                                       std::vector<std::string>& diag, bool& capacity_hit) {
    const ColoredGraph adj = adjacency_graph(lam);

    if (auto direct = canonical_interval_representation(lam)) {
        StageOutcome s;
        s.path = PipelinePath::INTERVAL;
        s.payload = direct->str;
        s.rep.model = direct->model.as_circular();
        s.rep.arc_of.resize(lam.n());
        for (int v = 0; v < lam.n(); ++v) s.rep.arc_of[v] = direct->rank_of[v] - 1;
        return s;
    }
    diag.push_back("interval: matrix is not an interval matrix");

    if (auto r = canonize_with_family(lam, f_hca(adj)))
        return StageOutcome{PipelinePath::HCA, r->payload, r->rep};
    diag.push_back("hca: no common-neighborhood flip set");

    if (auto r = canonize_uniform(adj, lam))
        return StageOutcome{PipelinePath::DELTA_UNIFORM, r->payload, r->rep};
    diag.push_back("uniform: no candidate of the delta selector is a flip set");

    try {
        if (auto r = reduce_to_restricted(adj, lam, opt.oracle_cap))
            return StageOutcome{PipelinePath::RESTRICTED, r->payload, r->rep};
        diag.push_back("restricted: no certified R-flip set");
    } catch (const capacity_error&) {
        capacity_hit = true;
        diag.push_back("restricted: oracle capacity exceeded");
    }

    try {
        if (auto r = canonical_exhaustive(lam, opt.oracle_cap))
            return StageOutcome{PipelinePath::ORACLE_FALLBACK, r->str, r->rep};
        diag.push_back("oracle: no representation; not a CA matrix");
    } catch (const capacity_error&) {
        capacity_hit = true;
        diag.push_back("oracle: capacity exceeded");
    }
    return std::nullopt;
}

std::string join_counts(const std::vector<int>& counts) {
    std::vector<int> sorted(counts);
    std::sort(sorted.begin(), sorted.end());
    std::string s;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(sorted[i]);
    }
    return s;
}

} // namespace

PipelineResult canonize_graph(const ColoredGraph& g, const PipelineOptions& opt) {
    PipelineResult res;
    const ReducedInstance red = reduce(g);

    if (red.core.n() == 0) {
        // everything was universal: a clique; nested near-full arcs
        res.path = PipelinePath::INTERVAL;
        res.canonical_string = std::string("INTERVAL n=") + std::to_string(g.n()) +
                               " u=" + std::to_string(red.universal_vertices.size()) +
                               " t= :: ";
        Representation empty_core{CircularModel::from_order({}), {}};
        res.rep = lift_representation(red, empty_core);
        return res;
    }

    IntersectionMatrix lam;
    try {
        lam = neighborhood_matrix(red.core);
    } catch (const std::invalid_argument& e) {
        res.diagnostics.push_back(std::string("internal: core not reduced: ") + e.what());
        return res;
    }

    auto stage = run_stages(lam, opt, res.diagnostics, res.capacity_hit);
    if (!stage) return res;

    res.path = stage->path;
    res.canonical_string = std::string(path_name(stage->path)) + " n=" + std::to_string(g.n()) +
                           " u=" + std::to_string(red.universal_vertices.size()) +
                           " t=" + join_counts(red.twin_counts) + " :: " + stage->payload;
    res.rep = lift_representation(red, stage->rep);
    return res;
}

PipelineResult canonize_matrix(const IntersectionMatrix& mu, const PipelineOptions& opt) {
    PipelineResult res;
    auto stage = run_stages(mu, opt, res.diagnostics, res.capacity_hit);
    if (!stage) return res;
    res.path = stage->path;
    res.canonical_string = std::string(path_name(stage->path)) + " matrix n=" +
                           std::to_string(mu.n()) + " :: " + stage->payload;
    res.rep = stage->rep;
    return res;
}

} // namespace cag
