// Command-line front end: canonization pipeline, isomorphism test,
// classification report, matrix dump, witness search, SVG rendering and
// direct oracle queries.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "cag/fliptrick.hpp"
#include "cag/graphs.hpp"
#include "cag/interval.hpp"
#include "cag/io.hpp"
#include "cag/matrix.hpp"
#include "cag/model.hpp"
#include "cag/oracle.hpp"
#include "cag/pipeline.hpp"
#include "cag/restricted.hpp"
#include "cag/uniform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNotCa = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitInternal = 5;

struct Options {
    int oracle_cap = cag::kDefaultOracleCap;
    std::uint64_t seed = 0; // reserved for reproducibility of randomized tooling
    std::string format = "text";
};

cag::PipelineResult run_pipeline(const std::string& path, const Options& opt) {
    auto input = cag::parse_input_file(path);
    cag::PipelineOptions popt;
    popt.oracle_cap = opt.oracle_cap;
    if (std::holds_alternative<cag::ColoredGraph>(input))
        return cag::canonize_graph(std::get<cag::ColoredGraph>(input), popt);
    return cag::canonize_matrix(std::get<cag::IntersectionMatrix>(input), popt);
}

std::string model_text(const cag::CircularModel& m) {
    std::string s;
    for (int p = 0; p < m.size(); ++p) {
        if (p) s += ' ';
        s += m.at(p).side == cag::Side::Left ? 'L' : 'R';
        s += std::to_string(m.at(p).arc + 1);
    }
    return s;
}

nlohmann::json result_json(const cag::PipelineResult& r) {
    nlohmann::json j;
    j["path_taken"] = cag::path_name(r.path);
    j["canonical_string"] = r.canonical_string;
    j["diagnostics"] = r.diagnostics;
    if (r.rep) {
        j["model"] = model_text(r.rep->model);
        nlohmann::json vm = nlohmann::json::object();
        for (size_t v = 0; v < r.rep->arc_of.size(); ++v)
            vm[std::to_string(v + 1)] = r.rep->arc_of[v] + 1;
        j["vertex_map"] = vm;
    } else {
        j["model"] = nullptr;
        j["vertex_map"] = nullptr;
    }
    return j;
}

int emit_result(const cag::PipelineResult& r, const Options& opt) {
    if (opt.format == "json") {
        std::cout << result_json(r).dump(2) << "\n";
    } else {
        std::cout << "path: " << cag::path_name(r.path) << "\n";
        std::cout << "canonical: " << r.canonical_string << "\n";
        for (const auto& d : r.diagnostics) std::cout << "note: " << d << "\n";
    }
    if (r.path == cag::PipelinePath::FAIL) return r.capacity_hit ? kExitCapacity : kExitNotCa;
    return kExitOk;
}

int cmd_canon(const std::string& file, const Options& opt) {
    return emit_result(run_pipeline(file, opt), opt);
}

int cmd_iso(const std::string& f1, const std::string& f2, const Options& opt) {
    auto a = run_pipeline(f1, opt);
    auto b = run_pipeline(f2, opt);
    if (a.path == cag::PipelinePath::FAIL || b.path == cag::PipelinePath::FAIL) {
        std::cout << "isomorphic: unknown (some input failed to canonize)\n";
        return (a.capacity_hit || b.capacity_hit) ? kExitCapacity : kExitNotCa;
    }
    const bool iso = a.canonical_string == b.canonical_string;
    if (opt.format == "json") {
        nlohmann::json j;
        j["isomorphic"] = iso;
        j["canonical_a"] = a.canonical_string;
        j["canonical_b"] = b.canonical_string;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "isomorphic: " << (iso ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_matrix(const std::string& file, const Options&) {
    auto g = cag::parse_graph_file(file);
    if (!cag::has_twins(g) && !cag::has_universal_vertex(g)) {
        std::cout << cag::matrix_to_text(cag::neighborhood_matrix(g));
        return kExitOk;
    }
    auto red = cag::reduce(g);
    std::cout << "# input had twins or universal vertices; this is the core matrix\n";
    std::cout << cag::matrix_to_text(cag::neighborhood_matrix(red.core));
    return kExitOk;
}

int cmd_classify(const std::string& file, const Options& opt) {
    auto input = cag::parse_input_file(file);
    cag::IntersectionMatrix lam;
    if (std::holds_alternative<cag::ColoredGraph>(input)) {
        auto red = cag::reduce(std::get<cag::ColoredGraph>(input));
        lam = cag::neighborhood_matrix(red.core);
    } else {
        lam = std::get<cag::IntersectionMatrix>(input);
    }
    const cag::ColoredGraph adj = cag::adjacency_graph(lam);
    auto line = [](const std::string& name, const std::string& v) {
        std::cout << name << ": " << v << "\n";
    };
    try {
        if (!cag::is_ca_matrix(lam, opt.oracle_cap)) {
            line("ca", "no");
            return kExitNotCa;
        }
        line("ca", "yes");
        auto helly = cag::is_helly_graph(lam, opt.oracle_cap);
        line("helly", helly.value() ? "yes" : "no");
        line("uniform", cag::is_uniform(lam, opt.oracle_cap) ? "yes" : "no");
        line("delta-uniform", cag::is_delta_uniform(adj, lam, opt.oracle_cap) ? "yes" : "no");
    } catch (const cag::capacity_error&) {
        line("helly", "skipped(capacity)");
        line("uniform", "skipped(capacity)");
        line("delta-uniform", "skipped(capacity)");
    }
    line("restricted-reducible", cag::certified_r_flip_sets(adj, lam).empty() ? "no" : "yes");
    return kExitOk;
}

int cmd_witness(const std::string& file, const Options& opt) {
    auto g = cag::parse_graph_file(file);
    auto red = cag::reduce(g);
    auto lam = cag::neighborhood_matrix(red.core);
    auto w = cag::find_nonuniformity_witness(red.core, lam, opt.oracle_cap);
    if (!w) {
        std::cout << "witness: none\n";
        return kExitOk;
    }
    std::cout << "witness: cycle(";
    for (int i = 0; i < 4; ++i) std::cout << (i ? "," : "") << w->cycle[i] + 1;
    std::cout << ") center " << w->center + 1 << "\n";
    return kExitOk;
}

int cmd_render(const std::string& file, const std::string& out, const Options& opt) {
    auto r = run_pipeline(file, opt);
    if (r.path == cag::PipelinePath::FAIL || !r.rep) {
        std::cerr << "error: input has no representation\n";
        return r.capacity_hit ? kExitCapacity : kExitNotCa;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return kExitParse;
    }
    f << cag::render_svg(r.rep->model);
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

cag::IntersectionMatrix load_lambda(const std::string& file) {
    auto input = cag::parse_input_file(file);
    if (std::holds_alternative<cag::IntersectionMatrix>(input))
        return std::get<cag::IntersectionMatrix>(input);
    auto red = cag::reduce(std::get<cag::ColoredGraph>(input));
    return cag::neighborhood_matrix(red.core);
}

int cmd_oracle(const std::string& query, const std::string& file,
               const std::vector<int>& args, const Options& opt) {
    auto lam = load_lambda(file);
    auto need = [&](size_t k, const char* what) {
        if (args.size() != k) throw cag::parse_error(std::string("query needs ") + what);
    };
    if (query == "count") {
        std::size_t c = 0;
        cag::for_each_normalized(lam, opt.oracle_cap, [&](const cag::CircularModel&) {
            ++c;
            return true;
        });
        std::cout << c << "\n";
    } else if (query == "ca") {
        std::cout << (cag::is_ca_matrix(lam, opt.oracle_cap) ? "yes" : "no") << "\n";
    } else if (query == "flipset") {
        std::vector<int> X;
        for (int v : args) X.push_back(v - 1);
        std::cout << (cag::is_flip_set_oracle(lam, X, opt.oracle_cap) ? "yes" : "no") << "\n";
    } else if (query == "nht" || query == "it") {
        need(3, "three triangle vertices");
        std::array<int, 3> T{args[0] - 1, args[1] - 1, args[2] - 1};
        auto kind = query == "nht" ? cag::TriangleKind::NHT : cag::TriangleKind::IT;
        std::cout << (cag::triangle_representable(lam, T, kind, opt.oracle_cap) ? "yes" : "no")
                  << "\n";
    } else if (query == "partitions") {
        need(1, "one vertex");
        auto parts = cag::overlap_partitions(lam, args[0] - 1, opt.oracle_cap);
        std::cout << parts.size() << "\n";
        for (const auto& p : parts) {
            std::string s;
            for (const auto& side : p) {
                s += "{";
                bool first = true;
                for (int v : side) {
                    if (!first) s += ",";
                    s += std::to_string(v + 1);
                    first = false;
                }
                s += "} ";
            }
            std::cout << s << "\n";
        }
    } else if (query == "canon") {
        auto c = cag::canonical_exhaustive(lam, opt.oracle_cap);
        if (!c) {
            std::cout << "none\n";
            return kExitNotCa;
        }
        std::cout << c->str << "\n";
    } else {
        throw cag::parse_error("unknown oracle query '" + query + "'");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical circular-arc representations via the flip trick"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--oracle-cap", opt.oracle_cap, "exhaustive oracle capacity (vertices)")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized tooling")->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string file, file2, outfile, query;
    std::vector<int> qargs;

    auto* canon = app.add_subcommand("canon", "canonize a graph or matrix file");
    canon->add_option("file", file)->required();
    auto* iso = app.add_subcommand("iso", "compare two inputs up to isomorphism");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();
    auto* matrix = app.add_subcommand("matrix", "print the neighborhood matrix of the core");
    matrix->add_option("file", file)->required();
    auto* classify = app.add_subcommand("classify", "class membership report");
    classify->add_option("file", file)->required();
    auto* witness = app.add_subcommand("witness", "search for a non-uniformity witness");
    witness->add_option("file", file)->required();
    auto* render = app.add_subcommand("render", "draw the canonical model as SVG");
    render->add_option("file", file)->required();
    render->add_option("out", outfile)->required();
    auto* oracle = app.add_subcommand("oracle", "direct oracle queries");
    oracle->add_option("query", query, "count|ca|flipset|nht|it|partitions|canon")->required();
    oracle->add_option("file", file)->required();
    oracle->add_option("args", qargs, "query arguments (1-based vertices)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*canon) return cmd_canon(file, opt);
        if (*iso) return cmd_iso(file, file2, opt);
        if (*matrix) return cmd_matrix(file, opt);
        if (*classify) return cmd_classify(file, opt);
        if (*witness) return cmd_witness(file, opt);
        if (*render) return cmd_render(file, outfile, opt);
        if (*oracle) return cmd_oracle(query, file, qargs, opt);
    } catch (const cag::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const cag::capacity_error& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
