#ifndef CAG_IO_HPP
#define CAG_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "cag/graphs.hpp"
#include "cag/matrix.hpp"
#include "cag/model.hpp"

namespace cag {

// Graph files:  "p <n>", "e <u> <v>" (1-based), "c <v> <color>", "#" comments.
ColoredGraph parse_graph(std::istream& in);
ColoredGraph parse_graph_file(const std::string& path);

// Matrix files: "m <n>", n rows of n symbols from {., <, >, o, c} with '-'
// on the diagonal, optional "c <v> <color>" lines.
IntersectionMatrix parse_matrix(std::istream& in);
IntersectionMatrix parse_matrix_file(const std::string& path);
std::string matrix_to_text(const IntersectionMatrix& mu);

// Dispatches on the leading directive ('p' or 'm').
std::variant<ColoredGraph, IntersectionMatrix> parse_input_file(const std::string& path);

// Concentric-arc drawing of a model, documentation only.
std::string render_svg(const CircularModel& m);

} // namespace cag

#endif
