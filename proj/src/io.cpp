#include "cag/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cag {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

int parse_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw parse_error(std::string("expected integer for ") + what + ", got '" + s + "'");
    }
}

} // namespace

ColoredGraph parse_graph(std::istream& in) {
    auto lines = tokenize_lines(in);
    if (lines.empty() || lines[0][0] != "p")
        throw parse_error("graph file must start with 'p <n>'");
    if (lines[0].size() != 2) throw parse_error("malformed 'p' line");
    const int n = parse_int(lines[0][1], "vertex count");
    if (n < 0) throw parse_error("negative vertex count");
    ColoredGraph g(n);
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t[0] == "e") {
            if (t.size() != 3) throw parse_error("malformed 'e' line");
            int u = parse_int(t[1], "edge endpoint"), v = parse_int(t[2], "edge endpoint");
            if (u < 1 || v < 1 || u > n || v > n || u == v)
                throw parse_error("edge endpoints out of range: " + t[1] + " " + t[2]);
            g.add_edge(u - 1, v - 1);
        } else if (t[0] == "c") {
            if (t.size() != 3) throw parse_error("malformed 'c' line");
            int v = parse_int(t[1], "colored vertex");
            if (v < 1 || v > n) throw parse_error("colored vertex out of range: " + t[1]);
            g.set_color(v - 1, t[2]);
        } else {
            throw parse_error("unknown directive '" + t[0] + "'");
        }
    }
    return g;
}

IntersectionMatrix parse_matrix(std::istream& in) {
    auto lines = tokenize_lines(in);
    if (lines.empty() || lines[0][0] != "m")
        throw parse_error("matrix file must start with 'm <n>'");
    if (lines[0].size() != 2) throw parse_error("malformed 'm' line");
    const int n = parse_int(lines[0][1], "matrix size");
    if (n < 0) throw parse_error("negative matrix size");
    IntersectionMatrix mu(n);
    size_t row = 0, li = 1;
    for (; li < lines.size() && row < static_cast<size_t>(n); ++li, ++row) {
        if (lines[li].size() != 1 || lines[li][0].size() != static_cast<size_t>(n))
            throw parse_error("matrix row " + std::to_string(row + 1) + " malformed");
        const std::string& r = lines[li][0];
        for (int v = 0; v < n; ++v) {
            if (static_cast<int>(row) == v) {
                if (r[v] != '-') throw parse_error("diagonal must be '-'");
                continue;
            }
            IType t;
            if (!itype_from_char(r[v], t))
                throw parse_error(std::string("bad matrix symbol '") + r[v] + "'");
            mu.set_one_sided(static_cast<int>(row), v, t);
        }
    }
    if (row != static_cast<size_t>(n)) throw parse_error("matrix has too few rows");
    for (; li < lines.size(); ++li) {
        const auto& t = lines[li];
        if (t[0] != "c" || t.size() != 3) throw parse_error("unknown line after matrix rows");
        int v = parse_int(t[1], "colored vertex");
        if (v < 1 || v > n) throw parse_error("colored vertex out of range");
        mu.set_color(v - 1, t[2]);
    }
    if (auto problems = validate(mu); !problems.empty())
        throw parse_error("matrix is not converse-consistent: " + problems.front());
    return mu;
}

std::string matrix_to_text(const IntersectionMatrix& mu) {
    std::string s = "m " + std::to_string(mu.n()) + "\n";
    for (int u = 0; u < mu.n(); ++u) {
        for (int v = 0; v < mu.n(); ++v) s += u == v ? '-' : itype_char(mu.at(u, v));
        s += '\n';
    }
    for (int v = 0; v < mu.n(); ++v)
        if (mu.color(v) != "_") s += "c " + std::to_string(v + 1) + " " + mu.color(v) + "\n";
    return s;
}

namespace {

template <typename T>
T parse_file_as(const std::string& path, T (*fn)(std::istream&)) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open file: " + path);
    return fn(f);
}

} // namespace

ColoredGraph parse_graph_file(const std::string& path) {
    return parse_file_as<ColoredGraph>(path, parse_graph);
}

IntersectionMatrix parse_matrix_file(const std::string& path) {
    return parse_file_as<IntersectionMatrix>(path, parse_matrix);
}

std::variant<ColoredGraph, IntersectionMatrix> parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    std::istringstream peek(text);
    auto lines = tokenize_lines(peek);
    if (lines.empty()) throw parse_error("empty input file: " + path);
    std::istringstream again(text);
    if (lines[0][0] == "m") return parse_matrix(again);
    return parse_graph(again);
}

std::string render_svg(const CircularModel& m) {
    const double cx = 300, cy = 300, r0 = 60;
    const double dr = m.n() > 0 ? 200.0 / std::max(1, m.n()) : 0;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    svg << "  <circle cx=\"300\" cy=\"300\" r=\"280\" fill=\"none\" stroke=\"#ddd\"/>\n";
    const int sz = m.size();
    for (int a = 0; a < m.n(); ++a) {
        const double rad = r0 + a * dr;
        const double t0 = 2 * M_PI * m.position(a, Side::Left) / sz;
        const double t1 = 2 * M_PI * m.position(a, Side::Right) / sz;
        // clockwise from left to right endpoint in screen coordinates
        double sweep = t1 - t0;
        if (sweep <= 0) sweep += 2 * M_PI;
        const double x0 = cx + rad * std::cos(t0), y0 = cy + rad * std::sin(t0);
        const double x1 = cx + rad * std::cos(t1), y1 = cy + rad * std::sin(t1);
        const int large = sweep > M_PI ? 1 : 0;
        svg << "  <path d=\"M " << x0 << ' ' << y0 << " A " << rad << ' ' << rad << " 0 " << large
            << " 1 " << x1 << ' ' << y1 << "\" fill=\"none\" stroke=\"hsl("
            << (a * 360 / std::max(1, m.n())) << ",70%,45%)\" stroke-width=\"4\"/>\n";
        svg << "  <text x=\"" << (cx + (rad + 8) * std::cos(t0)) << "\" y=\""
            << (cy + (rad + 8) * std::sin(t0)) << "\" font-size=\"12\">" << (a + 1)
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace cag
