#include "rbbg/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace rbbg::io {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::size_t to_count(std::string_view field, std::size_t line) {
    std::size_t value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') continue;
        if (fields.size() != 2) {
            throw ParseError(line_no, "expected two fields, got " + std::to_string(fields.size()));
        }
        const auto a = to_count(fields[0], line_no);
        const auto b = to_count(fields[1], line_no);
        if (!have_header) {
            n = a;
            m = b;
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (seen == m) throw ParseError(line_no, "more edge lines than the header's m = " +
                                                     std::to_string(m));
        if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        if (a > b) throw ParseError(line_no, "edge endpoints must be listed as u < v");
        if (b >= n) throw ParseError(line_no, "vertex " + std::to_string(b) + " is not below n = " +
                                                  std::to_string(n));
        if (g.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        }
        g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
        ++seen;
    }
    if (!have_header) throw ParseError(line_no, "missing header line 'n m'");
    if (seen != m) {
        throw ParseError(line_no, "header promises " + std::to_string(m) + " edges, found " +
                                      std::to_string(seen));
    }
    return g;
}

Graph parse_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace rbbg::io
