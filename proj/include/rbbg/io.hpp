#ifndef RBBG_IO_HPP
#define RBBG_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rbbg/graph.hpp"

namespace rbbg::io {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Edge-list text: a header "n m", then m lines "u v" with 0 <= u < v < n.
/// Blank lines and lines starting with '#' are skipped. Duplicate edges and
/// self-loops are errors.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_string(const std::string& text);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

}  // namespace rbbg::io

#endif  // RBBG_IO_HPP
