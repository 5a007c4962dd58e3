#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "chromascope/graph.hpp"

namespace chromascope {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Edge-list text: "n m" then m lines "u v", 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// DIMACS .col: "c" comments, one "p edge n m" line, "e u v" lines (1-indexed).
Graph read_dimacs(std::istream& in);

/// Reads either format; DIMACS is recognized by a leading "c" or "p" line.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace chromascope
