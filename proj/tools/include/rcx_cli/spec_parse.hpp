#pragma once

#include <stdexcept>
#include <string>

#include "rcx/arrow.hpp"
#include "rcx/graph.hpp"
#include "rcx/pattern.hpp"

namespace rcx::cli {

/// Parse failure with the 1-based column where it happened.
class SpecParseError : public std::runtime_error {
public:
    SpecParseError(const std::string& what, int column)
        : std::runtime_error(what + " (column " + std::to_string(column) + ")"),
          column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

/// Result of parsing the host mini-language:
///   K<r> | K<r>-S<n> | K<r>-M<n> | K<r>-P<n> | K<r>-K<n> | K<r>+S<k>
///   | circ(<k>;<d1>,<d2>,...) | file:<path>
/// The shape is filled for the forms whose automorphisms the search
/// knows; `canonical` reprints the expression so that parse(print(x))
/// gives an isomorphic graph.
struct ParsedGraphSpec {
    Graph graph;
    std::optional<HostShape> shape;
    std::string canonical;
};

ParsedGraphSpec parse_graph_spec(const std::string& text);

/// S<m> | M<m> | K<m> | P<m> | C<m> | <t>K<s>
Pattern parse_pattern_spec(const std::string& text);

}  // namespace rcx::cli
