#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rcx/graph.hpp"

namespace rcx {

enum class PatternKind { Star, Matching, Clique, Path, Cycle, UnionCliques };

/// Symbolic target family for the monochromatic-subgraph detectors:
/// S_m, M_m, K_m, P_m, C_m, or t disjoint copies of K_s. Parameter
/// bounds: m >= 1 for stars/matchings, m >= 2 for cliques/paths,
/// m >= 3 for cycles, t >= 1 and s >= 2 for clique unions.
struct Pattern {
    PatternKind kind = PatternKind::Star;
    int m = 1;       // edge count for S/M, vertex count for K/P/C, clique order for unions
    int copies = 1;  // only meaningful for UnionCliques

    static Pattern star(int m);
    static Pattern matching(int m);
    static Pattern clique(int m);
    static Pattern path(int m);
    static Pattern cycle(int m);
    static Pattern union_cliques(int t, int s);

    int order() const;       // vertex count of the pattern graph
    int edge_count() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Token form used by the CLI and the certificate format:
/// S2, M3, K4, P5, C4, 2K3.
std::string to_string(const Pattern& p);
std::optional<Pattern> parse_pattern(std::string_view token);

/// Concrete graph realization, used by brute-force oracles and witness
/// shape checks.
Graph pattern_graph(const Pattern& p);

}  // namespace rcx
