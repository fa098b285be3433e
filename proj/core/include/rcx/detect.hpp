#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rcx/graph.hpp"
#include "rcx/pattern.hpp"

namespace rcx {

/// One concrete occurrence of a pattern as a subgraph: the vertices in
/// detector-specific order and the pattern's edges within the host.
struct WitnessSubgraph {
    Pattern pattern;
    std::vector<int> vertices;
    std::vector<EdgeId> edges;
};

/// Exact decision "does g contain p as a subgraph", with one occurrence
/// returned when found. Stars go by max degree, matchings by exhaustive
/// maximum-matching search, cliques by bitset branch and bound, paths
/// and cycles by subset DP over vertex bitmasks, clique unions by
/// recursive packing.
std::optional<WitnessSubgraph> contains(const Graph& g, const Pattern& p);

/// Size of a maximum matching, by branching on the edges at the lowest
/// uncovered vertex. Exact; meant for the <= 16 vertex regime.
int max_matching(const Graph& g);

/// Clique number.
int max_clique(const Graph& g);

/// One-sided cheap test after new_edge was added to g: true means p is
/// certainly present, false means "not decided here". Never wrong when
/// it answers true, so it can only save detector calls, never flip a
/// verdict.
bool incremental_hint(const Pattern& p, const Graph& g, EdgeId new_edge);

/// Exact test for an occurrence of p that uses new_edge. When g minus
/// new_edge was p-free, this decides containment in g outright. Defined
/// for Star, Matching, Clique and UnionCliques; paths and cycles go
/// through the full detector instead.
bool contains_through_edge(const Graph& g, const Pattern& p, EdgeId new_edge);

/// Independent re-check of a witness: all listed edges exist in g and
/// form the claimed pattern shape on the listed vertices.
bool verify_witness(const Graph& g, const WitnessSubgraph& w);

// Restricted-domain helpers shared with the search engine. `allowed`
// masks the usable vertices.
std::optional<std::vector<int>> find_clique_in(const Graph& g, std::uint64_t allowed, int size);
std::optional<std::vector<EdgeId>> find_matching_in(const Graph& g, std::uint64_t allowed, int size);

}  // namespace rcx
