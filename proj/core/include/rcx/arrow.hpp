#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rcx/detect.hpp"
#include "rcx/graph.hpp"
#include "rcx/pattern.hpp"

namespace rcx {

/// A red/blue partition of the host's edge set. The central witness
/// object: a free coloring is a TwoColoring with no red F and no blue H.
struct TwoColoring {
    Graph host;
    std::vector<EdgeId> red;   // lexicographic
    std::vector<EdgeId> blue;  // lexicographic

    TwoColoring(Graph host, std::vector<EdgeId> red, std::vector<EdgeId> blue);

    Graph red_graph() const;
    Graph blue_graph() const;

    friend bool operator==(const TwoColoring&, const TwoColoring&) = default;
};

enum class Verdict { Arrows, NotArrows };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    double seconds = 0.0;
};

/// Host descriptions whose automorphisms are known analytically. The
/// search uses them for root-level orbit symmetry breaking without any
/// general canonical-labeling machinery.
struct HostShape {
    enum class Kind { Complete, MinusStar, MinusMatching, MinusPath, MinusClique, BookJoin };
    Kind kind = Kind::Complete;
    int r = 1;  // order of the complete part
    int k = 0;  // deletion index, or pendant degree for BookJoin

    friend bool operator==(const HostShape&, const HostShape&) = default;
};

Graph make_host(const HostShape& shape);

/// Generators of a vertex-permutation group known to fix the host (a
/// subgroup of the full automorphism group; enough for sound orbit
/// merging).
std::vector<std::vector<int>> shape_automorphism_generators(const HostShape& shape);

/// Orbits of the edge set under the group generated by `generators`,
/// sorted by least edge. Throws if a generator fails to fix g.
std::vector<std::vector<EdgeId>> edge_orbits(const Graph& g,
                                             const std::vector<std::vector<int>>& generators);

struct SearchOptions {
    int threads = 1;
    double timeout_seconds = 0.0;      // 0 = no deadline
    bool deterministic = true;         // sequential lex order; canonical witness
    bool use_hints = true;             // one-sided cheap presence tests
    bool deferred_full_checks = true;  // path/cycle detectors run every 4th edge of a color
    bool color_swap_symmetry = true;   // fix the first edge red when f == h
    bool orbit_symmetry = true;        // root orbit split (needs shape; off when deterministic)
    int edge_cap = 30;
    std::optional<HostShape> shape;
};

/// Raised when the deadline passes. An explicit third outcome: the
/// engine never degrades a timeout into a verdict.
class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ArrowResult {
    Verdict verdict = Verdict::Arrows;
    std::optional<TwoColoring> witness;  // present iff NotArrows
    SearchStats stats;
    bool canonical_witness = false;  // lexicographically least free coloring
};

/// Decides host -> (f, h) by exhaustive pruned backtracking over red/blue
/// edge colorings. Arrows means the search exhausted with no free
/// coloring; NotArrows carries a concrete free coloring, re-verified by
/// the detectors before it is returned.
ArrowResult arrows(const Graph& host, const Pattern& f, const Pattern& h,
                   const SearchOptions& opts = {});

/// Existence form: the first free coloring found, or absence after an
/// exhaustive search.
std::optional<TwoColoring> find_free_coloring(const Graph& host, const Pattern& f,
                                              const Pattern& h, const SearchOptions& opts = {});

struct FreeCheckResult {
    bool free = false;
    bool violation_in_red = false;
    std::optional<WitnessSubgraph> violation;
};

/// True iff the coloring has no red f and no blue h; otherwise reports
/// one violating occurrence.
FreeCheckResult verify_free(const TwoColoring& c, const Pattern& f, const Pattern& h);

}  // namespace rcx
