#pragma once

#include <vector>

#include "rcx/graph.hpp"

namespace rcx {

/// A proper vertex coloring as explicit classes. Classes partition the
/// vertex set and contain no edge; sizes are reported ascending.
struct ColoringClassProfile {
    std::vector<std::vector<int>> classes;
    std::vector<int> sorted_sizes() const;
};

inline constexpr int kParamVertexLimit = 12;

/// Exact chromatic number by backtracking between a clique lower bound
/// and a greedy upper bound. Limited to kParamVertexLimit vertices.
int chromatic_number(const Graph& f);

/// Chromatic surplus s(F): the minimum, over all proper colorings with
/// chromatic_number(f) classes, of the smallest class size.
int chromatic_surplus(const Graph& f);

/// One coloring attaining the surplus.
ColoringClassProfile surplus_profile(const Graph& f);

/// Minimum cross-class degree: over all proper chromatic colorings
/// whose designated class U1 has exactly chromatic_surplus(f) vertices,
/// over all v in U1 and every other class U_i, the least |N(v) & U_i|.
/// The one-line textbook definition leaves the quantifier order open;
/// this triple minimum is the reading used throughout, recorded by
/// cross_class_degree_note().
int min_cross_class_degree(const Graph& f);

const char* cross_class_degree_note();

/// Ramsey goodness: r equals (chi(f)-1)(v(h)-1) + s(f). Requires h
/// connected and v(h) >= s(f); r must be the verified Ramsey number.
bool is_ramsey_good(const Graph& f, const Graph& h, int r);

/// Upper bound for the star-critical number of a good pair:
/// max(s(f)-2, v(h)+s(f)-delta(h)-tau(f)-1) where tau is
/// min_cross_class_degree. Requires chi(f) >= 2 and h connected.
int star_critical_upper_bound(const Graph& f, const Graph& h);

}  // namespace rcx
