#pragma once

#include <random>

#include "rcx/arrow.hpp"
#include "rcx/pattern.hpp"

// Brute-force reference implementations, deliberately independent of
// the library's detectors and search: embedding by exhaustive injective
// maps, arrowing by enumerating all 2^e colorings, chromatic data by
// enumerating raw color assignments.
namespace rcx::oracle {

bool naive_embeds(const Graph& pattern, const Graph& host);
bool naive_contains(const Graph& g, const Pattern& p);
bool naive_arrows(const Graph& host, const Pattern& f, const Pattern& h);

int naive_chromatic(const Graph& g);
int naive_surplus(const Graph& g);
int naive_cross_class_degree(const Graph& g);

Graph random_graph(std::mt19937& rng, int n, double edge_probability);

}  // namespace rcx::oracle
