#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rcx/params.hpp"
#include "rcx/pattern.hpp"

using namespace rcx;

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(complete(4)) == 4);
    CHECK(chromatic_number(pattern_graph(Pattern::cycle(5))) == 3);
    CHECK(chromatic_number(pattern_graph(Pattern::path(4))) == 2);
    CHECK(chromatic_number(complete(1)) == 1);
    CHECK_THROWS_AS(chromatic_number(complete(13)), std::invalid_argument);
}

TEST_CASE("chromatic surplus") {
    CHECK(chromatic_surplus(complete(3)) == 1);
    CHECK(chromatic_surplus(pattern_graph(Pattern::cycle(4))) == 2);
    CHECK(chromatic_surplus(pattern_graph(Pattern::star(3))) == 1);
    // The connected bipartition of a path is forced, so both classes of
    // P4 have two vertices; the oracle agrees.
    const Graph p4 = pattern_graph(Pattern::path(4));
    CHECK(oracle::naive_surplus(p4) == 2);
    CHECK(chromatic_surplus(p4) == 2);
}

TEST_CASE("surplus profile is a proper partition") {
    for (const Graph& g : {complete(4), pattern_graph(Pattern::cycle(5)),
                           pattern_graph(Pattern::path(4)), circulant(6, {1, 3})}) {
        const auto profile = surplus_profile(g);
        std::vector<bool> seen(g.order(), false);
        for (const auto& cls : profile.classes) {
            for (size_t i = 0; i < cls.size(); ++i) {
                CHECK_FALSE(seen[cls[i]]);
                seen[cls[i]] = true;
                for (size_t j = i + 1; j < cls.size(); ++j)
                    CHECK_FALSE(g.has_edge(cls[i], cls[j]));
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
        CHECK(static_cast<int>(profile.classes.front().size()) == chromatic_surplus(g));
        const auto sizes = profile.sorted_sizes();
        CHECK(std::is_sorted(sizes.begin(), sizes.end()));
    }
}

TEST_CASE("cross-class degree") {
    for (int m = 2; m <= 5; ++m) CHECK(min_cross_class_degree(complete(m)) == 1);
    CHECK(min_cross_class_degree(pattern_graph(Pattern::cycle(4))) == 2);
    CHECK(min_cross_class_degree(pattern_graph(Pattern::path(4))) == 1);
    CHECK_THROWS_AS(min_cross_class_degree(complete(1)), std::invalid_argument);
}

TEST_CASE("goodness formula") {
    CHECK(is_ramsey_good(complete(3), pattern_graph(Pattern::path(4)), 7));
    // chi(S2)=2, v(S2)=3, s(S2)=1: the formula value is 3 and equals the
    // star-star Ramsey number, so the pair is good.
    CHECK(is_ramsey_good(pattern_graph(Pattern::star(2)), pattern_graph(Pattern::star(2)), 3));
    CHECK_FALSE(is_ramsey_good(pattern_graph(Pattern::star(2)), pattern_graph(Pattern::star(2)), 4));
    CHECK_FALSE(is_ramsey_good(complete(3), pattern_graph(Pattern::path(4)), 6));
    CHECK(is_ramsey_good(complete(2), complete(2), 2));
    CHECK_THROWS_AS(is_ramsey_good(complete(3), pattern_graph(Pattern::matching(2)), 5),
                    std::invalid_argument);  // disconnected second graph
}

TEST_CASE("star-critical upper bound values") {
    CHECK(star_critical_upper_bound(complete(3), pattern_graph(Pattern::path(4))) == 2);
    CHECK(star_critical_upper_bound(complete(3), pattern_graph(Pattern::path(5))) == 3);
    CHECK(star_critical_upper_bound(complete(2), complete(2)) == 0);
}

TEST_CASE("chromatic data matches the brute-force oracle") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 7;  // up to 8 vertices
        const Graph g = oracle::random_graph(rng, n, 0.45);
        const int chi = chromatic_number(g);
        CHECK(chi == oracle::naive_chromatic(g));
        const int s = chromatic_surplus(g);
        CHECK(s == oracle::naive_surplus(g));
        CHECK(s >= 1);
        CHECK(s <= g.order() / chi);
        if (chi >= 2) CHECK(min_cross_class_degree(g) == oracle::naive_cross_class_degree(g));
    }
}

TEST_CASE("parameters are invariant under relabeling") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 6;
        const Graph g = oracle::random_graph(rng, n, 0.5);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = apply_permutation(g, perm);
        CHECK(chromatic_number(g) == chromatic_number(h));
        CHECK(chromatic_surplus(g) == chromatic_surplus(h));
        if (chromatic_number(g) >= 2)
            CHECK(min_cross_class_degree(g) == min_cross_class_degree(h));
    }
}
