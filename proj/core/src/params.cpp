#include "rcx/params.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rcx/detect.hpp"

namespace rcx {

namespace {

void check_limit(const Graph& f) {
    if (f.order() > kParamVertexLimit)
        throw std::invalid_argument("parameter computations are limited to " +
                                    std::to_string(kParamVertexLimit) + " vertices");
}

// Proper k-colorability by canonical backtracking: vertex 0 takes color
// 0 and color c+1 is introduced only once color c is in use, so each
// partition is visited exactly once.
bool colorable(const Graph& g, int k, std::vector<int>& color, int v, int used) {
    if (v == g.order()) return true;
    const int limit = std::min(k - 1, used);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (color[u] == c && g.has_edge(u, v)) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, k, color, v + 1, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
}

// Enumerates every proper coloring with exactly k classes, canonically.
// The callback returns true to stop early.
bool enumerate_colorings(const Graph& g, int k, std::vector<int>& color, int v, int used,
                         const std::function<bool(const std::vector<int>&)>& cb) {
    if (v == g.order()) {
        if (used != k) return false;
        return cb(color);
    }
    const int limit = std::min(k - 1, used);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (color[u] == c && g.has_edge(u, v)) ok = false;
        if (!ok) continue;
        // Not enough vertices left to open all k classes: prune.
        const int will_use = std::max(used, c + 1);
        if (will_use + (g.order() - v - 1) < k) continue;
        color[v] = c;
        if (enumerate_colorings(g, k, color, v + 1, will_use, cb)) return true;
    }
    color[v] = -1;
    return false;
}

std::vector<int> class_sizes(const std::vector<int>& color, int k) {
    std::vector<int> sizes(k, 0);
    for (int c : color) ++sizes[c];
    return sizes;
}

}  // namespace

std::vector<int> ColoringClassProfile::sorted_sizes() const {
    std::vector<int> sizes;
    for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

int chromatic_number(const Graph& f) {
    check_limit(f);
    if (f.size() == 0) return 1;
    int lower = max_clique(f);
    // Greedy upper bound.
    std::vector<int> greedy(f.order(), -1);
    int upper = 0;
    for (int v = 0; v < f.order(); ++v) {
        std::uint64_t used = 0;
        for (int u = 0; u < v; ++u)
            if (f.has_edge(u, v)) used |= std::uint64_t{1} << greedy[u];
        int c = 0;
        while (used & (std::uint64_t{1} << c)) ++c;
        greedy[v] = c;
        upper = std::max(upper, c + 1);
    }
    for (int k = lower; k < upper; ++k) {
        std::vector<int> color(f.order(), -1);
        if (colorable(f, k, color, 0, 0)) return k;
    }
    return upper;
}

int chromatic_surplus(const Graph& f) {
    const int chi = chromatic_number(f);
    int best = f.order();
    std::vector<int> color(f.order(), -1);
    enumerate_colorings(f, chi, color, 0, 0, [&](const std::vector<int>& c) {
        const auto sizes = class_sizes(c, chi);
        best = std::min(best, *std::min_element(sizes.begin(), sizes.end()));
        return best == 1;  // cannot improve below 1
    });
    return best;
}

ColoringClassProfile surplus_profile(const Graph& f) {
    const int chi = chromatic_number(f);
    const int s = chromatic_surplus(f);
    ColoringClassProfile out;
    std::vector<int> color(f.order(), -1);
    enumerate_colorings(f, chi, color, 0, 0, [&](const std::vector<int>& c) {
        const auto sizes = class_sizes(c, chi);
        if (*std::min_element(sizes.begin(), sizes.end()) != s) return false;
        out.classes.assign(chi, {});
        for (int v = 0; v < f.order(); ++v) out.classes[c[v]].push_back(v);
        std::sort(out.classes.begin(), out.classes.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        return true;
    });
    return out;
}

int min_cross_class_degree(const Graph& f) {
    check_limit(f);
    const int chi = chromatic_number(f);
    if (chi < 2) throw std::invalid_argument("cross-class degree needs a graph with an edge");
    const int s = chromatic_surplus(f);
    int best = f.order();
    std::vector<int> color(f.order(), -1);
    enumerate_colorings(f, chi, color, 0, 0, [&](const std::vector<int>& c) {
        const auto sizes = class_sizes(c, chi);
        for (int u1 = 0; u1 < chi; ++u1) {
            if (sizes[u1] != s) continue;
            for (int v = 0; v < f.order(); ++v) {
                if (c[v] != u1) continue;
                for (int other = 0; other < chi; ++other) {
                    if (other == u1) continue;
                    int deg = 0;
                    for (int u = 0; u < f.order(); ++u)
                        if (c[u] == other && f.has_edge(u, v)) ++deg;
                    best = std::min(best, deg);
                }
            }
        }
        return best == 0;  // floor; cannot go lower
    });
    return best;
}

const char* cross_class_degree_note() {
    return "triple minimum over (coloring with |U1|=s, vertex in U1, other class)";
}

bool is_ramsey_good(const Graph& f, const Graph& h, int r) {
    if (!h.is_connected()) throw std::invalid_argument("goodness requires a connected second graph");
    if (h.order() < chromatic_surplus(f))
        throw std::invalid_argument("goodness requires v(h) >= chromatic surplus of f");
    return r == (chromatic_number(f) - 1) * (h.order() - 1) + chromatic_surplus(f);
}

int star_critical_upper_bound(const Graph& f, const Graph& h) {
    if (chromatic_number(f) < 2) throw std::invalid_argument("bound requires chi(f) >= 2");
    if (!h.is_connected()) throw std::invalid_argument("bound requires a connected second graph");
    const int s = chromatic_surplus(f);
    const int tau = min_cross_class_degree(f);
    return std::max(s - 2, h.order() + s - h.min_degree() - tau - 1);
}

}  // namespace rcx
