#include "rcx/detect.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace rcx {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

[[noreturn]] void bad_pattern(const char* what) {
    throw std::invalid_argument(std::string("invalid pattern parameter: ") + what);
}

}  // namespace

// -- Pattern ----------------------------------------------------------

Pattern Pattern::star(int m) {
    if (m < 1) bad_pattern("star needs m >= 1");
    return {PatternKind::Star, m, 1};
}
Pattern Pattern::matching(int m) {
    if (m < 1) bad_pattern("matching needs m >= 1");
    return {PatternKind::Matching, m, 1};
}
Pattern Pattern::clique(int m) {
    if (m < 2) bad_pattern("clique needs m >= 2");
    return {PatternKind::Clique, m, 1};
}
Pattern Pattern::path(int m) {
    if (m < 2) bad_pattern("path needs m >= 2");
    return {PatternKind::Path, m, 1};
}
Pattern Pattern::cycle(int m) {
    if (m < 3) bad_pattern("cycle needs m >= 3");
    return {PatternKind::Cycle, m, 1};
}
Pattern Pattern::union_cliques(int t, int s) {
    if (t < 1 || s < 2) bad_pattern("clique union needs t >= 1, s >= 2");
    return {PatternKind::UnionCliques, s, t};
}

int Pattern::order() const {
    switch (kind) {
        case PatternKind::Star: return m + 1;
        case PatternKind::Matching: return 2 * m;
        case PatternKind::Clique: return m;
        case PatternKind::Path: return m;
        case PatternKind::Cycle: return m;
        case PatternKind::UnionCliques: return copies * m;
    }
    return 0;
}

int Pattern::edge_count() const {
    switch (kind) {
        case PatternKind::Star: return m;
        case PatternKind::Matching: return m;
        case PatternKind::Clique: return m * (m - 1) / 2;
        case PatternKind::Path: return m - 1;
        case PatternKind::Cycle: return m;
        case PatternKind::UnionCliques: return copies * m * (m - 1) / 2;
    }
    return 0;
}

std::string to_string(const Pattern& p) {
    switch (p.kind) {
        case PatternKind::Star: return "S" + std::to_string(p.m);
        case PatternKind::Matching: return "M" + std::to_string(p.m);
        case PatternKind::Clique: return "K" + std::to_string(p.m);
        case PatternKind::Path: return "P" + std::to_string(p.m);
        case PatternKind::Cycle: return "C" + std::to_string(p.m);
        case PatternKind::UnionCliques:
            return std::to_string(p.copies) + "K" + std::to_string(p.m);
    }
    return "?";
}

std::optional<Pattern> parse_pattern(std::string_view token) {
    if (token.empty()) return std::nullopt;
    auto read_int = [](std::string_view s) -> std::optional<int> {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
        return value;
    };
    try {
        if (std::isdigit(static_cast<unsigned char>(token[0]))) {
            // <t>K<s>
            const auto k = token.find('K');
            if (k == std::string_view::npos) return std::nullopt;
            auto t = read_int(token.substr(0, k));
            auto s = read_int(token.substr(k + 1));
            if (!t || !s) return std::nullopt;
            return Pattern::union_cliques(*t, *s);
        }
        auto num = read_int(token.substr(1));
        if (!num) return std::nullopt;
        switch (token[0]) {
            case 'S': return Pattern::star(*num);
            case 'M': return Pattern::matching(*num);
            case 'K': return Pattern::clique(*num);
            case 'P': return Pattern::path(*num);
            case 'C': return Pattern::cycle(*num);
            default: return std::nullopt;
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Graph pattern_graph(const Pattern& p) {
    GraphBuilder b(p.order());
    switch (p.kind) {
        case PatternKind::Star:
            for (int i = 1; i <= p.m; ++i) b.add_edge(0, i);
            break;
        case PatternKind::Matching:
            for (int i = 0; i < p.m; ++i) b.add_edge(2 * i, 2 * i + 1);
            break;
        case PatternKind::Clique:
            for (int u = 0; u < p.m; ++u)
                for (int v = u + 1; v < p.m; ++v) b.add_edge(u, v);
            break;
        case PatternKind::Path:
            for (int i = 0; i + 1 < p.m; ++i) b.add_edge(i, i + 1);
            break;
        case PatternKind::Cycle:
            for (int i = 0; i + 1 < p.m; ++i) b.add_edge(i, i + 1);
            b.add_edge(p.m - 1, 0);
            break;
        case PatternKind::UnionCliques:
            for (int c = 0; c < p.copies; ++c)
                for (int u = 0; u < p.m; ++u)
                    for (int v = u + 1; v < p.m; ++v)
                        b.add_edge(c * p.m + u, c * p.m + v);
            break;
    }
    return b.build();
}

// -- cliques ----------------------------------------------------------

namespace {

bool clique_rec(const Graph& g, std::uint64_t cand, int need, std::vector<int>& out) {
    if (need == 0) return true;
    while (cand != 0) {
        if (std::popcount(cand) < need) return false;
        const int v = lowest(cand);
        cand &= cand - 1;
        out.push_back(v);
        if (clique_rec(g, cand & g.neighbors(v), need - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

// Invokes cb for every `size`-clique inside `cand` that extends `cur`;
// cb returning true stops the enumeration.
bool enum_cliques(const Graph& g, std::uint64_t cand, int need, std::vector<int>& cur,
                  const std::function<bool(const std::vector<int>&)>& cb) {
    if (need == 0) return cb(cur);
    while (cand != 0) {
        if (std::popcount(cand) < need) return false;
        const int v = lowest(cand);
        cand &= cand - 1;
        cur.push_back(v);
        if (enum_cliques(g, cand & g.neighbors(v), need - 1, cur, cb)) {
            cur.pop_back();
            return true;
        }
        cur.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_clique_in(const Graph& g, std::uint64_t allowed, int size) {
    std::vector<int> out;
    if (size <= 0) return out;
    if (clique_rec(g, allowed & g.vertex_mask(), size, out)) return out;
    return std::nullopt;
}

int max_clique(const Graph& g) {
    // Greedy clique as a starting lower bound, then push upward.
    std::uint64_t cand = g.vertex_mask();
    int best = 0;
    std::uint64_t cur = cand;
    while (cur != 0) {
        const int v = lowest(cur);
        ++best;
        cur &= g.neighbors(v);
    }
    while (best < g.order() && find_clique_in(g, g.vertex_mask(), best + 1)) ++best;
    return std::max(best, 1);
}

// -- matchings --------------------------------------------------------

namespace {

bool matching_rec(const Graph& g, std::uint64_t avail, int need, std::vector<EdgeId>& out) {
    if (need == 0) return true;
    // Skip vertices isolated within avail.
    std::uint64_t scan = avail;
    int v = -1;
    std::uint64_t nb = 0;
    while (scan != 0) {
        v = lowest(scan);
        nb = g.neighbors(v) & avail;
        if (nb != 0) break;
        scan &= scan - 1;
        avail &= ~bit(v);
        v = -1;
    }
    if (v < 0) return false;
    if (std::popcount(avail) < 2 * need) return false;
    std::uint64_t rest = avail & ~bit(v);
    std::uint64_t cand = nb;
    while (cand != 0) {
        const int u = lowest(cand);
        cand &= cand - 1;
        out.push_back(make_edge(v, u));
        if (matching_rec(g, rest & ~bit(u), need - 1, out)) return true;
        out.pop_back();
    }
    // v stays uncovered.
    return matching_rec(g, rest, need, out);
}

}  // namespace

std::optional<std::vector<EdgeId>> find_matching_in(const Graph& g, std::uint64_t allowed,
                                                    int size) {
    std::vector<EdgeId> out;
    if (size <= 0) return out;
    if (matching_rec(g, allowed & g.vertex_mask(), size, out)) return out;
    return std::nullopt;
}

int max_matching(const Graph& g) {
    int nu = 0;
    while (2 * (nu + 1) <= g.order() && find_matching_in(g, g.vertex_mask(), nu + 1)) ++nu;
    return nu;
}

// -- paths and cycles -------------------------------------------------

namespace {

using SubsetLayer = std::unordered_map<std::uint64_t, std::uint64_t>;  // subset -> endpoint mask

// Subset DP over covered-vertex bitmasks: layer[k] maps each reachable
// k-subset to the mask of vertices a spanning path of it can end at.
std::optional<std::vector<int>> find_path_seq(const Graph& g, int k) {
    if (k < 2 || k > g.order()) return std::nullopt;
    std::uint64_t active = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) active |= bit(v);
    if (std::popcount(active) < k) return std::nullopt;

    std::vector<SubsetLayer> layer(k + 1);
    std::uint64_t scan = active;
    while (scan != 0) {
        const int v = lowest(scan);
        scan &= scan - 1;
        layer[1][bit(v)] = bit(v);
    }
    for (int size = 1; size < k; ++size) {
        for (const auto& [subset, ends] : layer[size]) {
            std::uint64_t es = ends;
            while (es != 0) {
                const int v = lowest(es);
                es &= es - 1;
                std::uint64_t ext = g.neighbors(v) & active & ~subset;
                while (ext != 0) {
                    const int u = lowest(ext);
                    ext &= ext - 1;
                    layer[size + 1][subset | bit(u)] |= bit(u);
                }
            }
        }
        if (layer[size + 1].empty()) return std::nullopt;
    }
    const auto& final_layer = layer[k];
    auto it = final_layer.begin();
    std::uint64_t subset = it->first;
    int v = lowest(it->second);
    std::vector<int> seq{v};
    for (int size = k; size >= 2; --size) {
        const std::uint64_t prev = subset & ~bit(v);
        const std::uint64_t prev_ends = layer[size - 1].at(prev) & g.neighbors(v);
        const int u = lowest(prev_ends);
        seq.push_back(u);
        subset = prev;
        v = u;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

// Same DP anchored at the subset minimum: paths start at min(subset) and
// extend only upward, closing into a cycle when the end touches the
// anchor.
std::optional<std::vector<int>> find_cycle_seq(const Graph& g, int k) {
    if (k < 3 || k > g.order()) return std::nullopt;
    std::uint64_t active = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 2) active |= bit(v);
    if (std::popcount(active) < k) return std::nullopt;

    std::vector<SubsetLayer> layer(k + 1);
    std::uint64_t scan = active;
    while (scan != 0) {
        const int v = lowest(scan);
        scan &= scan - 1;
        layer[1][bit(v)] = bit(v);
    }
    for (int size = 1; size < k; ++size) {
        for (const auto& [subset, ends] : layer[size]) {
            const int anchor = lowest(subset);
            const std::uint64_t above = ~((bit(anchor) << 1) - 1);  // vertices > anchor
            std::uint64_t es = ends;
            while (es != 0) {
                const int v = lowest(es);
                es &= es - 1;
                std::uint64_t ext = g.neighbors(v) & active & ~subset & above;
                while (ext != 0) {
                    const int u = lowest(ext);
                    ext &= ext - 1;
                    layer[size + 1][subset | bit(u)] |= bit(u);
                }
            }
        }
        if (layer[size + 1].empty()) return std::nullopt;
    }
    for (const auto& [subset, ends] : layer[k]) {
        const int anchor = lowest(subset);
        std::uint64_t closers = ends & g.neighbors(anchor) & ~bit(anchor);
        if (closers == 0) continue;
        int v = lowest(closers);
        std::vector<int> seq{v};
        std::uint64_t sub = subset;
        for (int size = k; size >= 2; --size) {
            const std::uint64_t prev = sub & ~bit(v);
            const std::uint64_t prev_ends = layer[size - 1].at(prev) & g.neighbors(v);
            const int u = lowest(prev_ends);
            seq.push_back(u);
            sub = prev;
            v = u;
        }
        std::reverse(seq.begin(), seq.end());
        return seq;  // starts at the anchor
    }
    return std::nullopt;
}

// -- disjoint clique packing ------------------------------------------

bool pack_rec(const Graph& g, std::uint64_t avail, int copies, int size,
              std::vector<std::vector<int>>& out) {
    if (copies == 0) return true;
    if (std::popcount(avail) < copies * size) return false;
    std::uint64_t scan = avail;
    while (scan != 0) {
        const int v = lowest(scan);
        scan &= scan - 1;
        // Either v joins the next clique or it sits out entirely.
        std::vector<int> cur{v};
        bool found = enum_cliques(
            g, g.neighbors(v) & avail & ~bit(v), size - 1, cur,
            [&](const std::vector<int>& clique) {
                std::uint64_t used = 0;
                for (int w : clique) used |= bit(w);
                out.push_back(clique);
                if (pack_rec(g, avail & ~used, copies - 1, size, out)) return true;
                out.pop_back();
                return false;
            });
        if (found) return true;
        avail &= ~bit(v);
        if (std::popcount(avail) < copies * size) return false;
    }
    return false;
}

std::optional<std::vector<std::vector<int>>> find_clique_packing(const Graph& g, int copies,
                                                                 int size) {
    std::vector<std::vector<int>> out;
    if (pack_rec(g, g.vertex_mask(), copies, size, out)) return out;
    return std::nullopt;
}

std::vector<EdgeId> consecutive_edges(const std::vector<int>& seq, bool close) {
    std::vector<EdgeId> out;
    for (size_t i = 0; i + 1 < seq.size(); ++i) out.push_back(make_edge(seq[i], seq[i + 1]));
    if (close && seq.size() >= 3) out.push_back(make_edge(seq.back(), seq.front()));
    return out;
}

std::vector<EdgeId> clique_edges(const std::vector<int>& vs) {
    std::vector<EdgeId> out;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) out.push_back(make_edge(vs[i], vs[j]));
    return out;
}

}  // namespace

// -- contains ---------------------------------------------------------

std::optional<WitnessSubgraph> contains(const Graph& g, const Pattern& p) {
    if (p.order() > g.order()) return std::nullopt;
    WitnessSubgraph w;
    w.pattern = p;
    switch (p.kind) {
        case PatternKind::Star: {
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) < p.m) continue;
                w.vertices.push_back(v);
                std::uint64_t nb = g.neighbors(v);
                for (int i = 0; i < p.m; ++i) {
                    const int leaf = lowest(nb);
                    nb &= nb - 1;
                    w.vertices.push_back(leaf);
                    w.edges.push_back(make_edge(v, leaf));
                }
                return w;
            }
            return std::nullopt;
        }
        case PatternKind::Matching: {
            auto edges = find_matching_in(g, g.vertex_mask(), p.m);
            if (!edges) return std::nullopt;
            w.edges = *edges;
            for (const auto& e : w.edges) {
                w.vertices.push_back(e.u);
                w.vertices.push_back(e.v);
            }
            return w;
        }
        case PatternKind::Clique: {
            auto vs = find_clique_in(g, g.vertex_mask(), p.m);
            if (!vs) return std::nullopt;
            w.vertices = *vs;
            w.edges = clique_edges(w.vertices);
            return w;
        }
        case PatternKind::Path: {
            auto seq = find_path_seq(g, p.m);
            if (!seq) return std::nullopt;
            w.vertices = *seq;
            w.edges = consecutive_edges(w.vertices, false);
            return w;
        }
        case PatternKind::Cycle: {
            auto seq = find_cycle_seq(g, p.m);
            if (!seq) return std::nullopt;
            w.vertices = *seq;
            w.edges = consecutive_edges(w.vertices, true);
            return w;
        }
        case PatternKind::UnionCliques: {
            auto packing = find_clique_packing(g, p.copies, p.m);
            if (!packing) return std::nullopt;
            for (const auto& clique : *packing) {
                w.vertices.insert(w.vertices.end(), clique.begin(), clique.end());
                auto ce = clique_edges(clique);
                w.edges.insert(w.edges.end(), ce.begin(), ce.end());
            }
            return w;
        }
    }
    return std::nullopt;
}

// -- incremental hints ------------------------------------------------

namespace {

int greedy_matching_size(const Graph& g) {
    std::uint64_t used = 0;
    int count = 0;
    for (int u = 0; u < g.order(); ++u) {
        if (used & bit(u)) continue;
        std::uint64_t nb = g.neighbors(u) & ~used;
        if (nb == 0) continue;
        used |= bit(u) | bit(lowest(nb));
        ++count;
    }
    return count;
}

int greedy_clique_through(const Graph& g, int u, int v) {
    std::uint64_t cand = g.neighbors(u) & g.neighbors(v);
    int count = 2;
    while (cand != 0) {
        const int w = lowest(cand);
        cand &= cand - 1;
        cand &= g.neighbors(w);
        ++count;
    }
    return count;
}

// Greedy two-ended extension of the path u-v by lowest unused neighbors.
int greedy_path_through(const Graph& g, int u, int v) {
    std::uint64_t used = bit(u) | bit(v);
    int len = 2;
    int left = u, right = v;
    for (;;) {
        std::uint64_t ext = g.neighbors(left) & ~used;
        if (ext != 0) {
            left = lowest(ext);
            used |= bit(left);
            ++len;
            continue;
        }
        ext = g.neighbors(right) & ~used;
        if (ext != 0) {
            right = lowest(ext);
            used |= bit(right);
            ++len;
            continue;
        }
        break;
    }
    return len;
}

}  // namespace

bool incremental_hint(const Pattern& p, const Graph& g, EdgeId new_edge) {
    const int u = new_edge.u, v = new_edge.v;
    switch (p.kind) {
        case PatternKind::Star:
            return g.degree(u) >= p.m || g.degree(v) >= p.m;
        case PatternKind::Matching:
            return greedy_matching_size(g) >= p.m;
        case PatternKind::Clique:
            return greedy_clique_through(g, u, v) >= p.m;
        case PatternKind::Path:
            return greedy_path_through(g, u, v) >= p.m;
        case PatternKind::Cycle:
            if (p.m == 3) return (g.neighbors(u) & g.neighbors(v)) != 0;
            return false;  // defer to the full detector
        case PatternKind::UnionCliques: {
            if (greedy_clique_through(g, u, v) < p.m) return false;
            // Greedy disjoint cliques over the rest.
            std::uint64_t avail = g.vertex_mask();
            int packed = 0;
            while (avail != 0 && packed < p.copies) {
                const int a = lowest(avail);
                std::uint64_t cand = g.neighbors(a) & avail & ~bit(a);
                std::uint64_t taken = bit(a);
                int sz = 1;
                while (cand != 0 && sz < p.m) {
                    const int w = lowest(cand);
                    taken |= bit(w);
                    cand &= g.neighbors(w);
                    ++sz;
                }
                avail &= ~(sz == p.m ? taken : bit(a));
                if (sz == p.m) ++packed;
            }
            return packed >= p.copies;
        }
    }
    return false;
}

bool contains_through_edge(const Graph& g, const Pattern& p, EdgeId new_edge) {
    const int u = new_edge.u, v = new_edge.v;
    switch (p.kind) {
        case PatternKind::Star:
            return g.degree(u) >= p.m || g.degree(v) >= p.m;
        case PatternKind::Matching:
            return find_matching_in(g, g.vertex_mask() & ~(bit(u) | bit(v)), p.m - 1).has_value();
        case PatternKind::Clique:
            return find_clique_in(g, g.neighbors(u) & g.neighbors(v), p.m - 2).has_value();
        case PatternKind::UnionCliques: {
            // The new edge sits inside one packed clique; try each such
            // clique and pack the remaining copies around it.
            std::vector<int> cur{u, v};
            bool found = enum_cliques(
                g, g.neighbors(u) & g.neighbors(v), p.m - 2, cur,
                [&](const std::vector<int>& clique) {
                    std::uint64_t used = 0;
                    for (int w : clique) used |= bit(w);
                    std::vector<std::vector<int>> rest;
                    return pack_rec(g, g.vertex_mask() & ~used, p.copies - 1, p.m, rest);
                });
            return found;
        }
        case PatternKind::Path:
        case PatternKind::Cycle:
            return contains(g, p).has_value();
    }
    return false;
}

// -- witness verification ----------------------------------------------

bool verify_witness(const Graph& g, const WitnessSubgraph& w) {
    for (const auto& e : w.edges) {
        if (e.u >= e.v || e.v >= g.order() || e.u < 0) return false;
        if (!g.has_edge(e.u, e.v)) return false;
    }
    const Pattern& p = w.pattern;
    if (static_cast<int>(w.vertices.size()) != p.order()) return false;
    std::uint64_t seen = 0;
    for (int v : w.vertices) {
        if (v < 0 || v >= g.order()) return false;
        if (seen & bit(v)) return false;  // vertices must be distinct
        seen |= bit(v);
    }
    std::vector<EdgeId> expected;
    switch (p.kind) {
        case PatternKind::Star:
            for (int i = 1; i <= p.m; ++i) expected.push_back(make_edge(w.vertices[0], w.vertices[i]));
            break;
        case PatternKind::Matching:
            for (int i = 0; i < p.m; ++i)
                expected.push_back(make_edge(w.vertices[2 * i], w.vertices[2 * i + 1]));
            break;
        case PatternKind::Clique:
            expected = clique_edges(w.vertices);
            break;
        case PatternKind::Path:
            expected = consecutive_edges(w.vertices, false);
            break;
        case PatternKind::Cycle:
            expected = consecutive_edges(w.vertices, true);
            break;
        case PatternKind::UnionCliques:
            for (int c = 0; c < p.copies; ++c) {
                std::vector<int> block(w.vertices.begin() + c * p.m,
                                       w.vertices.begin() + (c + 1) * p.m);
                auto ce = clique_edges(block);
                expected.insert(expected.end(), ce.begin(), ce.end());
            }
            break;
    }
    auto got = w.edges;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    return expected == got;
}

}  // namespace rcx
