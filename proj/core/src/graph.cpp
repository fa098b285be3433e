#include "rcx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rcx {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                                    ", got " + std::to_string(n));
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
}

Graph::Graph(int n, const std::vector<EdgeId>& edges) : n_(n) {
    check_order(n);
    GraphBuilder b(n);
    for (const auto& e : edges) b.add_edge(e.u, e.v);
    *this = b.build();
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    return u != v && (adj_[u] & bit(v)) != 0;
}

std::uint64_t Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return adj_[v];
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_connected() const {
    std::uint64_t seen = bit(0);
    std::uint64_t frontier = bit(0);
    while (frontier != 0) {
        std::uint64_t next = 0;
        while (frontier != 0) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[v] & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == vertex_mask();
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t upper = adj_[u] >> (u + 1) << (u + 1);
        while (upper != 0) {
            int v = std::countr_zero(upper);
            upper &= upper - 1;
            out.push_back({u, v});
        }
    }
    return out;
}

bool Graph::valid() const {
    if (n_ < 1 || n_ > kMaxVertices) return false;
    for (int v = 0; v < kMaxVertices; ++v) {
        if (v >= n_ && adj_[v] != 0) return false;
    }
    const std::uint64_t mask = vertex_mask();
    for (int u = 0; u < n_; ++u) {
        if ((adj_[u] & ~mask) != 0) return false;
        if ((adj_[u] & bit(u)) != 0) return false;  // self loop
        for (int v = 0; v < n_; ++v) {
            bool uv = (adj_[u] & bit(v)) != 0;
            bool vu = (adj_[v] & bit(u)) != 0;
            if (uv != vu) return false;
        }
    }
    return true;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self loop");
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw std::out_of_range("edge endpoint out of range");
    g_.adj_[u] |= bit(v);
    g_.adj_[v] |= bit(u);
}

void GraphBuilder::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw std::out_of_range("edge endpoint out of range");
    g_.adj_[u] &= ~bit(v);
    g_.adj_[v] &= ~bit(u);
}

bool GraphBuilder::has_edge(int u, int v) const { return g_.has_edge(u, v); }

Graph GraphBuilder::build() const { return g_; }

std::string to_string(DeletionClass cls) {
    switch (cls) {
        case DeletionClass::Star: return "star";
        case DeletionClass::Matching: return "matching";
        case DeletionClass::Path: return "path";
        case DeletionClass::Complete: return "complete";
    }
    return "?";
}

int class_member_order(ClassSpec cls, int idx) {
    switch (cls.kind) {
        case DeletionClass::Star: return idx + 1;
        case DeletionClass::Matching: return 2 * idx;
        case DeletionClass::Path: return idx;
        case DeletionClass::Complete: return idx;
    }
    return 0;
}

int class_member_edge_count(ClassSpec cls, int idx) {
    switch (cls.kind) {
        case DeletionClass::Star: return idx;
        case DeletionClass::Matching: return idx;
        case DeletionClass::Path: return idx - 1;
        case DeletionClass::Complete: return idx * (idx - 1) / 2;
    }
    return 0;
}

Graph complete(int r) {
    check_order(r);
    GraphBuilder b(r);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) b.add_edge(u, v);
    return b.build();
}

Graph delete_class_member(const Graph& host, ClassSpec cls, int idx) {
    const int r = host.order();
    if (host != complete(r)) throw std::invalid_argument("host must be a complete graph");
    if (idx < cls.min_index())
        throw std::invalid_argument(to_string(cls.kind) + " class index below minimum " +
                                    std::to_string(cls.min_index()));
    if (class_member_order(cls, idx) > r)
        throw std::invalid_argument(to_string(cls.kind) + "[" + std::to_string(idx) +
                                    "] does not embed in K_" + std::to_string(r));
    GraphBuilder b(r);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) b.add_edge(u, v);
    switch (cls.kind) {
        case DeletionClass::Star:
            for (int leaf = 1; leaf <= idx; ++leaf) b.remove_edge(0, leaf);
            break;
        case DeletionClass::Matching:
            for (int i = 0; i < idx; ++i) b.remove_edge(2 * i, 2 * i + 1);
            break;
        case DeletionClass::Path:
            for (int i = 0; i + 1 < idx; ++i) b.remove_edge(i, i + 1);
            break;
        case DeletionClass::Complete:
            for (int u = 0; u < idx; ++u)
                for (int v = u + 1; v < idx; ++v) b.remove_edge(u, v);
            break;
    }
    return b.build();
}

Graph book_join(int r, int k) {
    check_order(r + 1);
    if (k < 0 || k > r) throw std::invalid_argument("pendant degree must be in 0..r");
    GraphBuilder b(r + 1);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) b.add_edge(u, v);
    for (int v = 0; v < k; ++v) b.add_edge(r, v);
    return b.build();
}

Graph circulant(int k, const std::vector<int>& diffs) {
    check_order(k);
    GraphBuilder b(k);
    for (int d : diffs) {
        if (d <= 0 || d >= k)
            throw std::invalid_argument("circulant difference must be in 1..k-1, got " +
                                        std::to_string(d));
        for (int x = 0; x < k; ++x) {
            int y = (x + d) % k;
            if (x != y) b.add_edge(x, y);
        }
    }
    return b.build();
}

Graph join(const Graph& a, const Graph& b) {
    const int n = a.order() + b.order();
    check_order(n);
    GraphBuilder out(n);
    for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
    for (const auto& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
    return out.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int n = a.order() + b.order();
    check_order(n);
    GraphBuilder out(n);
    for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
    for (const auto& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
    return out.build();
}

Graph complement(const Graph& g) {
    GraphBuilder out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out.build();
}

Graph remove_edge(const Graph& g, EdgeId e) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("edge not present");
    GraphBuilder out(g.order());
    for (const auto& f : g.edges())
        if (!(f == e)) out.add_edge(f.u, f.v);
    return out.build();
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation length mismatch");
    GraphBuilder out(g.order());
    for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out.build();
}

namespace {

// Backtracking extension of a partial vertex bijection a -> b. Vertices
// of `a` are mapped in an order that fixes high-degree vertices first.
bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& order, size_t pos,
                        std::vector<int>& map, std::uint64_t used) {
    if (pos == order.size()) return true;
    const int u = order[pos];
    for (int w = 0; w < b.order(); ++w) {
        if (used & (std::uint64_t{1} << w)) continue;
        if (a.degree(u) != b.degree(w)) continue;
        bool ok = true;
        for (size_t i = 0; i < pos && ok; ++i) {
            const int prev = order[i];
            if (a.has_edge(u, prev) != b.has_edge(w, map[prev])) ok = false;
        }
        if (!ok) continue;
        map[u] = w;
        if (extend_isomorphism(a, b, order, pos + 1, map, used | (std::uint64_t{1} << w)))
            return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    std::vector<int> order(a.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.degree(x) > a.degree(y); });
    std::vector<int> map(a.order(), -1);
    return extend_isomorphism(a, b, order, 0, map, 0);
}

}  // namespace rcx
