#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rcx {

inline constexpr int kMaxVertices = 64;

/// Undirected edge, stored with u < v. Orders lexicographically.
struct EdgeId {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

inline EdgeId make_edge(int a, int b) {
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

/// Immutable simple graph on vertices 0..n-1, adjacency held as one
/// 64-bit neighbor mask per vertex. Value type, cheap to copy, safe to
/// share across threads. Factories below enforce symmetry and
/// loop-freeness; bits at positions >= n are always zero.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<EdgeId>& edges);

    int order() const { return n_; }
    int size() const;  // edge count

    bool has_edge(int u, int v) const;
    std::uint64_t neighbors(int v) const;
    int degree(int v) const { return std::popcount(neighbors(v)); }
    int min_degree() const;
    int max_degree() const;
    bool is_connected() const;

    std::uint64_t vertex_mask() const;
    std::vector<EdgeId> edges() const;  // lexicographic order

    /// Checks the representation invariants; used by tests and after
    /// every algebraic construction.
    bool valid() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    int n_;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Accumulates edges, then freezes into an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    Graph build() const;
    /// Read-only view of the current state, without copying. The search
    /// engine leans on this in its hot loop.
    const Graph& view() const { return g_; }

private:
    Graph g_;
};

/// Deletion classes: nested families G_k, G_{k+1}, ... of graphs removed
/// from a complete host. Stars and matchings are indexed from 1, paths
/// and complete graphs from 2.
enum class DeletionClass { Star, Matching, Path, Complete };

struct ClassSpec {
    DeletionClass kind = DeletionClass::Star;
    int min_index() const {
        return (kind == DeletionClass::Star || kind == DeletionClass::Matching) ? 1 : 2;
    }
    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

std::string to_string(DeletionClass cls);

/// Vertices the class member G_idx occupies inside a complete host.
int class_member_order(ClassSpec cls, int idx);
/// Edge count of the class member: e(S_k)=k, e(M_k)=k, e(P_k)=k-1, e(K_k)=C(k,2).
int class_member_edge_count(ClassSpec cls, int idx);

// -- constructions ----------------------------------------------------

Graph complete(int r);

/// K_r minus one canonical embedding of the class member: star centered
/// at 0 with leaves 1..idx, matching on (0,1),(2,3),..., path on
/// 0..idx-1, clique on 0..idx-1. Any embedding into K_r is equivalent
/// under vertex permutation, so the prefix placement loses nothing.
Graph delete_class_member(const Graph& host, ClassSpec cls, int idx);

/// K_r plus a pendant vertex adjacent to vertices 0..k-1.
Graph book_join(int r, int k);

/// Graph on Z_k with x ~ y iff (x-y) mod k lands in diffs (closed under
/// negation implicitly; pass positive representatives 1..k/2).
Graph circulant(int k, const std::vector<int>& diffs);

Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
Graph remove_edge(const Graph& g, EdgeId e);

/// Exact isomorphism test via degree-sequence refinement plus
/// backtracking over vertex bijections. Intended for <= 12 vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

}  // namespace rcx
