#ifndef RHOGRAPH_GRAPH_HPP
#define RHOGRAPH_GRAPH_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rhograph/vertex_set.hpp"

namespace rhograph {

/// Two-coloring of the vertices with every edge crossing between classes.
/// `left` holds the smallest vertex of each connected component.
struct Bipartition {
    VertexSet left;
    VertexSet right;
};

/// Immutable simple graph on dense vertex indices 0..n-1, adjacency stored
/// as per-vertex bitsets. All "mutations" return new values, so instances
/// are safely shareable across threads.
class Graph {
public:
    /// The empty graph (n = 0); a legal value, e.g. as peeling residue.
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    static Graph complete_bipartite(int s, int t);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    int order() const { return n_; }
    long long size() const { return m_; }

    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;
    int max_degree() const;

    VertexSet vertices() const { return VertexSet::full(n_); }

    /// New graph with the edge {u,v} added (no-op copy if present).
    Graph with_edge(int u, int v) const;
    /// New graph with one vertex appended, adjacent to `nbrs`.
    Graph with_vertex(const VertexSet& nbrs) const;
    /// Induced subgraph on `keep`, reindexed densely preserving order.
    Graph induced(const VertexSet& keep) const;
    Graph without_vertex(int v) const;

    std::vector<VertexSet> components() const;
    bool connected() const;

    /// Proper 2-coloring if one exists (no odd cycle), else nullopt.
    /// Deterministic: per component, the smallest vertex goes left.
    std::optional<Bipartition> find_bipartition() const;

    /// Exact distance-i set via BFS layers; N_0(v) = {v}.
    VertexSet neighborhood_at_distance(int v, int dist) const;

    /// (e(X), e(X,Y)): edges inside X, and edges with one endpoint in X
    /// and the other in Y (an edge inside X∩Y counts once).
    std::pair<long long, long long> edge_counts(const VertexSet& X,
                                                const VertexSet& Y) const;
    long long edges_inside(const VertexSet& X) const;
    long long edges_between(const VertexSet& X, const VertexSet& Y) const;

    /// Deletes vertices of degree < k+1 until none remain; the residual
    /// has minimum degree >= k+1 or is empty. Order-independent.
    Graph peel_to_min_degree(int k) const;

    /// gamma(z) = |A| + 2 e(A) + e(A,B) with A = N(z), B = V \ (A ∪ {z}).
    long long gamma_of(int z) const;

    /// Bipartition recorded at construction time (complete_bipartite only).
    const std::optional<Bipartition>& declared_bipartition() const {
        return declared_;
    }

    /// Labeled equality (same order, same adjacency).
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void add_edge_internal(int u, int v);

    int n_ = 0;
    std::vector<VertexSet> adj_;
    long long m_ = 0;
    std::optional<Bipartition> declared_;
};

} // namespace rhograph

#endif
