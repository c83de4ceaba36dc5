#include "rhograph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhograph {

void Graph::add_edge_internal(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("negative order");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge_internal(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::complete_bipartite(int s, int t) {
    if (s < 1 || t < 1)
        throw std::invalid_argument("complete_bipartite: part sizes must be >= 1");
    Graph g(s + t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) g.add_edge_internal(i, s + j);
    Bipartition b{VertexSet(s + t), VertexSet(s + t)};
    for (int i = 0; i < s; ++i) b.left.set(i);
    for (int j = 0; j < t; ++j) b.right.set(s + j);
    g.declared_ = std::move(b);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge_internal(i, j);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge_internal(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path(n);
    g.add_edge_internal(n - 1, 0);
    return g;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    g.declared_.reset();
    g.add_edge_internal(u, v);
    return g;
}

Graph Graph::with_vertex(const VertexSet& nbrs) const {
    Graph g(n_ + 1);
    for (int v = 0; v < n_; ++v)
        for (int u : adj_[v])
            if (u > v) g.add_edge_internal(v, u);
    for (int u : nbrs) g.add_edge_internal(u, n_);
    return g;
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<int> newindex(n_, -1);
    int k = 0;
    for (int v : keep) newindex[v] = k++;
    Graph g(k);
    for (int v : keep)
        for (int u : adj_[v])
            if (u > v && keep.test(u)) g.add_edge_internal(newindex[v], newindex[u]);
    return g;
}

Graph Graph::without_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    VertexSet keep = VertexSet::full(n_);
    keep.reset(v);
    return induced(keep);
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> comps;
    VertexSet seen(n_);
    for (int s = 0; s < n_; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n_);
        comp.set(s);
        VertexSet frontier(n_);
        frontier.set(s);
        while (!frontier.empty()) {
            VertexSet nxt(n_);
            for (int v : frontier) nxt |= adj_[v];
            nxt -= comp;
            comp |= nxt;
            frontier = nxt;
        }
        seen |= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

std::optional<Bipartition> Graph::find_bipartition() const {
    if (declared_) return declared_;
    Bipartition b{VertexSet(n_), VertexSet(n_)};
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : adj_[v]) {
                if (color[u] < 0) {
                    color[u] = color[v] ^ 1;
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n_; ++v) (color[v] == 0 ? b.left : b.right).set(v);
    return b;
}

VertexSet Graph::neighborhood_at_distance(int v, int dist) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    if (dist < 0) throw std::invalid_argument("negative distance");
    VertexSet layer(n_);
    layer.set(v);
    VertexSet seen = layer;
    for (int i = 0; i < dist; ++i) {
        VertexSet nxt(n_);
        for (int u : layer) nxt |= adj_[u];
        nxt -= seen;
        seen |= nxt;
        layer = nxt;
        if (layer.empty()) break;
    }
    return layer;
}

long long Graph::edges_inside(const VertexSet& X) const {
    long long twice = 0;
    for (int v : X) twice += (adj_[v] & X).count();
    return twice / 2;
}

long long Graph::edges_between(const VertexSet& X, const VertexSet& Y) const {
    // Sweep counts an edge once per endpoint in X with the other end in Y;
    // only edges inside X∩Y are seen twice, so subtract e(X∩Y) to count
    // them once (the documented convention).
    long long total = 0;
    for (int v : X) total += (adj_[v] & Y).count();
    total -= edges_inside(X & Y);
    return total;
}

std::pair<long long, long long> Graph::edge_counts(const VertexSet& X,
                                                   const VertexSet& Y) const {
    return {edges_inside(X), edges_between(X, Y)};
}

Graph Graph::peel_to_min_degree(int k) const {
    if (k < 0) throw std::invalid_argument("negative degree threshold");
    VertexSet keep = VertexSet::full(n_);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : keep) {
            if ((adj_[v] & keep).count() < k + 1) {
                keep.reset(v);
                changed = true;
            }
        }
    }
    return induced(keep);
}

long long Graph::gamma_of(int z) const {
    if (z < 0 || z >= n_) throw std::invalid_argument("vertex out of range");
    const VertexSet& a = adj_[z];
    VertexSet b = a.complement();
    b.reset(z);
    return a.count() + 2 * edges_inside(a) + edges_between(a, b);
}

} // namespace rhograph
