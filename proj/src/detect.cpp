#include "rhograph/detect.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "rhograph/enumerate.hpp"
#include "rhograph/errors.hpp"

namespace rhograph {

TreePattern::TreePattern(Graph tree) : tree_(std::move(tree)) {
    if (tree_.order() < 1) throw std::invalid_argument("tree pattern must be nonempty");
    if (tree_.size() != tree_.order() - 1 || !tree_.connected())
        throw std::invalid_argument("tree pattern must be connected with m = n - 1");
}

bool Witness::validate(const Graph& host) const {
    auto distinct = [&](const std::vector<int>& vs) {
        VertexSet seen(host.order());
        for (int v : vs) {
            if (v < 0 || v >= host.order() || seen.test(v)) return false;
            seen.set(v);
        }
        return true;
    };
    switch (kind) {
    case WitnessKind::Cycle: {
        if (vertices.size() < 3 || !distinct(vertices)) return false;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (!host.has_edge(vertices[i], vertices[(i + 1) % vertices.size()]))
                return false;
        return true;
    }
    case WitnessKind::Path: {
        if (vertices.empty() || !distinct(vertices)) return false;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            if (!host.has_edge(vertices[i], vertices[i + 1])) return false;
        return true;
    }
    case WitnessKind::TreeEmbedding: {
        if (static_cast<int>(vertices.size()) != pattern.order() || !distinct(vertices))
            return false;
        for (int v = 0; v < pattern.order(); ++v)
            for (int u : pattern.neighbors(v))
                if (u > v && !host.has_edge(vertices[v], vertices[u])) return false;
        return true;
    }
    case WitnessKind::MinorModel: {
        if (static_cast<int>(branch_sets.size()) != pattern.order()) return false;
        VertexSet used(host.order());
        for (const auto& b : branch_sets) {
            if (b.empty() || b.intersects(used)) return false;
            if (!host.induced(b).connected()) return false;
            used |= b;
        }
        for (int v = 0; v < pattern.order(); ++v)
            for (int u : pattern.neighbors(v)) {
                if (u < v) continue;
                bool found = false;
                for (int a : branch_sets[v])
                    if (host.neighbors(a).intersects(branch_sets[u])) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        return true;
    }
    }
    return false;
}

std::optional<Witness> contains_cycle(const Graph& g, int length) {
    if (length < 3) throw std::invalid_argument("cycle length must be >= 3");
    int n = g.order();
    if (length > n) return std::nullopt;
    std::vector<int> path;
    VertexSet onpath(n);
    // Search cycles whose smallest vertex is the root, so each cycle is
    // visited once up to rotation.
    std::function<std::optional<Witness>(int, int)> extend =
        [&](int root, int v) -> std::optional<Witness> {
        if (static_cast<int>(path.size()) == length) {
            if (g.has_edge(v, root)) {
                Witness w;
                w.kind = WitnessKind::Cycle;
                w.vertices = path;
                return w;
            }
            return std::nullopt;
        }
        for (int u : g.neighbors(v)) {
            if (u <= root || onpath.test(u)) continue;
            path.push_back(u);
            onpath.set(u);
            if (auto w = extend(root, u)) return w;
            onpath.reset(u);
            path.pop_back();
        }
        return std::nullopt;
    };
    for (int root = 0; root + length <= n || root < n; ++root) {
        if (g.degree(root) < 2) continue;
        path.assign(1, root);
        onpath = VertexSet(n);
        onpath.set(root);
        if (auto w = extend(root, root)) return w;
    }
    return std::nullopt;
}

std::optional<Witness> contains_anchored_path(const Graph& g, const VertexSet& X, int r) {
    if (r < 1) throw std::invalid_argument("anchored path needs r >= 1");
    int target = 2 * r + 1;
    int n = g.order();
    if (target > n) return std::nullopt;
    std::vector<int> path;
    VertexSet onpath(n);
    std::function<std::optional<Witness>(int)> extend = [&](int v) -> std::optional<Witness> {
        if (static_cast<int>(path.size()) == target) {
            if (X.test(v) && v > path.front()) {
                Witness w;
                w.kind = WitnessKind::Path;
                w.vertices = path;
                return w;
            }
            return std::nullopt;
        }
        for (int u : g.neighbors(v)) {
            if (onpath.test(u)) continue;
            path.push_back(u);
            onpath.set(u);
            if (auto w = extend(u)) return w;
            onpath.reset(u);
            path.pop_back();
        }
        return std::nullopt;
    };
    for (int s : X) {
        path.assign(1, s);
        onpath = VertexSet(n);
        onpath.set(s);
        if (auto w = extend(s)) return w;
    }
    return std::nullopt;
}

namespace {

// Pattern vertices in BFS order from a chosen root so each vertex after
// the first has an already-placed parent.
struct EmbedOrder {
    std::vector<int> order;
    std::vector<int> parent; // index into `order` positions, -1 for root
};

EmbedOrder bfs_order(const Graph& t, int root) {
    EmbedOrder eo;
    std::vector<int> pos(t.order(), -1);
    eo.order.push_back(root);
    eo.parent.push_back(-1);
    pos[root] = 0;
    for (std::size_t h = 0; h < eo.order.size(); ++h) {
        for (int u : t.neighbors(eo.order[h])) {
            if (pos[u] >= 0) continue;
            pos[u] = static_cast<int>(eo.order.size());
            eo.order.push_back(u);
            eo.parent.push_back(static_cast<int>(h));
        }
    }
    return eo;
}

} // namespace

std::optional<Witness> contains_tree(const Graph& g, const TreePattern& t) {
    const Graph& tr = t.tree();
    int tn = tr.order();
    if (tn > g.order()) return std::nullopt;
    if (tn == 1) {
        if (g.order() == 0) return std::nullopt;
        Witness w;
        w.kind = WitnessKind::TreeEmbedding;
        w.vertices = {0};
        w.pattern = tr;
        return w;
    }
    // Anchor at a maximum-degree pattern vertex; try host vertices in
    // decreasing degree order to fail fast on degree obstructions.
    int root = 0;
    for (int v = 1; v < tn; ++v)
        if (tr.degree(v) > tr.degree(root)) root = v;
    EmbedOrder eo = bfs_order(tr, root);

    std::vector<int> hosts(g.order());
    std::iota(hosts.begin(), hosts.end(), 0);
    std::stable_sort(hosts.begin(), hosts.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> image(tn, -1);
    VertexSet used(g.order());
    std::function<bool(int)> place = [&](int step) -> bool {
        if (step == tn) return true;
        int tv = eo.order[step];
        int pimg = image[eo.order[eo.parent[step]]];
        for (int hv : g.neighbors(pimg)) {
            if (used.test(hv) || g.degree(hv) < tr.degree(tv)) continue;
            image[tv] = hv;
            used.set(hv);
            if (place(step + 1)) return true;
            used.reset(hv);
            image[tv] = -1;
        }
        return false;
    };
    for (int hv : hosts) {
        if (g.degree(hv) < tr.degree(root)) continue;
        image.assign(tn, -1);
        used = VertexSet(g.order());
        image[eo.order[0]] = hv;
        used.set(hv);
        if (place(1)) {
            Witness w;
            w.kind = WitnessKind::TreeEmbedding;
            w.vertices = image;
            w.pattern = tr;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<Witness> greedy_min_degree_embed(const Graph& g, const TreePattern& t) {
    const Graph& tr = t.tree();
    int tn = tr.order();
    if (tn > g.order() || g.order() == 0) return std::nullopt;
    EmbedOrder eo = bfs_order(tr, 0);
    int start = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    std::vector<int> image(tn, -1);
    VertexSet used(g.order());
    image[eo.order[0]] = start;
    used.set(start);
    for (int step = 1; step < tn; ++step) {
        int pimg = image[eo.order[eo.parent[step]]];
        int pick = -1;
        for (int hv : g.neighbors(pimg)) {
            if (!used.test(hv)) {
                pick = hv;
                break;
            }
        }
        if (pick < 0) return std::nullopt; // no unused neighbor: greedy fails
        image[eo.order[step]] = pick;
        used.set(pick);
    }
    Witness w;
    w.kind = WitnessKind::TreeEmbedding;
    w.vertices = image;
    w.pattern = tr;
    return w;
}

AllTreesResult contains_all_trees(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("tree order must be >= 1");
    AllTreesResult res;
    for (const Graph& tr : enumerate_free_trees(t)) {
        TreePattern pat(tr);
        if (!contains_tree(g, pat)) {
            res.all_contained = false;
            res.first_missing = std::move(pat);
            return res;
        }
    }
    res.all_contained = true;
    return res;
}

namespace {

struct MinorSearch {
    const Graph& g;
    const Graph& h;
    long long budget;
    long long nodes = 0;
    std::vector<int> horder;       // pattern vertices, decreasing degree
    std::vector<VertexSet> branch; // by pattern vertex id

    MinorSearch(const Graph& g_, const Graph& h_, long long budget_)
        : g(g_), h(h_), budget(budget_), branch(h_.order(), VertexSet(g_.order())) {
        horder.resize(h.order());
        std::iota(horder.begin(), horder.end(), 0);
        std::stable_sort(horder.begin(), horder.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
    }

    bool compatible(int idx, const VertexSet& s) const {
        int hv = horder[idx];
        for (int j = 0; j < idx; ++j) {
            int hu = horder[j];
            if (!h.has_edge(hv, hu)) continue;
            bool touch = false;
            for (int a : s)
                if (g.neighbors(a).intersects(branch[hu])) {
                    touch = true;
                    break;
                }
            if (!touch) return false;
        }
        return true;
    }

    bool assign(int idx, const VertexSet& used) {
        if (idx == h.order()) return true;
        if (++nodes > budget) throw BudgetExceeded("minor search budget exceeded");
        if (g.order() - used.count() < h.order() - idx) return false;
        int max_size = g.order() - used.count() - (h.order() - idx - 1);
        for (int rootv = 0; rootv < g.order(); ++rootv) {
            if (used.test(rootv)) continue;
            VertexSet s(g.order());
            s.set(rootv);
            VertexSet banned = used;
            for (int v = 0; v < rootv; ++v) banned.set(v);
            if (grow(idx, used, s, banned, max_size)) return true;
        }
        return false;
    }

    // Binary-partition enumeration of connected supersets of s avoiding
    // `banned`: each candidate branch set is visited exactly once.
    bool grow(int idx, const VertexSet& used, VertexSet& s, VertexSet banned,
              int max_size) {
        if (++nodes > budget) throw BudgetExceeded("minor search budget exceeded");
        if (compatible(idx, s)) {
            int hv = horder[idx];
            branch[hv] = s;
            if (assign(idx + 1, used | s)) return true;
            branch[hv] = VertexSet(g.order());
        }
        if (s.count() >= max_size) return false;
        VertexSet frontier(g.order());
        for (int v : s) frontier |= g.neighbors(v);
        frontier -= s;
        frontier -= banned;
        for (int u : frontier) {
            s.set(u);
            if (grow(idx, used, s, banned, max_size)) return true;
            s.reset(u);
            banned.set(u); // supersets without u are covered by later picks
        }
        return false;
    }
};

} // namespace

std::optional<Witness> find_minor(const Graph& g, const Graph& h, long long budget) {
    if (h.order() == 0) {
        Witness w;
        w.kind = WitnessKind::MinorModel;
        w.pattern = h;
        return w;
    }
    if (h.order() > g.order()) return std::nullopt;
    MinorSearch ms(g, h, budget);
    if (ms.assign(0, VertexSet(g.order()))) {
        Witness w;
        w.kind = WitnessKind::MinorModel;
        w.pattern = h;
        w.branch_sets.assign(h.order(), VertexSet(g.order()));
        for (int i = 0; i < h.order(); ++i) w.branch_sets[i] = ms.branch[i];
        return w;
    }
    return std::nullopt;
}

bool contains_minor(const Graph& g, const Graph& h, long long budget) {
    return find_minor(g, h, budget).has_value();
}

bool is_outerplanar(const Graph& g) {
    static const Graph k4 = Graph::complete(4);
    static const Graph k23 = Graph::complete_bipartite(2, 3);
    for (const auto& comp : g.components()) {
        Graph c = g.induced(comp);
        if (c.order() >= 2 && c.size() > 2LL * c.order() - 3) return false;
        if (contains_minor(c, k4)) return false;
        if (contains_minor(c, k23)) return false;
    }
    return true;
}

namespace brute {

bool contains_cycle(const Graph& g, int length) {
    int n = g.order();
    if (length > n || length < 3) return false;
    // All vertex subsets of the right size, all cyclic orderings.
    std::vector<int> pick;
    std::function<bool(int)> choose = [&](int from) -> bool {
        if (static_cast<int>(pick.size()) == length) {
            std::vector<int> perm(pick.begin() + 1, pick.end());
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = g.has_edge(pick[0], perm.front()) &&
                          g.has_edge(perm.back(), pick[0]);
                for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
                    ok = g.has_edge(perm[i], perm[i + 1]);
                if (ok) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            if (choose(v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return choose(0);
}

bool contains_tree(const Graph& g, const Graph& tree) {
    int tn = tree.order();
    if (tn > g.order()) return false;
    std::vector<int> image(tn, -1);
    VertexSet used(g.order());
    std::function<bool(int)> place = [&](int tv) -> bool {
        if (tv == tn) return true;
        for (int hv = 0; hv < g.order(); ++hv) {
            if (used.test(hv)) continue;
            bool ok = true;
            for (int u : tree.neighbors(tv))
                if (u < tv && !g.has_edge(hv, image[u])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[tv] = hv;
            used.set(hv);
            if (place(tv + 1)) return true;
            used.reset(hv);
            image[tv] = -1;
        }
        return false;
    };
    return place(0);
}

} // namespace brute

} // namespace rhograph
