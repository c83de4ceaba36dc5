#ifndef RHOGRAPH_DETECT_HPP
#define RHOGRAPH_DETECT_HPP

#include <optional>
#include <vector>

#include "rhograph/graph.hpp"

namespace rhograph {

/// Tree used as a containment pattern; construction validates that the
/// graph is connected with m = t - 1.
class TreePattern {
public:
    explicit TreePattern(Graph tree);
    const Graph& tree() const { return tree_; }
    int order() const { return tree_.order(); }

private:
    Graph tree_;
};

enum class WitnessKind { Cycle, Path, TreeEmbedding, MinorModel };

/// Structure found in a host graph, re-checkable against it.
struct Witness {
    WitnessKind kind;
    /// Cycle/Path: the vertex sequence. TreeEmbedding: image of pattern
    /// vertex i at position i.
    std::vector<int> vertices;
    /// MinorModel: branch set per pattern vertex.
    std::vector<VertexSet> branch_sets;
    Graph pattern; // tree or minor pattern, when applicable

    bool validate(const Graph& host) const;
};

/// Cycle of length exactly L, if any (exhaustive backtracking).
std::optional<Witness> contains_cycle(const Graph& g, int length);

/// Path on 2r+1 vertices with both endpoints in X, if any.
std::optional<Witness> contains_anchored_path(const Graph& g, const VertexSet& X, int r);

/// Injective subgraph embedding of T into g (backtracking with degree
/// pruning), if any.
std::optional<Witness> contains_tree(const Graph& g, const TreePattern& t);

/// Greedy leaf-by-leaf embedding; guaranteed to succeed when
/// delta(g) >= |T| - 1, and merely a heuristic below that threshold.
std::optional<Witness> greedy_min_degree_embed(const Graph& g, const TreePattern& t);

/// Checks every free tree of order t in catalog order; on failure returns
/// the first missing tree.
struct AllTreesResult {
    bool all_contained = false;
    std::optional<TreePattern> first_missing;
};
AllTreesResult contains_all_trees(const Graph& g, int t);

inline constexpr long long kDefaultMinorBudget = 10'000'000;

/// Branch-set minor test, exact within the node budget (throws
/// BudgetExceeded past it). Patterns are expected to be small (order <= 6).
bool contains_minor(const Graph& g, const Graph& h,
                    long long budget = kDefaultMinorBudget);
std::optional<Witness> find_minor(const Graph& g, const Graph& h,
                                  long long budget = kDefaultMinorBudget);

/// No K_4 minor and no K_{2,3} minor, with the per-component edge-bound
/// prefilter m <= 2n - 3.
bool is_outerplanar(const Graph& g);

/// Deliberately unoptimized second opinions used to re-validate reported
/// counterexamples through an independent code path.
namespace brute {
bool contains_cycle(const Graph& g, int length);
bool contains_tree(const Graph& g, const Graph& tree);
} // namespace brute

} // namespace rhograph

#endif
