#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyntri/stream.hpp"

namespace dyntri {

/// Two 2-paths conflict when they share two or more vertices.
bool conflicts(const TwoPath& a, const TwoPath& b) noexcept;

/// Every 2-path of the graph, centers ascending, endpoint pairs
/// lexicographic.
std::vector<TwoPath> enumerate_two_paths(const SortedAdjacency& adj);

/// Greedy maximal independent set: centers by ascending id, neighbor
/// pairs lexicographically, accept a 2-path iff it conflicts with nothing
/// selected so far. Stops as soon as `target` paths are selected (0 means
/// no limit).
std::vector<TwoPath> greedy_independent_set(const SortedAdjacency& adj,
                                            std::uint64_t target = 0);

/// min(greedy size, target). Requires target >= 1.
std::uint64_t greedy_independent_count(const SortedAdjacency& adj,
                                       std::uint64_t target);
std::uint64_t greedy_independent_count(const AdjacencyGraph& g,
                                       std::uint64_t target);

inline constexpr std::size_t kExactTwoPathBudget = 24;

/// Maximum independent set size by exhaustive branch and bound. Throws
/// BudgetExceeded when the graph has more than kExactTwoPathBudget 2-paths.
std::uint64_t exact_max_independent(const AdjacencyGraph& g);

/// Witness built along a BFS spanning tree: repeatedly take a deepest
/// leaf, pair it with a sibling leaf or with its grandparent, and retire
/// two vertices. Yields at least |V|/2 - 1 paths on a connected graph.
std::vector<TwoPath> spanning_tree_independent_set(const AdjacencyGraph& g);

bool is_independent_set(std::span<const TwoPath> paths);

bool is_connected(const AdjacencyGraph& g);
bool is_bipartite(const AdjacencyGraph& g);
/// True when some connected component is a single edge.
bool has_isolated_edge(const AdjacencyGraph& g);

struct LowerBoundReport {
  std::uint64_t vertices = 0;  // non-isolated vertices
  std::uint64_t edges = 0;
  bool bipartite = false;
  std::uint64_t greedy = 0;
  std::uint64_t spanning_tree = 0;
  std::optional<std::uint64_t> exact;  // only within the exact budget
  std::uint64_t witness = 0;           // best certified size
  std::string witness_method;

  std::uint64_t bound_connected = 0;  // ceil(|V| / 2) - 1
  std::uint64_t bound_bipartite = 0;  // floor(m / 9)
  std::uint64_t bound_general = 0;    // floor(m / 18)
  bool connected_satisfied = false;
  std::optional<bool> bipartite_satisfied;  // only for bipartite graphs
  bool general_satisfied = false;

  bool violation() const {
    return !connected_satisfied || !general_satisfied ||
           bipartite_satisfied == false;
  }
};

/// Checks the independent-2-path lower bounds on a connected graph without
/// isolated edges. Throws NotConnected or HasIsolatedEdges.
LowerBoundReport verify_lower_bounds(const AdjacencyGraph& g);

}  // namespace dyntri
