#include "dyntri/indep_paths.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <unordered_set>

namespace dyntri {

bool conflicts(const TwoPath& a, const TwoPath& b) noexcept {
  const VertexId av[3] = {a.u, a.center, a.w};
  const VertexId bv[3] = {b.u, b.center, b.w};
  int shared = 0;
  for (VertexId x : av) {
    for (VertexId y : bv) shared += (x == y);
  }
  return shared >= 2;
}

std::vector<TwoPath> enumerate_two_paths(const SortedAdjacency& adj) {
  std::vector<TwoPath> out;
  for (std::size_t i = 0; i < adj.vertices.size(); ++i) {
    const auto& nb = adj.neighbors[i];
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        out.push_back(TwoPath{nb[a], adj.vertices[i], nb[b]});
      }
    }
  }
  return out;
}

std::vector<TwoPath> greedy_independent_set(const SortedAdjacency& adj,
                                            std::uint64_t target) {
  // Two 2-paths conflict iff they share a vertex pair, so it suffices to
  // remember the three vertex pairs of every selected path.
  std::unordered_set<std::uint64_t> covered;
  auto is_covered = [&](VertexId a, VertexId b) {
    return covered.contains(edge_key(a, b));
  };
  std::vector<TwoPath> selected;
  for (std::size_t idx = 0; idx < adj.vertices.size(); ++idx) {
    const VertexId v = adj.vertices[idx];
    const auto& nb = adj.neighbors[idx];
    if (nb.size() < 2) continue;
    for (std::size_t i = 0; i + 1 < nb.size(); ++i) {
      const VertexId x = nb[i];
      if (is_covered(x, v)) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const VertexId y = nb[j];
        if (is_covered(y, v) || is_covered(x, y)) continue;
        covered.insert(edge_key(x, v));
        covered.insert(edge_key(v, y));
        covered.insert(edge_key(x, y));
        selected.push_back(TwoPath{x, v, y});
        if (target != 0 && selected.size() >= target) return selected;
        break;  // every later pair at this center reuses {x, v}
      }
    }
  }
  return selected;
}

std::uint64_t greedy_independent_count(const SortedAdjacency& adj,
                                       std::uint64_t target) {
  if (target == 0) {
    throw Error(ErrorCode::InvalidRange, "greedy target must be at least 1");
  }
  return greedy_independent_set(adj, target).size();
}

std::uint64_t greedy_independent_count(const AdjacencyGraph& g,
                                       std::uint64_t target) {
  return greedy_independent_count(g.sorted_adjacency(), target);
}

namespace {

struct MaxIndependent {
  std::vector<std::uint32_t> conflict;  // bitmask of conflicting paths
  int best = 0;

  void search(std::uint32_t candidates, int size) {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(candidates) <= best) return;
    const int i = std::countr_zero(candidates);
    const std::uint32_t bit = std::uint32_t{1} << i;
    search(candidates & ~bit & ~conflict[i], size + 1);
    search(candidates & ~bit, size);
  }
};

}  // namespace

std::uint64_t exact_max_independent(const AdjacencyGraph& g) {
  const auto paths = enumerate_two_paths(g.sorted_adjacency());
  if (paths.size() > kExactTwoPathBudget) {
    throw Error(ErrorCode::BudgetExceeded,
                "exact search limited to " + std::to_string(kExactTwoPathBudget) +
                    " 2-paths, graph has " + std::to_string(paths.size()));
  }
  MaxIndependent solver;
  solver.conflict.assign(paths.size(), 0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (i != j && conflicts(paths[i], paths[j])) {
        solver.conflict[i] |= std::uint32_t{1} << j;
      }
    }
  }
  const std::uint32_t all =
      paths.empty() ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << paths.size()) - 1);
  solver.search(all, 0);
  return static_cast<std::uint64_t>(solver.best);
}

std::vector<TwoPath> spanning_tree_independent_set(const AdjacencyGraph& g) {
  const auto touched = g.touched_vertices();
  if (touched.empty()) return {};
  const std::size_t n = g.universe();
  constexpr VertexId kNone = 0;
  std::vector<VertexId> parent(n + 1, kNone);
  std::vector<std::uint32_t> depth(n + 1, 0);
  std::vector<char> in_tree(n + 1, 0);
  std::vector<std::uint32_t> live_children(n + 1, 0);

  const VertexId root = touched.front();
  std::queue<VertexId> frontier;
  frontier.push(root);
  in_tree[root] = 1;
  std::vector<VertexId> members;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    members.push_back(v);
    for (VertexId w : g.sorted_neighbors(v)) {
      if (in_tree[w]) continue;
      in_tree[w] = 1;
      parent[w] = v;
      depth[w] = depth[v] + 1;
      ++live_children[v];
      frontier.push(w);
    }
  }

  std::vector<char> alive(n + 1, 0);
  for (VertexId v : members) alive[v] = 1;
  std::size_t remaining = members.size();
  auto retire = [&](VertexId v) {
    alive[v] = 0;
    --remaining;
    if (parent[v] != kNone) --live_children[parent[v]];
  };

  std::vector<TwoPath> out;
  while (remaining >= 3) {
    VertexId u = kNone;
    for (VertexId v : members) {
      if (!alive[v] || v == root || live_children[v] != 0) continue;
      if (u == kNone || depth[v] > depth[u]) u = v;
    }
    const VertexId v = parent[u];
    VertexId sibling = kNone;
    for (VertexId w : members) {
      if (w != u && alive[w] && parent[w] == v) {
        sibling = w;
        break;
      }
    }
    if (sibling != kNone) {
      // u is a deepest leaf, so its sibling is a leaf too.
      out.push_back(TwoPath::make(u, v, sibling));
      retire(u);
      retire(sibling);
    } else {
      // v has u as its only live child and, with >= 3 vertices left, a parent.
      out.push_back(TwoPath::make(u, v, parent[v]));
      retire(u);
      retire(v);
    }
  }
  return out;
}

bool is_independent_set(std::span<const TwoPath> paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (conflicts(paths[i], paths[j])) return false;
    }
  }
  return true;
}

bool is_connected(const AdjacencyGraph& g) {
  const auto touched = g.touched_vertices();
  if (touched.empty()) return false;
  std::vector<char> seen(std::size_t{g.universe()} + 1, 0);
  std::vector<VertexId> stack{touched.front()};
  seen[touched.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == touched.size();
}

bool is_bipartite(const AdjacencyGraph& g) {
  std::vector<int> side(std::size_t{g.universe()} + 1, -1);
  for (VertexId s : g.touched_vertices()) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_isolated_edge(const AdjacencyGraph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) == 1 && g.degree(v) == 1) return true;
  }
  return false;
}

LowerBoundReport verify_lower_bounds(const AdjacencyGraph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected, "lower bounds need a connected graph with at least one edge");
  }
  if (has_isolated_edge(g)) {
    throw Error(ErrorCode::HasIsolatedEdges, "graph consists of an isolated edge");
  }
  LowerBoundReport r;
  r.vertices = g.touched_vertices().size();
  r.edges = g.edge_count();
  r.bipartite = is_bipartite(g);

  const auto adj = g.sorted_adjacency();
  r.greedy = greedy_independent_set(adj).size();
  r.spanning_tree = spanning_tree_independent_set(g).size();
  r.witness = r.greedy;
  r.witness_method = "greedy";
  if (r.spanning_tree > r.witness) {
    r.witness = r.spanning_tree;
    r.witness_method = "spanning_tree";
  }
  if (enumerate_two_paths(adj).size() <= kExactTwoPathBudget) {
    r.exact = exact_max_independent(g);
    if (*r.exact > r.witness) {
      r.witness = *r.exact;
      r.witness_method = "exact";
    }
  }

  r.bound_connected = (r.vertices + 1) / 2 - 1;
  r.bound_bipartite = r.edges / 9;
  r.bound_general = r.edges / 18;
  r.connected_satisfied = r.witness >= r.bound_connected;
  r.general_satisfied = r.witness >= r.bound_general;
  if (r.bipartite) r.bipartite_satisfied = r.witness >= r.bound_bipartite;
  return r;
}

}  // namespace dyntri
