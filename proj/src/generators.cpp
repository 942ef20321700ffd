#include "dyntri/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "dyntri/hashing.hpp"

namespace dyntri {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidRange, what);
}

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

GeneratedGraph complete_graph(std::uint32_t k) {
  require(k >= 2, "complete graph needs at least 2 vertices");
  GeneratedGraph g{k, {}};
  for (VertexId u = 1; u <= k; ++u) {
    for (VertexId v = u + 1; v <= k; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

GeneratedGraph path_graph(std::uint32_t k) {
  require(k >= 2, "path needs at least 2 vertices");
  GeneratedGraph g{k, {}};
  for (VertexId u = 1; u < k; ++u) g.edges.emplace_back(u, u + 1);
  return g;
}

GeneratedGraph star_graph(std::uint32_t leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  GeneratedGraph g{leaves + 1, {}};
  for (VertexId v = 2; v <= leaves + 1; ++v) g.edges.emplace_back(1, v);
  return g;
}

GeneratedGraph complete_bipartite(std::uint32_t a, std::uint32_t b) {
  require(a >= 1 && b >= 1 && a + b >= 2, "bipartite sides must be non-empty");
  GeneratedGraph g{a + b, {}};
  for (VertexId u = 1; u <= a; ++u) {
    for (VertexId v = a + 1; v <= a + b; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

GeneratedGraph gnp(std::uint32_t n, double q, std::mt19937_64& rng) {
  require(n >= 2, "G(n, q) needs n >= 2");
  require(q >= 0.0 && q <= 1.0, "edge probability must lie in [0, 1]");
  GeneratedGraph g{n, {}};
  std::bernoulli_distribution coin(q);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

GeneratedGraph planted_triangles(std::uint32_t n, std::uint32_t triangles,
                                 double q, std::mt19937_64& rng) {
  require(n >= 3, "planted triangles need n >= 3");
  GeneratedGraph g = gnp(n, q, rng);
  std::set<std::pair<VertexId, VertexId>> present(g.edges.begin(), g.edges.end());
  std::uniform_int_distribution<VertexId> pick(1, n);
  for (std::uint32_t t = 0; t < triangles; ++t) {
    VertexId a = pick(rng), b = pick(rng), c = pick(rng);
    while (b == a) b = pick(rng);
    while (c == a || c == b) c = pick(rng);
    for (auto e : {ordered(a, b), ordered(b, c), ordered(a, c)}) {
      if (present.insert(e).second) g.edges.push_back(e);
    }
  }
  return g;
}

GeneratedGraph random_tree(std::uint32_t n, std::mt19937_64& rng) {
  require(n >= 2, "tree needs at least 2 vertices");
  GeneratedGraph g{n, {}};
  for (VertexId v = 2; v <= n; ++v) {
    const VertexId parent = std::uniform_int_distribution<VertexId>(1, v - 1)(rng);
    g.edges.emplace_back(parent, v);
  }
  return g;
}

GeneratedGraph random_connected(std::uint32_t n, double q, std::mt19937_64& rng) {
  GeneratedGraph g = random_tree(n, rng);
  std::set<std::pair<VertexId, VertexId>> present(g.edges.begin(), g.edges.end());
  std::bernoulli_distribution coin(q);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (!present.contains({u, v}) && coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

GeneratedGraph ring_lattice(std::uint32_t n, std::uint32_t reach) {
  require(reach >= 1 && n > 2 * reach, "ring lattice needs n > 2 * reach");
  GeneratedGraph g{n, {}};
  for (VertexId u = 1; u <= n; ++u) {
    for (std::uint32_t k = 1; k <= reach; ++k) {
      const VertexId v = (u - 1 + k) % n + 1;
      g.edges.push_back(ordered(u, v));
    }
  }
  return g;
}

std::vector<EdgeEvent> insertion_stream(const GeneratedGraph& g) {
  std::vector<EdgeEvent> out;
  out.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) out.push_back(normalize_event(u, v, Sign::Insert, g.n));
  return out;
}

std::vector<EdgeEvent> churn_stream(const GeneratedGraph& g,
                                    double delete_fraction,
                                    std::uint64_t seed) {
  require(delete_fraction >= 0.0 && delete_fraction < 1.0,
          "delete fraction must lie in [0, 1)");
  std::mt19937_64 rng(mix64(seed, 0xc4u));
  const std::uint64_t m = g.edges.size();
  const std::uint64_t pairs = std::uint64_t{g.n} * (g.n - 1) / 2;
  const auto decoys_wanted =
      std::min<std::uint64_t>(pairs, static_cast<std::uint64_t>(std::llround(delete_fraction * m)));

  std::vector<std::pair<VertexId, VertexId>> decoys;
  std::unordered_set<std::uint64_t> decoy_keys;
  std::uniform_int_distribution<VertexId> pick(1, g.n);
  while (decoys.size() < decoys_wanted) {
    const VertexId a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (decoy_keys.insert(edge_key(a, b)).second) decoys.push_back(ordered(a, b));
  }

  std::unordered_set<std::uint64_t> target_keys;
  for (const auto& [u, v] : g.edges) target_keys.insert(edge_key(u, v));

  std::vector<EdgeEvent> phase_in;
  for (const auto& [u, v] : g.edges) {
    if (!decoy_keys.contains(edge_key(u, v))) phase_in.push_back({u, v, Sign::Insert});
  }
  for (const auto& [u, v] : decoys) phase_in.push_back({u, v, Sign::Insert});
  std::shuffle(phase_in.begin(), phase_in.end(), rng);

  std::shuffle(decoys.begin(), decoys.end(), rng);
  std::vector<EdgeEvent> out = std::move(phase_in);
  for (const auto& [u, v] : decoys) {
    out.push_back({u, v, Sign::Delete});
    if (target_keys.contains(edge_key(u, v))) out.push_back({u, v, Sign::Insert});
  }
  return out;
}

}  // namespace dyntri
