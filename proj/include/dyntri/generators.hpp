#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dyntri/stream.hpp"

namespace dyntri {

/// A target graph over [1, n] as an edge list with u < v.
struct GeneratedGraph {
  std::uint32_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

GeneratedGraph complete_graph(std::uint32_t k);
GeneratedGraph path_graph(std::uint32_t k);
/// K_{1,leaves}; the center is vertex 1.
GeneratedGraph star_graph(std::uint32_t leaves);
/// K_{a,b}: left side 1..a, right side a+1..a+b.
GeneratedGraph complete_bipartite(std::uint32_t a, std::uint32_t b);
GeneratedGraph gnp(std::uint32_t n, double q, std::mt19937_64& rng);
/// G(n, q) background plus `triangles` triangles on random vertex triples.
GeneratedGraph planted_triangles(std::uint32_t n, std::uint32_t triangles,
                                 double q, std::mt19937_64& rng);
/// Uniform random recursive tree on [1, n].
GeneratedGraph random_tree(std::uint32_t n, std::mt19937_64& rng);
/// Random tree plus each remaining pair with probability q; connected.
GeneratedGraph random_connected(std::uint32_t n, double q, std::mt19937_64& rng);
/// Circulant graph: i ~ i +- 1..reach (mod n).
GeneratedGraph ring_lattice(std::uint32_t n, std::uint32_t reach);

/// Inserts in the given order.
std::vector<EdgeEvent> insertion_stream(const GeneratedGraph& g);

/// Insert-then-delete churn that leaves exactly `g` as the final graph:
/// round(f * m) distinct decoy pairs drawn from the whole universe are
/// inserted (shuffled among the target inserts) and later deleted; a decoy
/// that is also a target edge is re-inserted right after its deletion.
std::vector<EdgeEvent> churn_stream(const GeneratedGraph& g,
                                    double delete_fraction,
                                    std::uint64_t seed);

}  // namespace dyntri
