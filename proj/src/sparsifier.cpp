#include "dyntri/sparsifier.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dyntri {

ColoringFunction::ColoringFunction(std::uint64_t seed, std::uint32_t colors)
    : seed_(seed), key_(mix64(seed)), colors_(colors) {
  if (colors == 0) {
    throw Error(ErrorCode::InvalidRange, "coloring needs at least one color");
  }
}

SparsifiedGraph::SparsifiedGraph(std::uint32_t n) : n_(n) {
  if (n < 2) throw Error(ErrorCode::InvalidRange, "universe size must be at least 2");
  const std::size_t buckets = buckets_for_universe(n);
  shelves_.resize(buckets + 1);
  bucket_p2_.assign(buckets + 1, 0);
}

std::size_t SparsifiedGraph::buckets_for_universe(std::uint32_t n) {
  // floor(2 log2 n) + 1 == floor(log2 n^2) + 1
  const std::uint64_t sq = std::uint64_t{n} * n;
  return static_cast<std::size_t>(std::bit_width(sq));
}

int SparsifiedGraph::bucket_for_degree(std::uint64_t d) {
  if (d < 2) return kDegreeOneShelf;
  return static_cast<int>(std::bit_width(choose2(d))) - 1;
}

std::int32_t SparsifiedGraph::shelf_for_degree(std::uint64_t d) {
  if (d == 0) return kNoShelf;
  return bucket_for_degree(d) + 1;
}

std::uint32_t SparsifiedGraph::slot_for(VertexId v) {
  auto [it, inserted] = index_.try_emplace(v, 0);
  if (!inserted) return it->second;
  std::uint32_t s;
  if (!free_slots_.empty()) {
    s = free_slots_.back();
    free_slots_.pop_back();
  } else {
    s = static_cast<std::uint32_t>(slots_.size());
    slots_.emplace_back();
  }
  slots_[s].id = v;
  slots_[s].shelf = kNoShelf;
  slots_[s].nbrs.clear();
  it->second = s;
  return s;
}

void SparsifiedGraph::set_position(VertexId owner, VertexId other,
                                   std::uint32_t pos) {
  EdgePos& ep = edges_.find(edge_key(owner, other))->second;
  (owner < other ? ep.in_lo : ep.in_hi) = pos;
}

void SparsifiedGraph::remove_neighbor(std::uint32_t s, std::uint32_t pos) {
  auto& nbrs = slots_[s].nbrs;
  const std::uint32_t last = static_cast<std::uint32_t>(nbrs.size() - 1);
  if (pos != last) {
    nbrs[pos] = nbrs[last];
    set_position(slots_[s].id, nbrs[pos], pos);
  }
  nbrs.pop_back();
}

void SparsifiedGraph::relocate(std::uint32_t s, std::uint64_t old_degree) {
  Slot& slot = slots_[s];
  const std::uint64_t new_degree = slot.nbrs.size();
  const std::int32_t old_shelf = slot.shelf;
  const std::int32_t new_shelf = shelf_for_degree(new_degree);

  if (old_shelf > 0) bucket_p2_[old_shelf] -= choose2(old_degree);
  if (new_shelf > 0) bucket_p2_[new_shelf] += choose2(new_degree);
  p2_total_ = p2_total_ + choose2(new_degree) - choose2(old_degree);

  if (old_shelf == new_shelf) return;
  if (old_shelf != kNoShelf) {
    auto& shelf = shelves_[old_shelf];
    const std::uint32_t moved = shelf.back();
    shelf[slot.pos] = moved;
    slots_[moved].pos = slot.pos;
    shelf.pop_back();
  }
  slot.shelf = new_shelf;
  if (new_shelf == kNoShelf) {
    index_.erase(slot.id);
    slot.nbrs = {};
    free_slots_.push_back(s);
    return;
  }
  auto& shelf = shelves_[new_shelf];
  slot.pos = static_cast<std::uint32_t>(shelf.size());
  shelf.push_back(s);
}

void SparsifiedGraph::insert(VertexId u, VertexId v) {
  if (u == v) throw Error(ErrorCode::LoopEdge, "self-loop on vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (u == 0 || v > n_) {
    throw Error(ErrorCode::OutOfUniverse, "edge endpoint outside universe");
  }
  auto [it, inserted] = edges_.try_emplace(edge_key(u, v));
  if (!inserted) {
    throw Error(ErrorCode::InconsistentInsert,
                "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                    ") already present in sparsified graph");
  }
  const std::uint32_t su = slot_for(u);
  const std::uint32_t sv = slot_for(v);
  const std::uint64_t du = slots_[su].nbrs.size();
  const std::uint64_t dv = slots_[sv].nbrs.size();
  it->second = EdgePos{static_cast<std::uint32_t>(du), static_cast<std::uint32_t>(dv)};
  slots_[su].nbrs.push_back(v);
  slots_[sv].nbrs.push_back(u);
  relocate(su, du);
  relocate(sv, dv);
}

void SparsifiedGraph::erase(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  auto it = edges_.find(edge_key(u, v));
  if (u == v || it == edges_.end()) {
    throw Error(ErrorCode::InconsistentDelete,
                "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                    ") absent from sparsified graph");
  }
  const EdgePos pos = it->second;
  edges_.erase(it);
  const std::uint32_t su = index_.at(u);
  const std::uint32_t sv = index_.at(v);
  const std::uint64_t du = slots_[su].nbrs.size();
  const std::uint64_t dv = slots_[sv].nbrs.size();
  remove_neighbor(su, pos.in_lo);
  remove_neighbor(sv, pos.in_hi);
  relocate(su, du);
  relocate(sv, dv);
}

std::optional<SampledTwoPath> SparsifiedGraph::sample(std::mt19937_64& rng) const {
  if (p2_total_ == 0) return std::nullopt;
  // Bucket i is chosen with weight |H_i| * (2^(i+1) - 1), so a candidate
  // vertex of bucket i survives the rejection step with probability
  // C(d, 2) / total_weight regardless of i.
  std::uint64_t weight = 0;
  for (std::size_t i = 1; i < shelves_.size(); ++i) {
    weight += shelves_[i].size() * ((std::uint64_t{1} << i) - 1);
  }
  SampledTwoPath out;
  for (;;) {
    ++out.attempts;
    std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, weight - 1)(rng);
    std::size_t shelf = 1;
    for (;;) {
      const std::uint64_t mass = shelves_[shelf].size() * ((std::uint64_t{1} << shelf) - 1);
      if (r < mass) break;
      r -= mass;
      ++shelf;
    }
    const auto& members = shelves_[shelf];
    const std::uint32_t s =
        members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
    const auto& slot = slots_[s];
    const std::uint64_t d = slot.nbrs.size();
    // Bucket i holds C(d, 2) in [2^i, 2^(i+1) - 1]; accept with
    // probability C(d, 2) / (2^(i+1) - 1) >= 1/2.
    const std::uint64_t bound = (std::uint64_t{1} << shelf) - 1;
    if (std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng) >= choose2(d)) {
      continue;
    }
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, d - 1)(rng);
    std::size_t b = std::uniform_int_distribution<std::size_t>(0, d - 2)(rng);
    if (b >= a) ++b;
    out.path = TwoPath::make(slot.nbrs[a], slot.id, slot.nbrs[b]);
    return out;
  }
}

void SparsifiedGraph::canonicalize() {
  for (auto& [v, s] : index_) {
    auto& nbrs = slots_[s].nbrs;
    std::sort(nbrs.begin(), nbrs.end());
    for (std::uint32_t i = 0; i < nbrs.size(); ++i) set_position(v, nbrs[i], i);
  }
  for (auto& shelf : shelves_) {
    std::sort(shelf.begin(), shelf.end(), [this](std::uint32_t a, std::uint32_t b) {
      return slots_[a].id < slots_[b].id;
    });
    for (std::uint32_t i = 0; i < shelf.size(); ++i) slots_[shelf[i]].pos = i;
  }
}

void SparsifiedGraph::audit() const {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::InvariantViolation, "sparsified graph audit: " + why);
  };
  std::uint64_t degree_sum = 0;
  std::vector<std::uint64_t> p2(bucket_p2_.size(), 0);
  for (const auto& [v, s] : index_) {
    if (s >= slots_.size()) fail("dangling slot index");
    const Slot& slot = slots_[s];
    if (slot.id != v) fail("slot id mismatch for vertex " + std::to_string(v));
    const std::uint64_t d = slot.nbrs.size();
    if (d == 0) fail("degree-0 vertex " + std::to_string(v) + " retained");
    const std::int32_t shelf = shelf_for_degree(d);
    if (slot.shelf != shelf) fail("vertex " + std::to_string(v) + " on wrong shelf");
    if (slot.pos >= shelves_[shelf].size() || shelves_[shelf][slot.pos] != s) {
      fail("shelf position of vertex " + std::to_string(v) + " is stale");
    }
    if (shelf > 0) p2[shelf] += choose2(d);
    degree_sum += d;
    for (std::uint32_t i = 0; i < d; ++i) {
      const VertexId w = slot.nbrs[i];
      auto it = edges_.find(edge_key(v, w));
      if (w == v || it == edges_.end()) fail("neighbor without edge record");
      const std::uint32_t recorded = v < w ? it->second.in_lo : it->second.in_hi;
      if (recorded != i) fail("edge position mismatch");
    }
  }
  if (degree_sum != 2 * edges_.size()) fail("degree sum differs from twice the edge count");
  std::size_t shelved = 0;
  for (const auto& shelf : shelves_) shelved += shelf.size();
  if (shelved != index_.size()) fail("shelf population differs from vertex count");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < p2.size(); ++i) {
    if (p2[i] != bucket_p2_[i]) fail("bucket " + std::to_string(i) + " 2-path total is stale");
    total += p2[i];
  }
  if (total != p2_total_) fail("global 2-path total is stale");
}

std::vector<VertexId> SparsifiedGraph::bucket_members(int bucket) const {
  const std::size_t shelf = static_cast<std::size_t>(bucket + 1);
  std::vector<VertexId> out;
  for (std::uint32_t s : shelves_.at(shelf)) out.push_back(slots_[s].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> SparsifiedGraph::bucket_of(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return slots_[it->second].shelf - 1;
}

std::uint32_t SparsifiedGraph::degree(VertexId v) const {
  auto it = index_.find(v);
  return it == index_.end() ? 0 : static_cast<std::uint32_t>(slots_[it->second].nbrs.size());
}

std::vector<VertexId> SparsifiedGraph::neighbors(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return {};
  return slots_[it->second].nbrs;
}

SortedAdjacency SparsifiedGraph::sorted_adjacency() const {
  std::vector<std::pair<VertexId, std::uint32_t>> order(index_.begin(), index_.end());
  std::sort(order.begin(), order.end());
  SortedAdjacency out;
  out.vertices.reserve(order.size());
  out.neighbors.reserve(order.size());
  for (const auto& [v, s] : order) {
    out.vertices.push_back(v);
    auto nbrs = slots_[s].nbrs;
    std::sort(nbrs.begin(), nbrs.end());
    out.neighbors.push_back(std::move(nbrs));
  }
  return out;
}

}  // namespace dyntri
