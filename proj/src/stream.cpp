#include "dyntri/stream.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace dyntri {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::OutOfUniverse: return "OutOfUniverse";
    case ErrorCode::DuplicateInsert: return "DuplicateInsert";
    case ErrorCode::DeleteAbsent: return "DeleteAbsent";
    case ErrorCode::OverCapacity: return "OverCapacity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyStream: return "EmptyStream";
    case ErrorCode::NoTwoPaths: return "NoTwoPaths";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::HasIsolatedEdges: return "HasIsolatedEdges";
    case ErrorCode::SeedMismatch: return "SeedMismatch";
    case ErrorCode::SketchOverflow: return "SketchOverflow";
    case ErrorCode::InconsistentDelete: return "InconsistentDelete";
    case ErrorCode::InconsistentInsert: return "InconsistentInsert";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::NoQualifiedCopies: return "NoQualifiedCopies";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

void StreamConfig::validate() const {
  if (n < 2 || n > kMaxUniverse) {
    throw Error(ErrorCode::InvalidRange,
                "universe size n must lie in [2, " +
                    std::to_string(kMaxUniverse) + "], got " +
                    std::to_string(n));
  }
  if (m_max < 1) {
    throw Error(ErrorCode::InvalidRange, "m_max must be at least 1");
  }
}

EdgeEvent normalize_event(std::int64_t u_raw, std::int64_t v_raw, Sign sign,
                          std::uint32_t n) {
  auto in_universe = [n](std::int64_t x) { return x >= 1 && x <= n; };
  if (u_raw == v_raw) {
    throw Error(ErrorCode::LoopEdge,
                "self-loop on vertex " + std::to_string(u_raw));
  }
  if (!in_universe(u_raw) || !in_universe(v_raw)) {
    throw Error(ErrorCode::OutOfUniverse,
                "edge (" + std::to_string(u_raw) + ", " +
                    std::to_string(v_raw) + ") outside universe [1, " +
                    std::to_string(n) + "]");
  }
  auto u = static_cast<VertexId>(std::min(u_raw, v_raw));
  auto v = static_cast<VertexId>(std::max(u_raw, v_raw));
  return EdgeEvent{u, v, sign};
}

AdjacencyGraph::AdjacencyGraph(StreamConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  adj_.resize(std::size_t{cfg_.n} + 1);
}

void AdjacencyGraph::apply(const EdgeEvent& e) {
  if (e.u == e.v) {
    throw Error(ErrorCode::LoopEdge, "self-loop on vertex " + std::to_string(e.u));
  }
  if (e.u < 1 || e.v < 1 || e.u > cfg_.n || e.v > cfg_.n) {
    throw Error(ErrorCode::OutOfUniverse, "edge endpoint outside universe");
  }
  const std::string name =
      "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
  if (e.sign == Sign::Insert) {
    if (adj_[e.u].contains(e.v)) {
      throw Error(ErrorCode::DuplicateInsert, "edge " + name + " is already live");
    }
    if (m_live_ + 1 > cfg_.m_max) {
      throw Error(ErrorCode::OverCapacity,
                  "inserting " + name + " exceeds m_max = " +
                      std::to_string(cfg_.m_max));
    }
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
    ++m_live_;
  } else {
    if (!adj_[e.u].contains(e.v)) {
      throw Error(ErrorCode::DeleteAbsent, "deleting edge " + name + " which is not live");
    }
    adj_[e.u].erase(e.v);
    adj_[e.v].erase(e.u);
    --m_live_;
  }
}

bool AdjacencyGraph::has_edge(VertexId u, VertexId v) const {
  if (u == 0 || v == 0 || u > cfg_.n || v > cfg_.n) return false;
  return adj_[u].contains(v);
}

std::vector<VertexId> AdjacencyGraph::sorted_neighbors(VertexId v) const {
  const auto& set = adj_.at(v);
  std::vector<VertexId> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> AdjacencyGraph::touched_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= cfg_.n; ++v) {
    if (!adj_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> AdjacencyGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(m_live_);
  for (VertexId u = 1; u <= cfg_.n; ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SortedAdjacency AdjacencyGraph::sorted_adjacency() const {
  SortedAdjacency out;
  for (VertexId v = 1; v <= cfg_.n; ++v) {
    if (adj_[v].empty()) continue;
    out.vertices.push_back(v);
    out.neighbors.push_back(sorted_neighbors(v));
  }
  return out;
}

bool AdjacencyGraph::operator==(const AdjacencyGraph& other) const {
  return cfg_.n == other.cfg_.n && m_live_ == other.m_live_ &&
         adj_ == other.adj_;
}

AdjacencyGraph materialize(std::span<const EdgeEvent> stream,
                           StreamConfig cfg) {
  AdjacencyGraph g(cfg);
  for (std::size_t i = 0; i < stream.size(); ++i) {
    try {
      g.apply(stream[i]);
    } catch (const Error& err) {
      throw Error(err.code(),
                  "event " + std::to_string(i) + ": " + err.what(), i);
    }
  }
  return g;
}

std::uint64_t peak_live_edges(std::span<const EdgeEvent> stream,
                              std::uint32_t n) {
  AdjacencyGraph g(StreamConfig{n, UINT64_MAX});
  std::uint64_t peak = 0;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    try {
      g.apply(stream[i]);
    } catch (const Error& err) {
      throw Error(err.code(),
                  "event " + std::to_string(i) + ": " + err.what(), i);
    }
    peak = std::max(peak, g.edge_count());
  }
  return peak;
}

namespace {

bool parse_id(std::string_view tok, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

std::vector<RawEvent> parse_stream_text(std::istream& in) {
  std::vector<RawEvent> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string op;
    if (!(tokens >> op) || op.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::ParseError,
                   "line " + std::to_string(line_no) + ": " + why, line_no);
    };
    RawEvent ev;
    ev.line = line_no;
    if (op == "+") {
      ev.sign = Sign::Insert;
    } else if (op == "-") {
      ev.sign = Sign::Delete;
    } else {
      throw fail("expected '+' or '-', got '" + op + "'");
    }
    std::string a, b, extra;
    if (!(tokens >> a >> b)) throw fail("expected two vertex ids");
    if (tokens >> extra) throw fail("trailing token '" + extra + "'");
    if (!parse_id(a, ev.u) || !parse_id(b, ev.v)) {
      throw fail("vertex ids must be decimal integers");
    }
    out.push_back(ev);
  }
  return out;
}

ParsedStream parse_stream(std::istream& in, std::uint32_t n) {
  auto raw = parse_stream_text(in);
  ParsedStream out;
  if (n == 0) {
    std::int64_t max_id = 2;
    for (const auto& r : raw) max_id = std::max({max_id, r.u, r.v});
    if (max_id > kMaxUniverse) {
      throw Error(ErrorCode::OutOfUniverse,
                  "vertex id " + std::to_string(max_id) + " exceeds the supported universe");
    }
    n = static_cast<std::uint32_t>(max_id);
  }
  out.n = n;
  out.events.reserve(raw.size());
  out.lines.reserve(raw.size());
  for (const auto& r : raw) {
    try {
      out.events.push_back(normalize_event(r.u, r.v, r.sign, n));
    } catch (const Error& err) {
      throw Error(err.code(),
                  "line " + std::to_string(r.line) + ": " + err.what(), r.line);
    }
    out.lines.push_back(r.line);
  }
  return out;
}

void write_stream(std::ostream& out, std::span<const EdgeEvent> events) {
  for (const auto& e : events) {
    out << (e.sign == Sign::Insert ? '+' : '-') << ' ' << e.u << ' ' << e.v
        << '\n';
  }
}

}  // namespace dyntri
