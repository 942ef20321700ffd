#include "dyntri/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "dyntri/doulion.hpp"
#include "dyntri/estimator.hpp"
#include "dyntri/generators.hpp"
#include "dyntri/hashing.hpp"
#include "dyntri/indep_paths.hpp"
#include "dyntri/json.hpp"
#include "dyntri/oracles.hpp"
#include "dyntri/version.hpp"

namespace dyntri {

namespace {

struct Options {
  std::string command;
  std::string input = "-";
  double epsilon = 0.3;
  double delta = 0.1;
  double alpha_min = 0.05;
  std::optional<std::uint32_t> n;
  std::optional<std::uint64_t> m_max;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> k_override;
  std::optional<std::uint64_t> s_override;
  std::optional<std::uint32_t> colors_override;
  bool certify_unsparsified = false;
  std::string format = "json";
  std::uint64_t trials = 1;
  std::optional<double> p;
  double delete_fraction = 0.0;
  std::optional<std::uint64_t> sweep;
  std::string family;
  std::vector<std::string> params;
};

/// Usage problems detected by the driver itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoQualifiedCopies:
      return kExitDegenerate;
    case ErrorCode::SeedMismatch:
    case ErrorCode::SketchOverflow:
    case ErrorCode::InconsistentDelete:
    case ErrorCode::InconsistentInsert:
    case ErrorCode::InvariantViolation:
    case ErrorCode::BudgetExceeded:
      return kExitInternal;
    default:
      return kExitInputError;
  }
}

Json flags_json(const Options& o) {
  Json j;
  j["input"] = o.input;
  if (o.command == "estimate") {
    j["epsilon"] = o.epsilon;
    j["delta"] = o.delta;
    j["alpha_min"] = o.alpha_min;
    j["n"] = o.n ? Json(*o.n) : Json(nullptr);
    j["m_max"] = o.m_max ? Json(*o.m_max) : Json(nullptr);
    j["k_override"] = o.k_override ? Json(*o.k_override) : Json(nullptr);
    j["s_override"] = o.s_override ? Json(*o.s_override) : Json(nullptr);
    j["colors_override"] = o.colors_override ? Json(*o.colors_override) : Json(nullptr);
    j["certify_unsparsified"] = o.certify_unsparsified;
  } else if (o.command == "exact") {
    j["n"] = o.n ? Json(*o.n) : Json(nullptr);
  } else if (o.command == "gen") {
    j.erase("input");
    j["family"] = o.family;
    j["params"] = o.params;
    j["delete_fraction"] = o.delete_fraction;
  } else if (o.command == "verify-lemmas") {
    j["sweep"] = o.sweep ? Json(*o.sweep) : Json(nullptr);
  } else if (o.command == "doulion") {
    j["p"] = o.p ? Json(*o.p) : Json(nullptr);
    j["trials"] = o.trials;
    j["n"] = o.n ? Json(*o.n) : Json(nullptr);
  }
  return j;
}

Json envelope(const Options& o) {
  return Json{{"command", o.command},
              {"version", std::string(kVersion)},
              {"seed", o.seed},
              {"config", flags_json(o)}};
}

void validate(const Options& o) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidRange, what); };
  if (o.format != "json" && o.format != "human") fail("--format must be json or human");
  if (o.n && (*o.n < 2 || *o.n > kMaxUniverse)) fail("--n must lie in [2, 2^31 - 2]");
  if (o.command == "estimate") {
    if (!(o.epsilon > 0.0 && o.epsilon <= 1.0)) fail("--epsilon must lie in (0, 1]");
    if (!(o.delta > 0.0 && o.delta < 1.0)) fail("--delta must lie in (0, 1)");
    if (!(o.alpha_min > 0.0 && o.alpha_min <= 1.0)) fail("--alpha-min must lie in (0, 1]");
    if (o.m_max && *o.m_max < 1) fail("--m-max must be at least 1");
    if (o.k_override && *o.k_override < 1) fail("--k-override must be at least 1");
    if (o.s_override && *o.s_override < 1) fail("--s-override must be at least 1");
    if (o.colors_override && *o.colors_override < 1) fail("--colors-override must be at least 1");
  }
  if (o.command == "doulion") {
    if (!o.p) fail("--p is required");
    if (!(*o.p > 0.0 && *o.p <= 1.0)) fail("--p must lie in (0, 1]");
    if (o.trials < 1) fail("--trials must be at least 1");
  }
  if (o.command == "gen") {
    if (!(o.delete_fraction >= 0.0 && o.delete_fraction < 1.0)) {
      fail("--delete-fraction must lie in [0, 1)");
    }
  }
  if (o.command == "verify-lemmas") {
    if (o.sweep && *o.sweep < 1) fail("--sweep must be at least 1");
  }
}

/// Re-labels an event-indexed error with the source line of that event.
Error at_line(const Error& err, const ParsedStream& s) {
  if (!err.position() || *err.position() >= s.lines.size()) return err;
  const std::size_t line = s.lines[*err.position()];
  std::string msg = err.what();
  if (msg.rfind("event ", 0) == 0) {
    if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
  }
  return Error(err.code(), "line " + std::to_string(line) + ": " + msg, line);
}

ParsedStream read_stream(const Options& o, std::istream& in) {
  ParsedStream s;
  if (o.input == "-") {
    s = parse_stream(in, o.n.value_or(0));
  } else {
    std::ifstream file(o.input);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open " + o.input);
    s = parse_stream(file, o.n.value_or(0));
  }
  if (s.events.empty()) throw Error(ErrorCode::EmptyStream, "empty stream");
  return s;
}

AdjacencyGraph materialize_checked(const ParsedStream& s, std::uint64_t cap) {
  try {
    return materialize(s.events, StreamConfig{s.n, cap});
  } catch (const Error& err) {
    throw at_line(err, s);
  }
}

Json cmd_estimate(const Options& o, std::istream& in) {
  const ParsedStream s = read_stream(o, in);
  // Full turnstile validation up front; the sparsifiers only see the
  // monochromatic part of the stream.
  const AdjacencyGraph final_graph = materialize_checked(s, o.m_max.value_or(UINT64_MAX));
  std::uint64_t m_max = 0;
  if (o.m_max) {
    m_max = *o.m_max;
  } else {
    m_max = std::max<std::uint64_t>(1, peak_live_edges(s.events, s.n));
  }
  (void)final_graph;
  EstimatorConfig cfg = derive_config(
      o.epsilon, o.delta, o.alpha_min, s.n, m_max, o.seed,
      ConfigOverrides{o.k_override, o.s_override, o.colors_override});
  cfg.certify_unsparsified = o.certify_unsparsified;
  const Report r = run(s.events, cfg);

  Json j = envelope(o);
  j["config"]["derived"] = to_json(cfg);
  j["events"] = s.events.size();
  const Json body = to_json(r);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

Json cmd_exact(const Options& o, std::istream& in) {
  const ParsedStream s = read_stream(o, in);
  const AdjacencyGraph g = materialize_checked(s, UINT64_MAX);
  Json j = envelope(o);
  j["events"] = s.events.size();
  const Json body = to_json(exact_stats(g));
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

std::uint32_t param_u32(const Options& o, std::size_t i, const char* name) {
  if (i >= o.params.size()) throw UsageError(std::string("gen ") + o.family + ": missing " + name);
  const std::string& tok = o.params[i];
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw UsageError(std::string("gen ") + o.family + ": " + name + " must be a non-negative integer");
  }
  return v;
}

double param_real(const Options& o, std::size_t i, const char* name) {
  if (i >= o.params.size()) throw UsageError(std::string("gen ") + o.family + ": missing " + name);
  const std::string& tok = o.params[i];
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used == tok.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("gen ") + o.family + ": " + name + " must be a number");
}

GeneratedGraph generate(const Options& o) {
  std::mt19937_64 rng(mix64(o.seed, 0x67656eULL));
  const std::string& f = o.family;
  std::size_t expected = 0;
  GeneratedGraph g;
  if (f == "complete") {
    expected = 1;
    g = complete_graph(param_u32(o, 0, "k"));
  } else if (f == "path") {
    expected = 1;
    g = path_graph(param_u32(o, 0, "k"));
  } else if (f == "star") {
    expected = 1;
    g = star_graph(param_u32(o, 0, "leaves"));
  } else if (f == "bipartite-complete") {
    expected = 2;
    g = complete_bipartite(param_u32(o, 0, "a"), param_u32(o, 1, "b"));
  } else if (f == "gnp") {
    expected = 2;
    g = gnp(param_u32(o, 0, "n"), param_real(o, 1, "q"), rng);
  } else if (f == "planted-triangles") {
    expected = 3;
    g = planted_triangles(param_u32(o, 0, "n"), param_u32(o, 1, "triangles"),
                          param_real(o, 2, "q"), rng);
  } else if (f == "tree") {
    expected = 1;
    g = random_tree(param_u32(o, 0, "n"), rng);
  } else if (f == "connected") {
    expected = 2;
    g = random_connected(param_u32(o, 0, "n"), param_real(o, 1, "q"), rng);
  } else if (f == "ring") {
    expected = 2;
    g = ring_lattice(param_u32(o, 0, "n"), param_u32(o, 1, "reach"));
  } else {
    throw UsageError("gen: unknown family '" + f +
                     "' (complete, path, star, bipartite-complete, gnp, "
                     "planted-triangles, tree, connected, ring)");
  }
  if (o.params.size() != expected) {
    throw UsageError("gen " + f + ": expected " + std::to_string(expected) + " parameters");
  }
  return g;
}

void cmd_gen(const Options& o, std::ostream& out) {
  const GeneratedGraph g = generate(o);
  const auto events = o.delete_fraction > 0.0 ? churn_stream(g, o.delete_fraction, o.seed)
                                              : insertion_stream(g);
  write_stream(out, events);
}

Json cmd_verify(const Options& o, std::istream& in) {
  Json j = envelope(o);
  if (!o.sweep) {
    const ParsedStream s = read_stream(o, in);
    const AdjacencyGraph g = materialize_checked(s, UINT64_MAX);
    const Json body = to_json(verify_lower_bounds(g));
    for (const auto& [key, value] : body.items()) j[key] = value;
    return j;
  }
  std::uint64_t violations = 0, trees = 0, bipartite = 0, exact = 0;
  Json violating = Json::array();
  for (std::uint64_t i = 0; i < *o.sweep; ++i) {
    std::mt19937_64 rng(mix64(o.seed, i));
    const auto n = std::uniform_int_distribution<std::uint32_t>(3, 40)(rng);
    const double q = std::uniform_real_distribution<double>(0.0, 0.25)(rng);
    const GeneratedGraph gg = random_connected(n, q, rng);
    const AdjacencyGraph g = materialize(insertion_stream(gg), StreamConfig{n, UINT64_MAX});
    const LowerBoundReport r = verify_lower_bounds(g);
    trees += r.edges + 1 == r.vertices;
    bipartite += r.bipartite;
    exact += r.exact.has_value();
    if (r.violation()) {
      ++violations;
      Json v = to_json(r);
      v["fixture"] = i;
      violating.push_back(std::move(v));
    }
  }
  j["fixtures"] = *o.sweep;
  j["trees"] = trees;
  j["bipartite"] = bipartite;
  j["exact_checked"] = exact;
  j["violations"] = violations;
  j["violating"] = std::move(violating);
  return j;
}

Json cmd_doulion(const Options& o, std::istream& in) {
  const ParsedStream s = read_stream(o, in);
  materialize_checked(s, UINT64_MAX);
  std::vector<double> estimates;
  estimates.reserve(o.trials);
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const std::uint64_t seed = o.trials == 1 ? o.seed : mix64(o.seed, t);
    estimates.push_back(doulion_estimate(s.events, *o.p, seed, s.n));
  }
  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= static_cast<double>(estimates.size());
  double var = 0.0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  var = estimates.size() > 1 ? var / static_cast<double>(estimates.size() - 1) : 0.0;

  Json j = envelope(o);
  j["events"] = s.events.size();
  j["estimate"] = mean;
  j["trials"] = o.trials;
  j["std_error"] = std::sqrt(var / static_cast<double>(estimates.size()));
  j["min"] = *std::min_element(estimates.begin(), estimates.end());
  j["max"] = *std::max_element(estimates.begin(), estimates.end());
  return j;
}

void print_human(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      print_human(value, out, indent + 1);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ": " << value.size() << " entries\n";
    } else if (value.is_string()) {
      out << pad << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << pad << key << ": " << value.dump() << '\n';
    }
  }
}

void emit(const Options& o, const Json& j, std::ostream& out) {
  if (o.format == "human") {
    print_human(j, out, 0);
  } else {
    out << j.dump(2) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Triangle counting over dynamic edge streams", "dyntri"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kVersion));

  app.add_option("--epsilon", o.epsilon, "Accuracy parameter in (0, 1]");
  app.add_option("--delta", o.delta, "Failure probability in (0, 1)");
  app.add_option("--alpha-min", o.alpha_min, "Lower bound on transitivity");
  app.add_option("--n", o.n, "Vertex universe [1, n]; inferred when omitted");
  app.add_option("--m-max", o.m_max, "Live edge bound; inferred when omitted");
  app.add_option("--seed", o.seed, "Master seed");
  app.add_option("--k-override", o.k_override, "Number of sparsifier copies");
  app.add_option("--s-override", o.s_override, "Independent 2-path threshold");
  app.add_option("--colors-override", o.colors_override, "Number of colors");
  app.add_flag("--certify-unsparsified", o.certify_unsparsified,
               "Apply the threshold even with a single color");
  app.add_option("--format", o.format, "json or human");
  app.add_option("--trials", o.trials, "Doulion trials");
  app.add_option("--p", o.p, "Doulion retention probability");
  app.add_option("--delete-fraction", o.delete_fraction, "Churn fraction for gen");
  app.add_option("--sweep", o.sweep, "Random connected fixtures to check");

  auto* estimate = app.add_subcommand("estimate", "Estimate triangles of the final graph");
  auto* exact = app.add_subcommand("exact", "Exact statistics of the final graph");
  auto* gen = app.add_subcommand("gen", "Write a synthetic stream");
  auto* verify = app.add_subcommand("verify-lemmas", "Check independent 2-path lower bounds");
  auto* doulion = app.add_subcommand("doulion", "Doulion baseline estimate");
  for (auto* sub : {estimate, exact, verify, doulion}) {
    sub->fallthrough();
    sub->add_option("input", o.input, "Stream file, - for stdin");
  }
  gen->fallthrough();
  gen->add_option("family", o.family, "Graph family")->required();
  gen->add_option("params", o.params, "Family parameters");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Json j{{"command", nullptr},
           {"version", std::string(kVersion)},
           {"error", {{"code", "UsageError"}, {"message", e.what()}}}};
    out << j.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  for (auto* sub : app.get_subcommands()) o.command = sub->get_name();

  try {
    validate(o);
    if (o.command == "gen") {
      cmd_gen(o, out);
    } else if (o.command == "estimate") {
      emit(o, cmd_estimate(o, in), out);
    } else if (o.command == "exact") {
      emit(o, cmd_exact(o, in), out);
    } else if (o.command == "verify-lemmas") {
      emit(o, cmd_verify(o, in), out);
    } else {
      emit(o, cmd_doulion(o, in), out);
    }
    return kExitOk;
  } catch (const Error& e) {
    Json j = envelope(o);
    j["error"] = to_json(e);
    if (e.position()) j["error"]["line"] = *e.position();
    out << j.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    Json j = envelope(o);
    j["error"] = {{"code", "UsageError"}, {"message", e.what()}};
    out << j.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    Json j = envelope(o);
    j["error"] = {{"code", "Internal"}, {"message", e.what()}};
    out << j.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace dyntri
