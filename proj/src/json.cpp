#include "dyntri/json.hpp"

namespace dyntri {

Json to_json(const TwoPath& p) { return Json::array({p.u, p.center, p.w}); }

Json to_json(const EstimatorConfig& cfg) {
  return Json{
      {"epsilon", cfg.epsilon},
      {"delta", cfg.delta},
      {"alpha_min", cfg.alpha_min},
      {"n", cfg.n},
      {"m_max", cfg.m_max},
      {"seed", cfg.seed},
      {"b", cfg.b},
      {"p", cfg.p},
      {"colors", cfg.colors},
      {"s", cfg.s},
      {"K", cfg.K},
      {"degenerate", cfg.degenerate},
      {"certify_unsparsified", cfg.certify_unsparsified},
  };
}

Json to_json(const CopyDiagnostics& d) {
  Json j{
      {"copy", d.copy},
      {"m_prime", d.m_prime},
      {"p2_total", d.p2_total},
      {"independent", d.independent},
      {"qualified", d.qualified},
  };
  j["indicator"] = d.indicator ? Json(*d.indicator) : Json(nullptr);
  j["sampled"] = d.sampled ? to_json(*d.sampled) : Json(nullptr);
  j["attempts"] = d.attempts;
  return j;
}

Json to_json(const Report& r) {
  Json diag = Json::array();
  for (const auto& d : r.diagnostics) diag.push_back(to_json(d));
  return Json{
      {"p2_hat", r.p2_hat},
      {"p2_raw", r.p2_raw},
      {"alpha_hat", r.alpha_hat},
      {"t3_hat", r.t3_hat},
      {"ell", r.ell},
      {"K", r.K},
      {"s", r.s},
      {"p", r.p},
      {"colors", r.colors},
      {"triangles_hit", r.triangles_hit},
      {"diagnostics", std::move(diag)},
      {"warnings", r.warnings},
  };
}

Json to_json(const GraphStats& s) {
  Json j{{"T3", s.T3}, {"P2", s.P2}};
  j["alpha"] = s.alpha ? Json(*s.alpha) : Json(nullptr);
  j["F2"] = s.F2;
  j["m"] = s.m;
  j["n_touched"] = s.n_touched;
  return j;
}

Json to_json(const LowerBoundReport& r) {
  Json j{
      {"vertices", r.vertices},
      {"edges", r.edges},
      {"bipartite", r.bipartite},
      {"greedy", r.greedy},
      {"spanning_tree", r.spanning_tree},
  };
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  j["witness"] = r.witness;
  j["witness_method"] = r.witness_method;
  j["bound_connected"] = r.bound_connected;
  j["bound_bipartite"] = r.bound_bipartite;
  j["bound_general"] = r.bound_general;
  j["connected_satisfied"] = r.connected_satisfied;
  j["bipartite_satisfied"] =
      r.bipartite_satisfied ? Json(*r.bipartite_satisfied) : Json(nullptr);
  j["general_satisfied"] = r.general_satisfied;
  j["violation"] = r.violation();
  return j;
}

Json to_json(const Error& e) {
  Json j{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  return j;
}

}  // namespace dyntri
