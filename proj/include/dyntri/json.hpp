#pragma once

#include <nlohmann/json.hpp>

#include "dyntri/estimator.hpp"
#include "dyntri/indep_paths.hpp"
#include "dyntri/oracles.hpp"

namespace dyntri {

// Insertion-ordered so that output layout is stable and readable.
using Json = nlohmann::ordered_json;

Json to_json(const TwoPath& p);
Json to_json(const EstimatorConfig& cfg);
Json to_json(const CopyDiagnostics& d);
Json to_json(const Report& r);
Json to_json(const GraphStats& s);
Json to_json(const LowerBoundReport& r);
Json to_json(const Error& e);

}  // namespace dyntri
