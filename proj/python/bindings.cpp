#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dyntri/doulion.hpp"
#include "dyntri/estimator.hpp"
#include "dyntri/f2_sketch.hpp"
#include "dyntri/generators.hpp"
#include "dyntri/indep_paths.hpp"
#include "dyntri/json.hpp"
#include "dyntri/oracles.hpp"
#include "dyntri/two_path.hpp"
#include "dyntri/version.hpp"

namespace py = pybind11;
using namespace dyntri;

namespace {

// Events cross the boundary as (u, v, sign) tuples with sign +1 or -1.
using PyEvent = std::tuple<std::int64_t, std::int64_t, int>;

std::vector<EdgeEvent> to_events(const std::vector<PyEvent>& raw, std::uint32_t n) {
  std::vector<EdgeEvent> out;
  out.reserve(raw.size());
  for (const auto& [u, v, s] : raw) {
    if (s != 1 && s != -1) throw Error(ErrorCode::ParseError, "sign must be +1 or -1");
    out.push_back(normalize_event(u, v, s == 1 ? Sign::Insert : Sign::Delete, n));
  }
  return out;
}

std::vector<PyEvent> from_events(const std::vector<EdgeEvent>& events) {
  std::vector<PyEvent> out;
  out.reserve(events.size());
  for (const auto& e : events) out.emplace_back(e.u, e.v, weight(e.sign));
  return out;
}

std::uint32_t infer_n(const std::vector<PyEvent>& raw, std::uint32_t n) {
  if (n != 0) return n;
  std::int64_t hi = 2;
  for (const auto& [u, v, s] : raw) hi = std::max({hi, u, v});
  if (hi > kMaxUniverse) throw Error(ErrorCode::OutOfUniverse, "vertex id exceeds the universe");
  return static_cast<std::uint32_t>(hi);
}

// nlohmann -> Python through the json module keeps the binding small.
py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<PyEvent> stream_of(const GeneratedGraph& g, double delete_fraction,
                               std::uint64_t seed) {
  return from_events(delete_fraction > 0.0 ? churn_stream(g, delete_fraction, seed)
                                           : insertion_stream(g));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Triangle counting over dynamic edge streams";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<Error> exc(m, "DyntriError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.what());
      PyErr_SetObject(exc.ptr(), args.ptr());
    }
  });

  m.def("parse_stream", [](const std::string& text, std::uint32_t n) {
    std::istringstream in(text);
    auto parsed = parse_stream(in, n);
    return py::make_tuple(from_events(parsed.events), parsed.n);
  }, py::arg("text"), py::arg("n") = 0,
     "Parse the `+ u v` / `- u v` text format. Returns (events, n).");

  m.def("exact_stats", [](const std::vector<PyEvent>& events, std::uint32_t n) {
    n = infer_n(events, n);
    const auto g = materialize(to_events(events, n), StreamConfig{n, UINT64_MAX});
    return to_python(to_json(exact_stats(g)));
  }, py::arg("events"), py::arg("n") = 0);

  m.def("estimate", [](const std::vector<PyEvent>& events, double epsilon, double delta,
                       double alpha_min, std::uint32_t n, std::uint64_t m_max,
                       std::uint64_t seed, std::optional<std::uint64_t> k_override,
                       std::optional<std::uint64_t> s_override,
                       std::optional<std::uint32_t> colors_override) {
    n = infer_n(events, n);
    const auto evs = to_events(events, n);
    if (m_max == 0) m_max = std::max<std::uint64_t>(1, peak_live_edges(evs, n));
    const auto cfg = derive_config(epsilon, delta, alpha_min, n, m_max, seed,
                                   ConfigOverrides{k_override, s_override, colors_override});
    Json j = to_json(run(evs, cfg));
    j["config"] = to_json(cfg);
    return to_python(j);
  }, py::arg("events"), py::arg("epsilon") = 0.3, py::arg("delta") = 0.1,
     py::arg("alpha_min") = 0.05, py::arg("n") = 0, py::arg("m_max") = 0,
     py::arg("seed") = 0, py::arg("k_override") = py::none(),
     py::arg("s_override") = py::none(), py::arg("colors_override") = py::none(),
     "Run the triangle estimator. n and m_max are inferred when 0.");

  m.def("doulion_estimate", [](const std::vector<PyEvent>& events, double p,
                               std::uint64_t seed, std::uint32_t n) {
    n = infer_n(events, n);
    return doulion_estimate(to_events(events, n), p, seed, n);
  }, py::arg("events"), py::arg("p"), py::arg("seed") = 0, py::arg("n") = 0);

  m.def("verify_lower_bounds", [](const std::vector<PyEvent>& events, std::uint32_t n) {
    n = infer_n(events, n);
    const auto g = materialize(to_events(events, n), StreamConfig{n, UINT64_MAX});
    return to_python(to_json(verify_lower_bounds(g)));
  }, py::arg("events"), py::arg("n") = 0);

  m.def("gen_complete", [](std::uint32_t k, double f, std::uint64_t seed) {
    return stream_of(complete_graph(k), f, seed);
  }, py::arg("k"), py::arg("delete_fraction") = 0.0, py::arg("seed") = 0);
  m.def("gen_gnp", [](std::uint32_t n, double q, double f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return stream_of(gnp(n, q, rng), f, seed);
  }, py::arg("n"), py::arg("q"), py::arg("delete_fraction") = 0.0, py::arg("seed") = 0);

  py::class_<F2Sketch>(m, "F2Sketch")
      .def(py::init<std::uint32_t, std::uint32_t, std::uint64_t>(),
           py::arg("rows"), py::arg("cols"), py::arg("seed"))
      .def_static("for_accuracy", &F2Sketch::for_accuracy,
                  py::arg("epsilon"), py::arg("delta"), py::arg("seed"))
      .def("update", [](F2Sketch& s, std::int64_t item, std::int64_t w) {
        if (item < 0 || item > kMaxUniverse) throw Error(ErrorCode::OutOfUniverse, "item out of range");
        s.update(static_cast<VertexId>(item), w);
      }, py::arg("item"), py::arg("weight"))
      .def("estimate", &F2Sketch::estimate)
      .def("merge", &F2Sketch::merge)
      .def("counters", [](const F2Sketch& s) {
        auto c = s.counters();
        return std::vector<std::int64_t>(c.begin(), c.end());
      })
      .def_property_readonly("rows", &F2Sketch::rows)
      .def_property_readonly("cols", &F2Sketch::cols)
      .def_property_readonly("seed", &F2Sketch::seed);

  py::class_<TwoPathEstimator>(m, "TwoPathEstimator")
      .def(py::init<double, double, std::uint64_t>(),
           py::arg("epsilon"), py::arg("delta"), py::arg("seed"))
      .def("update", [](TwoPathEstimator& t, std::int64_t u, std::int64_t v, int sign) {
        t.update(normalize_event(u, v, sign > 0 ? Sign::Insert : Sign::Delete, kMaxUniverse));
      }, py::arg("u"), py::arg("v"), py::arg("sign") = 1)
      .def("estimate", &TwoPathEstimator::estimate)
      .def_property_readonly("m_net", &TwoPathEstimator::m_net);
}
