#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "weylrestrict/errors.hpp"
#include "weylrestrict/geometry.hpp"
#include "weylrestrict/invariants.hpp"
#include "weylrestrict/propagation.hpp"
#include "weylrestrict/spectral.hpp"
#include "weylrestrict/suite.hpp"
#include "weylrestrict/weyl.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace wr;

namespace {

// Plain Python objects out of a JSON value; fractions stay "num/den" strings.
py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list l;
      for (const auto& x : j) l.append(to_py(x));
      return l;
    }
    case json::value_t::object: {
      py::dict d;
      for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = to_py(it.value());
      return d;
    }
    default: return py::none();
  }
}

CoordVector parse_point(const std::vector<std::string>& xs) {
  std::vector<Rational> v;
  for (const auto& s : xs) v.emplace_back(s);
  for (auto& q : v) q.canonicalize();
  return CoordVector(v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Restriction checks for classical root systems, Weyl groups and invariants";
  m.attr("SCHEMA") = kReportSchema;

  py::register_exception<RankError>(m, "RankError", PyExc_ValueError);
  py::register_exception<WeightError>(m, "WeightError", PyExc_ValueError);
  py::register_exception<UnknownCheckError>(m, "UnknownCheckError", PyExc_KeyError);

  m.def("root_system", [](const std::string& t, int rank, bool permissive) {
    return to_py(to_json(build_root_system(parse_type(t), rank, permissive)));
  }, py::arg("type"), py::arg("rank"), py::arg("permissive") = false);

  m.def("weyl_order", [](const std::string& t, int rank, bool extended) {
    return weyl_order(parse_type(t), rank, extended);
  }, py::arg("type"), py::arg("rank"), py::arg("extended") = false);

  m.def("check_restriction", [](const std::string& t, int n, int k, bool extended) {
    return to_py(to_json(check_restriction_theorem(parse_type(t), n, k, extended)));
  }, py::arg("type"), py::arg("n"), py::arg("k"), py::arg("extended") = false);

  m.def("invariants", [](const std::string& t, int rank) {
    return to_py(to_json(char_poly_family(parse_type(t), rank)));
  }, py::arg("type"), py::arg("rank"));

  m.def("check_invariants", [](const std::string& t, int n, int k) {
    return to_py(to_json(check_surjectivity(parse_type(t), n, k)));
  }, py::arg("type"), py::arg("n"), py::arg("k"));

  m.def("catalog", [] { return to_py(catalog_resource()); });
  m.def("catalog_lookup", [](const std::string& family, int p, int q) {
    return to_py(to_json(catalog_lookup(parse_family(family), p, q)));
  }, py::arg("family"), py::arg("p"), py::arg("q") = 0);

  m.def("class_one_weights", [](const std::string& t, int rank) {
    json out = json::array();
    for (const auto& x : class_one_weights(build_root_system(parse_type(t), rank, true))) out.push_back(to_json(x));
    return to_py(out);
  }, py::arg("type"), py::arg("rank"));

  m.def("injectivity_radius", [](const std::string& t, int rank) {
    return injectivity_radius(parse_type(t), rank).str();
  }, py::arg("type"), py::arg("rank"));

  m.def("omega_contains", [](const std::string& kind, const std::string& t, int rank,
                             const std::vector<std::string>& x) {
    OmegaKind k = kind == "omega_star" ? OmegaKind::OmegaStar : OmegaKind::Omega;
    return omega_membership(k, build_root_system(parse_type(t), rank, true), parse_point(x));
  }, py::arg("kind"), py::arg("type"), py::arg("rank"), py::arg("x"),
     "Membership of x (coordinates as fraction strings, in units of pi) in Omega or Omega*.");

  m.def("weyl_dim", [](const std::string& t, int rank, const std::vector<long>& labels) {
    RootSystem rs = build_root_system(parse_type(t), rank, true);
    return weyl_dim(rs, weight_from_labels(rs, labels));
  }, py::arg("type"), py::arg("rank"), py::arg("labels"));

  m.def("branch", [](const std::string& t, int n, int k, const std::vector<long>& labels) {
    PropagationPair pair = make_pair(parse_type(t), n, k);
    return to_py(to_json(branch(pair, weight_from_labels(pair.large, labels))));
  }, py::arg("type"), py::arg("n"), py::arg("k"), py::arg("labels"));

  m.def("verify", [](const std::string& filter, int max_rank, std::size_t samples, int trials, std::uint64_t seed,
                     std::optional<std::string> type, std::optional<int> n, std::optional<int> k,
                     std::optional<int> rank) {
    SuiteParams p;
    p.max_rank = max_rank;
    p.samples = samples;
    p.trials = trials;
    p.seed = seed;
    if (type) p.type = parse_type(*type);
    p.n = n;
    p.k = k;
    p.rank = rank;
    std::vector<VerificationReport> reports;
    {
      py::gil_scoped_release release;
      reports = run_suite(filter, p);
    }
    return to_py(suite_json(reports, p, "verify " + filter));
  }, py::arg("filter") = "*", py::arg("max_rank") = 4, py::arg("samples") = 1000, py::arg("trials") = 20,
     py::arg("seed") = 0, py::arg("type") = py::none(), py::arg("n") = py::none(), py::arg("k") = py::none(),
     py::arg("rank") = py::none(),
     "Run the checks whose id matches the '|' separated globs; returns the JSON report as a dict.");
}
