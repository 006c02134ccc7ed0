#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tc_atlas/algebra_io.hpp"
#include "tc_atlas/cover_tools.hpp"
#include "tc_atlas/errors.hpp"
#include "tc_atlas/harness.hpp"
#include "tc_atlas/report_format.hpp"
#include "tc_atlas/spaces.hpp"
#include "tc_atlas/sphere_planner.hpp"
#include "tc_atlas/torus_planner.hpp"

namespace py = pybind11;
using namespace tc_atlas;

namespace {

py::dict plan_dict(const PlannerOutput& out, int samples) {
  py::dict d;
  d["region"] = out.region;
  d["region_code"] = out.region_code;
  d["samples"] = out.path.sample(samples);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cup-length bounds and symmetric motion planners";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("bounds_json", [](const std::string& spec, bool certificates) {
    return report_to_json(bound_report(spec), certificates).dump();
  }, py::arg("spec"), py::arg("certificates") = false);

  m.def("table_csv", [](const std::vector<std::string>& specs) { return reports_to_csv(bound_table(specs)); },
        py::arg("specs"));

  m.def("default_suite", &default_suite);

  m.def("algebra_json", [](const std::string& spec) {
    return algebra_to_string(build_cohomology(parse_space(spec)));
  }, py::arg("spec"));

  m.def("cup_lengths", [](const std::string& algebra) {
    const auto a = algebra_from_string(algebra);
    if (!check_axioms(a).ok()) throw DomainError("algebra fails the axiom check");
    const auto sq = tensor_square(a);
    py::dict d;
    d["cl"] = cup_length(a, positive_part(a)).length;
    d["zdcl"] = cup_length(sq, diagonal_kernel(sq)).length;
    d["ncl"] = cup_length(sq, norm_subspace(sq)).length;
    return d;
  }, py::arg("algebra_json"));

  m.def("antipodalize", [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return antipodalize(sphere_point(a), sphere_point(b));
  }, py::arg("a"), py::arg("b"));

  m.def("sphere_plan", [](const Eigen::VectorXd& a, const Eigen::VectorXd& b, int samples) {
    const auto cfg = SphereConfig::standard(static_cast<int>(a.size()) - 1);
    return plan_dict(sphere_plan(cfg, sphere_point(a), sphere_point(b)), samples);
  }, py::arg("a"), py::arg("b"), py::arg("samples") = 101);

  m.def("torus_plan", [](const Eigen::VectorXd& a, const Eigen::VectorXd& b, int samples, bool midpoint_constant) {
    const Point ta = torus_point(a), tb = torus_point(b);
    if (midpoint_constant)
      return plan_dict(torus_midpoint_plan(TorusMidpointConfig::standard(static_cast<int>(a.size())), ta, tb), samples);
    return plan_dict(torus_symmetric_plan(ta, tb), samples);
  }, py::arg("a"), py::arg("b"), py::arg("samples") = 101, py::arg("midpoint_constant") = false);

  m.def("disjointify_index", [](const std::vector<double>& values) { return disjointify_index({values}); },
        py::arg("values"));

  m.def("verify_json", [](const std::string& name, int n, int pairs, std::uint64_t seed) {
    CheckConfig cfg;
    cfg.pairs = pairs;
    cfg.seed = seed;
    PlannerCheckReport rep;
    {
      py::gil_scoped_release release;
      rep = check_planner(planner_under_test(name, n), cfg);
    }
    return rep.to_json().dump();
  }, py::arg("planner"), py::arg("n") = 2, py::arg("pairs") = 10000, py::arg("seed") = 42);
}
