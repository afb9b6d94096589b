#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mycubic/closed_form.hpp"
#include "mycubic/fixed_point.hpp"
#include "mycubic/hypergeom.hpp"
#include "mycubic/oracle.hpp"
#include "mycubic/solver.hpp"
#include "mycubic/verify.hpp"

namespace py = pybind11;
using namespace mycubic;

namespace {

std::string repr_eval(const EvalResult& r) {
    std::ostringstream os;
    os.precision(17);
    os << "EvalResult(x=" << r.x << ", value=" << r.value
       << ", method='" << method_name(r.method) << "', iterations=" << r.iterations
       << ", error_bound=" << r.error_bound << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(mycubic, m) {
    m.doc() = "MY function numerics: the inverse of (z^3+z^2)/2 on the nonnegative "
              "reals, by closed form, certified fixed-point iteration and "
              "hypergeometric series, with cubic equation solving on top";

    py::enum_<Scenario>(m, "Scenario")
        .value("UniqueAboveMax", Scenario::UniqueAboveMax)
        .value("UniqueNegative", Scenario::UniqueNegative)
        .value("ThreeReal", Scenario::ThreeReal);

    py::enum_<Method>(m, "Method")
        .value("ClosedRadical", Method::ClosedRadical)
        .value("ClosedTrig", Method::ClosedTrig)
        .value("FixedPoint", Method::FixedPoint)
        .value("Hypergeometric", Method::Hypergeometric)
        .value("Oracle", Method::Oracle);

    py::enum_<RootKind>(m, "RootKind")
        .value("OneReal", RootKind::OneReal)
        .value("ThreeReal", RootKind::ThreeReal);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("x", &EvalResult::x)
        .def_readonly("value", &EvalResult::value)
        .def_readonly("method", &EvalResult::method)
        .def_readonly("iterations", &EvalResult::iterations)
        .def_readonly("error_bound", &EvalResult::error_bound)
        .def("__repr__", &repr_eval);

    py::class_<CanonicalRoots>(m, "CanonicalRoots")
        .def_readonly("scenario", &CanonicalRoots::scenario)
        .def_readonly("roots", &CanonicalRoots::roots)
        .def_readonly("multiplicity", &CanonicalRoots::multiplicity);

    py::class_<IterationRow>(m, "IterationRow")
        .def_readonly("n", &IterationRow::n)
        .def_readonly("value", &IterationRow::value)
        .def_readonly("abs_err", &IterationRow::abs_err)
        .def_readonly("rel_err", &IterationRow::rel_err);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("x", &IterationTrace::x)
        .def_readonly("reference", &IterationTrace::reference)
        .def_readonly("rows", &IterationTrace::rows);

    py::class_<ConvergenceConstants>(m, "ConvergenceConstants")
        .def_readonly("C0", &ConvergenceConstants::C0)
        .def_readonly("C0_rel", &ConvergenceConstants::C0_rel)
        .def_readonly("C1", &ConvergenceConstants::C1)
        .def_readonly("C2", &ConvergenceConstants::C2)
        .def_readonly("K", &ConvergenceConstants::K)
        .def_readonly("v0", &ConvergenceConstants::v0)
        .def_readonly("z_star", &ConvergenceConstants::z_star);

    py::class_<DepressedCubic>(m, "DepressedCubic")
        .def(py::init<double, double>(), py::arg("p"), py::arg("q"))
        .def_readwrite("p", &DepressedCubic::p)
        .def_readwrite("q", &DepressedCubic::q);

    py::class_<GeneralCubic>(m, "GeneralCubic")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"),
             py::arg("c"), py::arg("d"))
        .def_readwrite("a", &GeneralCubic::a)
        .def_readwrite("b", &GeneralCubic::b)
        .def_readwrite("c", &GeneralCubic::c)
        .def_readwrite("d", &GeneralCubic::d);

    py::class_<RootSet>(m, "RootSet")
        .def_readonly("kind", &RootSet::kind)
        .def_readonly("roots", &RootSet::roots)
        .def_readonly("multiplicity", &RootSet::multiplicity)
        .def_readonly("case_id", &RootSet::case_id)
        .def_readonly("method_detail", &RootSet::method_detail);

    // canonical
    m.def("f_canonical", &f_canonical, py::arg("z"), "(z^3 + z^2)/2");
    m.def("classify_target", &classify_target, py::arg("x"));
    m.def("reflect", &reflect, py::arg("z"), "-2/3 - z");
    m.def("xi_value", [](double p, double q) { return xi(DepressedCubic{p, q}).value; },
          py::arg("p"), py::arg("q"), "(3q/2p)*sqrt(-3/p) for p < 0");

    // closed form
    m.def("my", &my, py::arg("x"), "MY(x), closed form");
    m.def("my_closed", &my_closed, py::arg("x"));
    m.def("my_radical_alt", &my_radical_alt, py::arg("x"));
    m.def("my_derivative", &my_derivative, py::arg("x"));
    m.def("my_antiderivative", &my_antiderivative, py::arg("x"));
    m.def("bounds", &bounds, py::arg("x"), "(lower, upper) envelope of MY");
    m.def("canonical_roots", &canonical_roots, py::arg("x"));
    m.def("companion_roots", &companion_roots, py::arg("z1"));

    // fixed point
    m.def("fixed_point_map", &fixed_point_map, py::arg("x"), py::arg("y"));
    m.def("fixed_point_map_dy", &fixed_point_map_dy, py::arg("x"), py::arg("y"));
    m.def("my_seed", &my_seed, py::arg("x"));
    m.def("my_iterated", &my_iterated, py::arg("x"), py::arg("n"));
    m.def("iterate", &iterate, py::arg("x"), py::arg("n"));
    m.def("my_fixed", &my_fixed, py::arg("x"), py::arg("tol"));
    m.def("convergence_constants", &convergence_constants);

    // hypergeometric
    m.def("gauss_2f1",
          [](double a, double b, double c, double z, long max_terms, double target_tol) {
              HypergeometricSpec s;
              s.a = a;
              s.b = b;
              s.c = c;
              s.z = z;
              s.max_terms = max_terms;
              s.target_tol = target_tol;
              const SeriesSum sum = gauss_2f1(s);
              return py::make_tuple(sum.value, sum.terms, sum.achieved_tol);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"),
          py::arg("max_terms") = 20000, py::arg("target_tol") = 1e-12,
          "(value, terms, achieved_tol)");
    m.def("my_hyper", &my_hyper, py::arg("x"));

    // solver
    m.def("solve_depressed",
          [](double p, double q) { return solve_depressed(DepressedCubic{p, q}); },
          py::arg("p"), py::arg("q"));
    m.def("solve_general",
          [](double a, double b, double c, double d) {
              return solve_general(GeneralCubic{a, b, c, d});
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
    m.def("solve_depressed_iterative",
          [](double p, double q, int n) {
              return solve_depressed_iterative(DepressedCubic{p, q}, n);
          },
          py::arg("p"), py::arg("q"), py::arg("n"));
    m.def("roots_transform1",
          [](double p, double q) { return roots_transform1(DepressedCubic{p, q}); },
          py::arg("p"), py::arg("q"));
    m.def("roots_transform2",
          [](double p, double q) { return roots_transform2(DepressedCubic{p, q}); },
          py::arg("p"), py::arg("q"));
    m.def("viete_trig_roots",
          [](double p, double q) { return viete_trig_roots(DepressedCubic{p, q}); },
          py::arg("p"), py::arg("q"));

    // oracle
    m.def("my_bisect", &my_bisect, py::arg("x"), py::arg("tol") = 1e-13);
    m.def("canonical_roots_bisect", &canonical_roots_bisect, py::arg("x"),
          py::arg("tol") = 1e-13);

    // verify
    m.def("run_verify",
          [](long grid_points, double x_min, double x_max, std::uint64_t seed) {
              VerifyOptions o;
              o.grid_points = grid_points;
              o.x_min = x_min;
              o.x_max = x_max;
              o.seed = seed;
              py::list out;
              for (const CheckResult& c : run_verify(o)) {
                  py::dict d;
                  d["name"] = c.name;
                  d["passed"] = c.passed;
                  d["samples"] = c.samples;
                  d["failure"] = c.failure;
                  out.append(d);
              }
              return out;
          },
          py::arg("grid_points") = 1000, py::arg("x_min") = 1e-6, py::arg("x_max") = 1e6,
          py::arg("seed") = 42);
}
