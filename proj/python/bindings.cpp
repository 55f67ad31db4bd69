#include "laxmilgram/audit.hpp"
#include "laxmilgram/error.hpp"
#include "laxmilgram/fem1d.hpp"
#include "laxmilgram/operators.hpp"
#include "laxmilgram/projection.hpp"
#include "laxmilgram/solver.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace laxmilgram;

namespace {

py::dict minseq_dict(const MinSeqReport& r) {
  py::dict d;
  d["iterates"] = r.iterates;
  d["distances"] = r.distances;
  d["limit"] = r.limit;
  d["delta"] = r.delta;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compiled core of the laxmilgram package";

  // Errors surface as laxmilgram.errors.LaxMilgramError(code, message).
  static py::object error_type = py::module_::import("laxmilgram.errors").attr("LaxMilgramError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = error_type(to_string(e.code()), e.what());
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  py::class_<HilbertSpace>(m, "HilbertSpace")
      .def(py::init<Matrix>(), py::arg("gram"))
      .def_static("euclidean", &HilbertSpace::euclidean, py::arg("n"))
      .def_property_readonly("dim", &HilbertSpace::dim)
      .def_property_readonly("gram", &HilbertSpace::gram)
      .def_property_readonly("chol", &HilbertSpace::chol)
      .def("inner", &HilbertSpace::inner, py::arg("u"), py::arg("v"))
      .def("norm", &HilbertSpace::norm, py::arg("u"))
      .def("distance", &HilbertSpace::distance, py::arg("u"), py::arg("v"))
      .def("solve_gram", &HilbertSpace::solve_gram, py::arg("b"));

  py::class_<FormConstants>(m, "BilinearFormConstants")
      .def_readonly("continuity_C", &FormConstants::continuity_C)
      .def_readonly("coercivity_alpha", &FormConstants::coercivity_alpha);

  m.def("dual_norm", [](const HilbertSpace& s, const Vector& f) { return dual_norm(s, LinearForm{f}); },
        py::arg("space"), py::arg("f"));
  m.def(
      "sampled_sup_ratio",
      [](const HilbertSpace& s, const Vector& f, std::size_t n, std::uint64_t seed) {
        return sampled_sup_ratio(s, LinearForm{f}, n, seed);
      },
      py::arg("space"), py::arg("f"), py::arg("n_samples"), py::arg("seed") = 0);
  m.def(
      "continuity_constant",
      [](const HilbertSpace& s, const Matrix& a) { return continuity_constant(s, BilinearForm{a}); },
      py::arg("space"), py::arg("a"));
  m.def(
      "coercivity_constant",
      [](const HilbertSpace& s, const Matrix& a) { return coercivity_constant(s, BilinearForm{a}); },
      py::arg("space"), py::arg("a"));
  m.def("riesz", [](const HilbertSpace& s, const Vector& f) { return riesz(s, LinearForm{f}); },
        py::arg("space"), py::arg("f"));
  m.def(
      "riesz_constructive",
      [](const HilbertSpace& s, const Vector& f) { return riesz_constructive(s, LinearForm{f}); },
      py::arg("space"), py::arg("f"));
  m.def(
      "riesz_isometry_gap",
      [](const HilbertSpace& s, const Vector& f) { return riesz_isometry_gap(s, LinearForm{f}); },
      py::arg("space"), py::arg("f"));

  py::class_<Subspace>(m, "Subspace")
      .def(py::init<HilbertSpace, Matrix>(), py::arg("space"), py::arg("basis"),
           "basis holds one spanning vector per column")
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("basis", &Subspace::basis)
      .def_property_readonly("reduced_gram", &Subspace::reduced_gram)
      .def("lift", &Subspace::lift, py::arg("coords"));
  m.def("project", &project, py::arg("sub"), py::arg("u"));
  m.def("decompose", &decompose, py::arg("sub"), py::arg("u"));
  m.def(
      "project_minseq",
      [](const Subspace& sub, const Vector& u, double tol, std::size_t budget) {
        return minseq_dict(project_minseq(sub, u, tol, budget));
      },
      py::arg("sub"), py::arg("u"), py::arg("tol") = 1e-10, py::arg("step_budget") = 1'000'000);

  py::class_<VariationalProblem>(m, "VariationalProblem")
      .def_property_readonly("space", [](const VariationalProblem& p) { return p.space; })
      .def_property_readonly("a", [](const VariationalProblem& p) { return p.a.matrix; })
      .def_property_readonly("f", [](const VariationalProblem& p) { return p.f.covector; })
      .def_property_readonly("alpha", [](const VariationalProblem& p) { return p.constants.coercivity_alpha; })
      .def_property_readonly("C", [](const VariationalProblem& p) { return p.constants.continuity_C; });
  m.def(
      "make_problem",
      [](const Matrix& gram, const Matrix& a, const Vector& f, std::optional<double> alpha,
         std::optional<double> c) {
        return make_problem(HilbertSpace(gram), BilinearForm{a}, LinearForm{f}, alpha, c);
      },
      py::arg("gram"), py::arg("a"), py::arg("f"), py::arg("alpha") = py::none(), py::arg("C") = py::none());

  py::class_<RhoPolicy>(m, "RhoPolicy")
      .def_readonly("lower", &RhoPolicy::lower)
      .def_readonly("upper", &RhoPolicy::upper)
      .def_readonly("rho_star", &RhoPolicy::rho_star)
      .def_readonly("k_star", &RhoPolicy::k_star);
  m.def("rho_policy", &rho_policy, py::arg("alpha"), py::arg("C"));
  m.def("contraction_factor", &contraction_factor, py::arg("rho"), py::arg("alpha"), py::arg("C"));

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("solution", &SolveReport::solution)
      .def_readonly("rho", &SolveReport::rho)
      .def_readonly("contraction_k", &SolveReport::contraction_k)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("estimate_lhs", &SolveReport::estimate_lhs)
      .def_readonly("estimate_rhs", &SolveReport::estimate_rhs)
      .def_readonly("residual", &SolveReport::residual)
      .def_readonly("step_norms", &SolveReport::step_norms);
  m.def(
      "solve",
      [](const VariationalProblem& p, std::optional<double> rho, double tol, std::optional<std::size_t> max_iter,
         std::optional<Vector> x0) {
        SolveOptions o;
        o.rho = rho;
        o.tol = tol;
        o.max_iter = max_iter;
        o.x0 = std::move(x0);
        return solve(p, o);
      },
      py::arg("problem"), py::arg("rho") = py::none(), py::arg("tol") = 1e-10, py::arg("max_iter") = py::none(),
      py::arg("x0") = py::none());
  m.def("solve_direct", &solve_direct, py::arg("problem"));

  py::class_<GalerkinReport>(m, "GalerkinReport")
      .def_readonly("u_h", &GalerkinReport::u_h)
      .def_readonly("u", &GalerkinReport::u)
      .def_readonly("reduced", &GalerkinReport::reduced)
      .def_readonly("orthogonality_residual", &GalerkinReport::orthogonality_residual)
      .def_readonly("cea_constant", &GalerkinReport::cea_constant)
      .def_readonly("cea_floor", &GalerkinReport::cea_floor)
      .def_property_readonly("cea_checks",
                             [](const GalerkinReport& r) {
                               py::list out;
                               for (const auto& c : r.cea_checks) out.append(py::make_tuple(c.v_h, c.lhs, c.rhs));
                               return out;
                             })
      .def("cea_holds", &GalerkinReport::cea_holds);
  m.def(
      "galerkin_solve",
      [](const VariationalProblem& p, const Subspace& sub, std::size_t candidates, std::uint64_t seed, double tol) {
        GalerkinOptions o;
        o.cea_candidates = candidates;
        o.seed = seed;
        o.tol = tol;
        return galerkin_solve(p, sub, o);
      },
      py::arg("problem"), py::arg("sub"), py::arg("cea_candidates") = 20, py::arg("seed") = 0,
      py::arg("tol") = 1e-12);

  py::class_<fem1d::LevelResult>(m, "LevelResult")
      .def_readonly("n_cells", &fem1d::LevelResult::n_cells)
      .def_readonly("h", &fem1d::LevelResult::h)
      .def_readonly("h1_error", &fem1d::LevelResult::h1_error)
      .def_readonly("rate", &fem1d::LevelResult::rate)
      .def_readonly("nodal_error", &fem1d::LevelResult::nodal_error)
      .def_readonly("interpolant_error", &fem1d::LevelResult::interpolant_error)
      .def_readonly("alpha", &fem1d::LevelResult::alpha)
      .def_readonly("continuity", &fem1d::LevelResult::continuity)
      .def_readonly("contraction_k", &fem1d::LevelResult::contraction_k)
      .def_readonly("iterations", &fem1d::LevelResult::iterations);
  m.def("manufactured_case_ids", &fem1d::manufactured_case_ids);
  m.def("convergence_study", &fem1d::convergence_study, py::arg("case_id"), py::arg("levels"),
        py::arg("beta") = 0.0, py::arg("reaction") = 0.0, py::arg("tol") = 1e-12);
  m.def("nested_galerkin", &fem1d::nested_galerkin, py::arg("case_id"), py::arg("n_cells"),
        py::arg("refinement") = 4, py::arg("beta") = 0.0, py::arg("reaction") = 0.0);

  m.def(
      "run_audit",
      [](std::uint64_t seed) {
        py::list out;
        for (const auto& r : run_audit(seed)) {
          py::dict d;
          d["name"] = r.name;
          d["trials"] = r.trials;
          d["failures"] = r.failures;
          d["worst_excess"] = r.worst_excess;
          d["passed"] = r.passed();
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 0);
}
