// Python surface of the splitgeom core: the split-quaternion algebra, the
// flat-model invariants, the pseudo-sphere verification suites, and the
// Nahm-Schmid integrator with its degeneracy indicators.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "splitgeom/errors.hpp"
#include "splitgeom/nahm.hpp"
#include "splitgeom/suites.hpp"
#include "splitgeom/version.hpp"

namespace py = pybind11;
using namespace splitgeom;

namespace {

std::vector<std::vector<double>> matrix_to_lists(const Matrix& m) {
  std::vector<std::vector<double>> out(m.n(), std::vector<double>(m.n()));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out[i][j] = m(i, j);
  return out;
}

py::dict suite_to_dict(const SuiteReport& rep) {
  py::dict d;
  d["suite"] = rep.suite;
  d["pass"] = rep.pass();
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict cd;
    cd["name"] = c.name;
    cd["residual"] = c.residual;
    cd["tolerance"] = c.tolerance;
    cd["pass"] = c.pass;
    checks.append(cd);
  }
  d["checks"] = checks;
  return d;
}

py::dict calibration_to_dict(const Calibration& cal) {
  py::dict d;
  d["sign_table"] = cal.table.sigma;
  d["bracket_sign"] = cal.bracket_sign;
  d["moment_sign"] = cal.moment_sign;
  d["metric_eps"] = cal.metric_eps;
  d["potential_factor"] = cal.potential_factor;
  d["deta_factor"] = cal.deta_factor;
  d["normality_eps"] = cal.normality_eps;
  return d;
}

struct PyTrajectory {
  std::shared_ptr<LieAlgebra> algebra;
  NahmTrajectory traj;

  PyTrajectory(std::shared_ptr<LieAlgebra> g, NahmTrajectory t)
      : algebra(std::move(g)), traj(std::move(t)) {
    traj.algebra = algebra.get();
  }
};

LieVector as_lievector(const LieAlgebra& g, const std::vector<double>& v, const char* name) {
  if (static_cast<int>(v.size()) != g.dim())
    throw std::invalid_argument(std::string(name) + ": wrong length");
  return v;
}

}  // namespace

PYBIND11_MODULE(_splitgeom, m) {
  m.doc() = "split-quaternion geometry, hypersymplectic flat-model invariants, "
            "split 3-Sasakian verification and Nahm-Schmid dynamics";
  m.attr("__version__") = SPLITGEOM_VERSION;

  py::register_exception<NullDivisorError>(m, "NullDivisorError");
  py::register_exception<NotUnitError>(m, "NotUnitError");
  py::register_exception<NullDirectionError>(m, "NullDirectionError");
  py::register_exception<UnsupportedError>(m, "UnsupportedError");
  py::register_exception<IntegrationBlowupError>(m, "IntegrationBlowupError");

  py::class_<SplitQuaternion>(m, "SplitQuaternion")
      .def(py::init<double, double, double, double>(), py::arg("w") = 0.0, py::arg("x") = 0.0,
           py::arg("y") = 0.0, py::arg("z") = 0.0)
      .def_readwrite("w", &SplitQuaternion::w)
      .def_readwrite("x", &SplitQuaternion::x)
      .def_readwrite("y", &SplitQuaternion::y)
      .def_readwrite("z", &SplitQuaternion::z)
      .def("__mul__", [](const SplitQuaternion& p, const SplitQuaternion& q) { return mul(p, q); })
      .def("__add__", [](const SplitQuaternion& p, const SplitQuaternion& q) { return p + q; })
      .def("__sub__", [](const SplitQuaternion& p, const SplitQuaternion& q) { return p - q; })
      .def("__neg__", [](const SplitQuaternion& p) { return -p; })
      .def("conj", [](const SplitQuaternion& p) { return conj(p); })
      .def("norm_sq", [](const SplitQuaternion& p) { return norm_sq(p); })
      .def("inverse", [](const SplitQuaternion& p) { return inverse(p); })
      .def("__repr__", [](const SplitQuaternion& p) {
        return "SplitQuaternion(" + format_double(p.w) + ", " + format_double(p.x) + ", " +
               format_double(p.y) + ", " + format_double(p.z) + ")";
      });

  py::class_<ImSplit>(m, "ImSplit")
      .def(py::init<double, double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0,
           py::arg("z") = 0.0)
      .def_readwrite("x", &ImSplit::x)
      .def_readwrite("y", &ImSplit::y)
      .def_readwrite("z", &ImSplit::z)
      .def("norm_sq", [](const ImSplit& v) { return norm_sq(v); })
      .def("embed", &ImSplit::embed)
      .def("__repr__", [](const ImSplit& v) {
        return "ImSplit(" + format_double(v.x) + ", " + format_double(v.y) + ", " +
               format_double(v.z) + ")";
      });

  m.def("mul", [](const SplitQuaternion& p, const SplitQuaternion& q) { return mul(p, q); });
  m.def("inner",
        [](const SplitQuaternion& p, const SplitQuaternion& q) { return inner(p, q); });
  m.def("classify", [](const ImSplit& v) {
    switch (classify(v)) {
      case Causal::Spacelike: return "spacelike";
      case Causal::Timelike: return "timelike";
      default: return "null";
    }
  });
  m.def("exp_im", &exp_im);
  m.def("adjoint_matrix", [](const SplitQuaternion& q) { return matrix_to_lists(adjoint_matrix(q)); });
  m.def("random_unit", [](std::uint64_t seed) {
    Rng rng(seed);
    return random_unit(rng);
  });

  m.def("calibration", [] { return calibration_to_dict(calibration()); },
        "constants fixed by the sign-table calibration run");

  // --- flat model -----------------------------------------------------------
  m.def("metric", [](const BVector& a, const BVector& b) { return metric(a, b); });
  m.def("lambda_apply", [](const ImSplit& xi, const BVector& a) {
    return lambda_apply(xi, a, calibration().table);
  });
  m.def("omega", [](const ImSplit& xi, const BVector& X, const BVector& Y) {
    return omega(xi, X, Y, calibration().table);
  });
  m.def("fundamental_field", &fundamental_field);
  m.def("euler", [](const BVector& h) { return euler(FlatPoint(h), calibration().table); });
  m.def("rho", [](const BVector& h) {
    RhoParts r = rho(FlatPoint(h), calibration().table);
    py::dict d;
    d["rho0"] = r.rho0;
    d["rho1"] = std::vector<double>{r.rho1.x, r.rho1.y, r.rho1.z};
    d["rho2"] = matrix_to_lists(r.rho2);
    d["full"] = matrix_to_lists(r.full);
    return d;
  });
  m.def("kappa", [](const ImSplit& xi, const BVector& h) {
    return kappa(xi, FlatPoint(h), calibration().table);
  });
  m.def("potential_check", [](const BVector& h, const ImSplit& xi, std::uint64_t seed, int pairs) {
    Rng rng(seed);
    return potential_check(FlatPoint(h), xi, calibration().table, rng, pairs);
  }, py::arg("h"), py::arg("xi"), py::arg("seed") = 0, py::arg("pairs") = 8);
  m.def("sample_spacelike", [](int n_entries, std::uint64_t seed) {
    Rng rng(seed);
    return sample_spacelike(n_entries, rng);
  });
  m.def("flat_obstruction", [](int n, int points, std::uint64_t seed) {
    py::list out;
    for (const auto& r : flat_obstruction_rows(n, points, seed)) {
      py::dict d;
      d["index"] = r.index;
      d["metric_hh"] = r.metric_hh;
      d["rho0"] = r.rho0;
      d["rho0_err"] = r.rho0_err;
      d["rho2_maxnorm"] = r.rho2_maxnorm;
      out.append(d);
    }
    return out;
  });

  m.def("algebra_suite", [](std::uint64_t seed, int pairs) {
    return suite_to_dict(algebra_suite(seed, pairs, false));
  }, py::arg("seed") = 0, py::arg("pairs") = 10000);
  m.def("flat_suite", [](int n, int points, std::uint64_t seed) {
    return suite_to_dict(flat_suite(n, points, seed));
  }, py::arg("n") = 1, py::arg("points") = 200, py::arg("seed") = 0);
  m.def("sasakian_suite", [](int n, int points, std::uint64_t seed) {
    return suite_to_dict(sasakian_suite(n, points, seed));
  }, py::arg("n") = 1, py::arg("points") = 25, py::arg("seed") = 0);

  // --- Lie algebra / Nahm-Schmid -------------------------------------------
  py::class_<LieAlgebra, std::shared_ptr<LieAlgebra>>(m, "LieAlgebra")
      .def_static("su2", [] { return std::make_shared<LieAlgebra>(LieAlgebra::su2()); })
      .def_static("from_json_file", [](const std::string& path) {
        return std::make_shared<LieAlgebra>(LieAlgebra::from_json_file(path));
      })
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def("bracket", [](const LieAlgebra& g, const std::vector<double>& x,
                         const std::vector<double>& y) {
        return g.bracket(as_lievector(g, x, "x"), as_lievector(g, y, "y"));
      })
      .def("inner", [](const LieAlgebra& g, const std::vector<double>& x,
                       const std::vector<double>& y) {
        return g.inner(as_lievector(g, x, "x"), as_lievector(g, y, "y"));
      })
      .def("check", [](const LieAlgebra& g) {
        AlgebraReport rep = g.check();
        py::dict d;
        d["antisymmetry"] = rep.antisymmetry;
        d["jacobi"] = rep.jacobi;
        d["ad_invariance"] = rep.ad_invariance;
        d["ip_symmetry"] = rep.ip_symmetry;
        d["ip_min_eigenvalue"] = rep.ip_min_eigenvalue;
        d["ok"] = rep.ok;
        return d;
      });

  py::class_<PyTrajectory>(m, "Trajectory")
      .def_property_readonly("steps", [](const PyTrajectory& t) { return t.traj.steps(); })
      .def_property_readonly("length", [](const PyTrajectory& t) { return t.traj.length; })
      .def("times", [](const PyTrajectory& t) {
        std::vector<double> out;
        for (int i = 0; i <= t.traj.steps(); ++i) out.push_back(t.traj.time(i));
        return out;
      })
      .def("component", [](const PyTrajectory& t, int which) {
        if (which < 0 || which > 3) throw std::invalid_argument("component: 0..3");
        std::vector<LieVector> out;
        for (const auto& s : t.traj.states)
          out.push_back(which == 0 ? s.T0 : which == 1 ? s.T1 : which == 2 ? s.T2 : s.T3);
        return out;
      })
      .def("conserved", [](const PyTrajectory& t) {
        std::vector<double> out;
        for (const auto& s : t.traj.states) out.push_back(conserved(*t.algebra, s));
        return out;
      })
      .def("moment_residual", [](const PyTrajectory& t) {
        MomentResidual r = moment_residual(t.traj);
        return py::make_tuple(r.mu_i, r.mu_s, r.mu_t);
      })
      .def("scaling", [](const PyTrajectory& t, double a) {
        return PyTrajectory(t.algebra, scaling(a, t.traj));
      })
      .def("su11_act", [](const PyTrajectory& t, const SplitQuaternion& q) {
        return PyTrajectory(t.algebra, su11_act(q, t.traj));
      })
      .def("gauge_fix_t0", [](const PyTrajectory& t) {
        GaugeFixResult r = gauge_fix_T0(t.traj);
        return PyTrajectory(t.algebra, std::move(r.trajectory));
      })
      .def("degeneracy", [](const PyTrajectory& t) {
        DegeneracyReport rep = degeneracy_indicator(t.traj);
        py::dict d;
        d["endpoint_map"] = matrix_to_lists(rep.endpoint_map);
        d["det"] = rep.det;
        d["min_singular_value"] = rep.min_singular_value;
        d["max_singular_value"] = rep.max_singular_value;
        d["degenerate"] = rep.degenerate;
        return d;
      });

  m.def("integrate",
        [](std::shared_ptr<LieAlgebra> g, const std::vector<double>& T0,
           const std::vector<double>& T1, const std::vector<double>& T2,
           const std::vector<double>& T3, double length, int steps, bool reduced) {
          NahmState init{as_lievector(*g, T0, "T0"), as_lievector(*g, T1, "T1"),
                         as_lievector(*g, T2, "T2"), as_lievector(*g, T3, "T3")};
          return PyTrajectory(g, integrate(*g, init, length, steps, reduced));
        },
        py::arg("algebra"), py::arg("T0"), py::arg("T1"), py::arg("T2"), py::arg("T3"),
        py::arg("length") = 1.0, py::arg("steps") = 1000, py::arg("reduced") = true);

  m.def("degeneracy_scan",
        [](std::shared_ptr<LieAlgebra> g, const std::string& family, double from, double to,
           int samples, int steps) {
          ScanFamily f;
          if (family == "const-t1") {
            f = ScanFamily::ConstT1;
          } else if (family == "const-t2") {
            f = ScanFamily::ConstT2;
          } else {
            throw std::invalid_argument("family: const-t1 or const-t2");
          }
          ScanResult r = degeneracy_scan(*g, f, from, to, samples, steps);
          py::dict d;
          std::vector<double> params, dets, minsv;
          for (const auto& s : r.samples) {
            params.push_back(s.param);
            dets.push_back(s.det);
            minsv.push_back(s.min_singular_value);
          }
          d["param"] = params;
          d["det"] = dets;
          d["min_singular_value"] = minsv;
          d["roots"] = r.roots;
          return d;
        },
        py::arg("algebra"), py::arg("family"), py::arg("from_"), py::arg("to"),
        py::arg("samples") = 100, py::arg("steps") = 1000);
}
