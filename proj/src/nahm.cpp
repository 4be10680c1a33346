#include "splitgeom/nahm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "splitgeom/errors.hpp"

namespace splitgeom {

namespace {

NahmState st_add(const NahmState& a, const NahmState& b) {
  return {lv_add(a.T0, b.T0), lv_add(a.T1, b.T1), lv_add(a.T2, b.T2), lv_add(a.T3, b.T3)};
}

NahmState st_scale(double c, const NahmState& a) {
  return {lv_scale(c, a.T0), lv_scale(c, a.T1), lv_scale(c, a.T2), lv_scale(c, a.T3)};
}

bool lv_finite(const LieVector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

bool st_finite(const NahmState& s) {
  return lv_finite(s.T0) && lv_finite(s.T1) && lv_finite(s.T2) && lv_finite(s.T3);
}

/// Values at interval midpoints by 4-point cubic interpolation.
template <typename V, typename Add, typename Scale>
std::vector<V> midpoints(const std::vector<V>& nodes, Add add, Scale scale) {
  const int n = static_cast<int>(nodes.size()) - 1;  // number of intervals
  if (n < 3) throw std::invalid_argument("midpoints: need at least 4 nodes");
  std::vector<V> mid;
  mid.reserve(n);
  auto combine = [&](int base, const std::array<double, 4>& w) {
    V acc = scale(w[0], nodes[base]);
    for (int k = 1; k < 4; ++k) acc = add(acc, scale(w[k], nodes[base + k]));
    return acc;
  };
  const std::array<double, 4> left{5.0 / 16, 15.0 / 16, -5.0 / 16, 1.0 / 16};
  const std::array<double, 4> inner{-1.0 / 16, 9.0 / 16, 9.0 / 16, -1.0 / 16};
  const std::array<double, 4> right{1.0 / 16, -5.0 / 16, 15.0 / 16, 5.0 / 16};
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      mid.push_back(combine(0, left));
    } else if (i == n - 1) {
      mid.push_back(combine(n - 3, right));
    } else {
      mid.push_back(combine(i - 1, inner));
    }
  }
  return mid;
}

std::vector<LieVector> lv_midpoints(const std::vector<LieVector>& nodes) {
  return midpoints<LieVector>(nodes, lv_add, lv_scale);
}

/// Derivative of a grid of LieVectors by the shared 5-point stencils.
std::vector<LieVector> lv_derivative(const std::vector<LieVector>& nodes, double h) {
  const int n = static_cast<int>(nodes.size());
  const int dim = static_cast<int>(nodes.front().size());
  std::vector<LieVector> out(n, LieVector(dim, 0.0));
  std::vector<double> series(n);
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < n; ++i) series[i] = nodes[i][k];
    std::vector<double> d = stencil_derivative(series, h);
    for (int i = 0; i < n; ++i) out[i][k] = d[i];
  }
  return out;
}

// --- 2x2 complex matrix helpers for the su(2) realization ------------------

using cd = std::complex<double>;

Su2Matrix m_mul(const Su2Matrix& a, const Su2Matrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Su2Matrix m_add(const Su2Matrix& a, const Su2Matrix& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Su2Matrix m_scale(double c, const Su2Matrix& a) { return {c * a[0], c * a[1], c * a[2], c * a[3]}; }


Su2Matrix m_inverse(const Su2Matrix& a) {
  cd det = a[0] * a[3] - a[1] * a[2];
  if (std::abs(det) < 1e-14) throw std::runtime_error("gauge path matrix is singular");
  cd inv = 1.0 / det;
  return {a[3] * inv, -a[1] * inv, -a[2] * inv, a[0] * inv};
}

const Su2Matrix kIdentity2{cd(1, 0), cd(0, 0), cd(0, 0), cd(1, 0)};

/// Orthonormal su(2) basis E_k = -(i/2) sigma_k with [E_1, E_2] = E_3 cyclic
/// and <A, B> = -2 Re tr(A B).
const Su2Matrix kSu2Basis[3] = {
    Su2Matrix{cd(0, 0), cd(0, -0.5), cd(0, -0.5), cd(0, 0)},
    Su2Matrix{cd(0, 0), cd(-0.5, 0), cd(0.5, 0), cd(0, 0)},
    Su2Matrix{cd(0, -0.5), cd(0, 0), cd(0, 0), cd(0, 0.5)},
};

Su2Matrix to_su2_matrix(const LieVector& v) {
  Su2Matrix m{};
  for (int k = 0; k < 3; ++k) m = m_add(m, m_scale(v[k], kSu2Basis[k]));
  return m;
}

LieVector from_su2_matrix(const Su2Matrix& m) {
  LieVector v(3, 0.0);
  for (int k = 0; k < 3; ++k) {
    Su2Matrix prod = m_mul(m, kSu2Basis[k]);
    v[k] = -2.0 * (prod[0] + prod[3]).real();
  }
  return v;
}

void require_su2(const LieAlgebra& g, const char* who) {
  if (g.dim() != 3) throw UnsupportedError(std::string(who) + ": requires the su(2) backend");
  LieAlgebra ref = LieAlgebra::su2();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (std::fabs(g.ip(i, j) - ref.ip(i, j)) > 1e-12)
        throw UnsupportedError(std::string(who) + ": requires the su(2) backend");
      for (int k = 0; k < 3; ++k)
        if (std::fabs(g.c(i, j, k) - ref.c(i, j, k)) > 1e-12)
          throw UnsupportedError(std::string(who) + ": requires the su(2) backend");
    }
}

}  // namespace

NahmState NahmState::zero(const LieAlgebra& g) {
  return {g.zero(), g.zero(), g.zero(), g.zero()};
}

NahmState rhs(const LieAlgebra& g, const NahmState& state, bool reduced) {
  NahmState d;
  d.T0 = g.zero();
  d.T1 = lv_scale(-1.0, g.bracket(state.T2, state.T3));
  d.T2 = g.bracket(state.T3, state.T1);
  d.T3 = g.bracket(state.T1, state.T2);
  if (!reduced) {
    d.T1 = lv_sub(d.T1, g.bracket(state.T0, state.T1));
    d.T2 = lv_sub(d.T2, g.bracket(state.T0, state.T2));
    d.T3 = lv_sub(d.T3, g.bracket(state.T0, state.T3));
  }
  return d;
}

NahmTrajectory integrate(const LieAlgebra& g, const NahmState& init, double length, int steps,
                         bool reduced) {
  if (steps < 2) throw std::invalid_argument("integrate: steps must be >= 2");
  if (!(length > 0.0)) throw std::invalid_argument("integrate: length must be positive");
  NahmTrajectory traj;
  traj.algebra = &g;
  traj.length = length;
  traj.states.reserve(steps + 1);
  traj.states.push_back(init);
  const double h = length / steps;
  NahmState y = init;
  for (int i = 0; i < steps; ++i) {
    NahmState k1 = rhs(g, y, reduced);
    NahmState k2 = rhs(g, st_add(y, st_scale(0.5 * h, k1)), reduced);
    NahmState k3 = rhs(g, st_add(y, st_scale(0.5 * h, k2)), reduced);
    NahmState k4 = rhs(g, st_add(y, st_scale(h, k3)), reduced);
    NahmState incr = st_add(st_add(k1, st_scale(2.0, k2)), st_add(st_scale(2.0, k3), k4));
    y = st_add(y, st_scale(h / 6.0, incr));
    if (!st_finite(y)) throw IntegrationBlowupError("integrate: non-finite state");
    traj.states.push_back(y);
  }
  return traj;
}

double conserved(const LieAlgebra& g, const NahmState& state) {
  return 2.0 * g.norm_sq(state.T1) + g.norm_sq(state.T2) + g.norm_sq(state.T3);
}

double MomentResidual::max() const { return std::max(mu_i, std::max(mu_s, mu_t)); }

MomentResidual moment_residual(const NahmTrajectory& traj) {
  const LieAlgebra& g = *traj.algebra;
  const int n = static_cast<int>(traj.states.size());
  std::vector<LieVector> t1(n), t2(n), t3(n);
  for (int i = 0; i < n; ++i) {
    t1[i] = traj.states[i].T1;
    t2[i] = traj.states[i].T2;
    t3[i] = traj.states[i].T3;
  }
  const double h = traj.dt();
  std::vector<LieVector> d1 = lv_derivative(t1, h);
  std::vector<LieVector> d2 = lv_derivative(t2, h);
  std::vector<LieVector> d3 = lv_derivative(t3, h);
  MomentResidual res;
  for (int i = 0; i < n; ++i) {
    const NahmState& s = traj.states[i];
    LieVector mu_i = lv_add(d1[i], lv_add(g.bracket(s.T0, s.T1), g.bracket(s.T2, s.T3)));
    LieVector mu_s = lv_sub(lv_add(d2[i], g.bracket(s.T0, s.T2)), g.bracket(s.T3, s.T1));
    LieVector mu_t = lv_sub(lv_add(d3[i], g.bracket(s.T0, s.T3)), g.bracket(s.T1, s.T2));
    res.mu_i = std::max(res.mu_i, std::sqrt(std::fabs(g.inner(mu_i, mu_i))));
    res.mu_s = std::max(res.mu_s, std::sqrt(std::fabs(g.inner(mu_s, mu_s))));
    res.mu_t = std::max(res.mu_t, std::sqrt(std::fabs(g.inner(mu_t, mu_t))));
  }
  return res;
}

NahmTrajectory gauge_transform(const std::vector<Su2Matrix>& g_path, const NahmTrajectory& traj) {
  require_su2(*traj.algebra, "gauge_transform");
  const int n = static_cast<int>(traj.states.size());
  if (static_cast<int>(g_path.size()) != n)
    throw std::invalid_argument("gauge_transform: gauge path and trajectory grids differ");

  // dg by stencils, componentwise on the four complex entries.
  std::vector<Su2Matrix> dg(n);
  {
    std::vector<double> series(n);
    for (int entry = 0; entry < 4; ++entry) {
      for (int part = 0; part < 2; ++part) {
        for (int i = 0; i < n; ++i)
          series[i] = part == 0 ? g_path[i][entry].real() : g_path[i][entry].imag();
        std::vector<double> d = stencil_derivative(series, traj.dt());
        for (int i = 0; i < n; ++i) {
          if (part == 0)
            dg[i][entry] = cd(d[i], dg[i][entry].imag());
          else
            dg[i][entry] = cd(dg[i][entry].real(), d[i]);
        }
      }
    }
  }

  NahmTrajectory out;
  out.algebra = traj.algebra;
  out.length = traj.length;
  out.states.resize(n);
  for (int i = 0; i < n; ++i) {
    const Su2Matrix& gm = g_path[i];
    Su2Matrix gi = m_inverse(gm);
    auto conjugate = [&](const LieVector& v) {
      return from_su2_matrix(m_mul(gm, m_mul(to_su2_matrix(v), gi)));
    };
    out.states[i].T0 = lv_sub(conjugate(traj.states[i].T0), from_su2_matrix(m_mul(dg[i], gi)));
    out.states[i].T1 = conjugate(traj.states[i].T1);
    out.states[i].T2 = conjugate(traj.states[i].T2);
    out.states[i].T3 = conjugate(traj.states[i].T3);
  }
  return out;
}

GaugeFixResult gauge_fix_T0(const NahmTrajectory& traj) {
  require_su2(*traj.algebra, "gauge_fix_T0");
  const int n = static_cast<int>(traj.states.size());
  const double h = traj.dt();

  std::vector<LieVector> t0(n);
  for (int i = 0; i < n; ++i) t0[i] = traj.states[i].T0;
  std::vector<LieVector> t0_mid = lv_midpoints(t0);

  // dg = g T0(t), g(0) = id, RK4 on the trajectory grid.
  std::vector<Su2Matrix> path;
  path.reserve(n);
  path.push_back(kIdentity2);
  Su2Matrix g = kIdentity2;
  for (int i = 0; i + 1 < n; ++i) {
    Su2Matrix a0 = to_su2_matrix(t0[i]);
    Su2Matrix am = to_su2_matrix(t0_mid[i]);
    Su2Matrix a1 = to_su2_matrix(t0[i + 1]);
    Su2Matrix k1 = m_mul(g, a0);
    Su2Matrix k2 = m_mul(m_add(g, m_scale(0.5 * h, k1)), am);
    Su2Matrix k3 = m_mul(m_add(g, m_scale(0.5 * h, k2)), am);
    Su2Matrix k4 = m_mul(m_add(g, m_scale(h, k3)), a1);
    Su2Matrix incr = m_add(m_add(k1, m_scale(2.0, k2)), m_add(m_scale(2.0, k3), k4));
    g = m_add(g, m_scale(h / 6.0, incr));
    path.push_back(g);
  }

  GaugeFixResult result;
  result.gauge_path = path;
  result.g_end = path.back();
  result.trajectory = gauge_transform(path, traj);
  return result;
}

NahmTrajectory scaling(double a, const NahmTrajectory& traj) {
  if (!(a > 0.0)) throw std::invalid_argument("scaling: a must be positive");
  double t0_sup = 0.0;
  for (const auto& s : traj.states) t0_sup = std::max(t0_sup, lv_max_abs(s.T0));
  if (t0_sup > 1e-8)
    throw std::domain_error("scaling: trajectory has T0 != 0; gauge-fix first");
  if (moment_residual(traj).max() > 1e-6)
    throw std::domain_error("scaling: trajectory does not solve the reduced equations");

  // a T(a t) on the output grid: re-run the flow from the initial state with
  // step a/steps, which restricts (a < 1) or extends (a > 1) in one stroke.
  const int steps = traj.steps();
  NahmTrajectory inner = integrate(*traj.algebra, traj.states.front(), a, steps, true);
  NahmTrajectory out;
  out.algebra = traj.algebra;
  out.length = 1.0;
  out.states.resize(steps + 1);
  for (int i = 0; i <= steps; ++i) out.states[i] = st_scale(a, inner.states[i]);
  return out;
}

NahmTrajectory su11_act(const SplitQuaternion& q, const NahmTrajectory& traj) {
  Matrix m = adjoint_matrix(q);  // throws NotUnitError off the unit sheet
  NahmTrajectory out;
  out.algebra = traj.algebra;
  out.length = traj.length;
  out.states.resize(traj.states.size());
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const NahmState& s = traj.states[i];
    const LieVector* in[3] = {&s.T1, &s.T2, &s.T3};
    LieVector rot[3];
    for (int r = 0; r < 3; ++r) {
      rot[r] = traj.algebra->zero();
      for (int c = 0; c < 3; ++c) rot[r] = lv_add(rot[r], lv_scale(m(r, c), *in[c]));
    }
    out.states[i] = {s.T0, rot[0], rot[1], rot[2]};
  }
  return out;
}

DegeneracyReport degeneracy_indicator(const NahmTrajectory& traj) {
  const LieAlgebra& g = *traj.algebra;
  const int dim = g.dim();
  const int n = static_cast<int>(traj.states.size());
  const double h = traj.dt();

  std::vector<LieVector> t0(n), t1(n), t2(n), t3(n);
  for (int i = 0; i < n; ++i) {
    t0[i] = traj.states[i].T0;
    t1[i] = traj.states[i].T1;
    t2[i] = traj.states[i].T2;
    t3[i] = traj.states[i].T3;
  }
  std::vector<LieVector> dt0 = lv_derivative(t0, h);
  std::vector<LieVector> t0m = lv_midpoints(t0), t1m = lv_midpoints(t1), t2m = lv_midpoints(t2),
                         t3m = lv_midpoints(t3), dt0m = lv_midpoints(dt0);

  // xi'' = -[T0, xi'] - [dT0, xi] - [T0,[T0,xi]] - [T1,[T1,xi]] + [T2,[T2,xi]] + [T3,[T3,xi]]
  auto accel = [&](const LieVector& T0v, const LieVector& dT0v, const LieVector& T1v,
                   const LieVector& T2v, const LieVector& T3v, const LieVector& xi,
                   const LieVector& v) {
    LieVector acc = lv_scale(-1.0, g.bracket(T0v, v));
    acc = lv_sub(acc, g.bracket(dT0v, xi));
    acc = lv_sub(acc, g.bracket(T0v, g.bracket(T0v, xi)));
    acc = lv_sub(acc, g.bracket(T1v, g.bracket(T1v, xi)));
    acc = lv_add(acc, g.bracket(T2v, g.bracket(T2v, xi)));
    acc = lv_add(acc, g.bracket(T3v, g.bracket(T3v, xi)));
    return acc;
  };

  DegeneracyReport rep;
  rep.endpoint_map = Matrix(dim);
  for (int col = 0; col < dim; ++col) {
    LieVector xi = g.zero();
    LieVector v = g.basis(col);
    for (int i = 0; i + 1 < n; ++i) {
      auto stage = [&](int where, const LieVector& xi_s, const LieVector& v_s,
                       LieVector& dxi, LieVector& dv) {
        // where: 0 -> node i, 1 -> midpoint, 2 -> node i+1
        const LieVector& T0v = where == 0 ? t0[i] : (where == 1 ? t0m[i] : t0[i + 1]);
        const LieVector& dT0v = where == 0 ? dt0[i] : (where == 1 ? dt0m[i] : dt0[i + 1]);
        const LieVector& T1v = where == 0 ? t1[i] : (where == 1 ? t1m[i] : t1[i + 1]);
        const LieVector& T2v = where == 0 ? t2[i] : (where == 1 ? t2m[i] : t2[i + 1]);
        const LieVector& T3v = where == 0 ? t3[i] : (where == 1 ? t3m[i] : t3[i + 1]);
        dxi = v_s;
        dv = accel(T0v, dT0v, T1v, T2v, T3v, xi_s, v_s);
      };
      LieVector k1x, k1v, k2x, k2v, k3x, k3v, k4x, k4v;
      stage(0, xi, v, k1x, k1v);
      stage(1, lv_add(xi, lv_scale(0.5 * h, k1x)), lv_add(v, lv_scale(0.5 * h, k1v)), k2x, k2v);
      stage(1, lv_add(xi, lv_scale(0.5 * h, k2x)), lv_add(v, lv_scale(0.5 * h, k2v)), k3x, k3v);
      stage(2, lv_add(xi, lv_scale(h, k3x)), lv_add(v, lv_scale(h, k3v)), k4x, k4v);
      xi = lv_add(xi, lv_scale(h / 6.0,
                               lv_add(lv_add(k1x, lv_scale(2.0, k2x)),
                                      lv_add(lv_scale(2.0, k3x), k4x))));
      v = lv_add(v, lv_scale(h / 6.0, lv_add(lv_add(k1v, lv_scale(2.0, k2v)),
                                             lv_add(lv_scale(2.0, k3v), k4v))));
    }
    for (int row = 0; row < dim; ++row) rep.endpoint_map(row, col) = xi[row];
  }

  rep.det = rep.endpoint_map.det();
  std::vector<double> sv = rep.endpoint_map.singular_values();
  rep.min_singular_value = sv.front();
  rep.max_singular_value = sv.back();
  rep.degenerate = rep.min_singular_value <= 1e-8 * rep.max_singular_value;
  return rep;
}

NahmState scan_family_init(const LieAlgebra& g, ScanFamily family, double param) {
  NahmState s = NahmState::zero(g);
  switch (family) {
    case ScanFamily::ConstT1: s.T1 = lv_scale(param, g.basis(0)); break;
    case ScanFamily::ConstT2: s.T2 = lv_scale(param, g.basis(1)); break;
  }
  return s;
}

ScanResult degeneracy_scan(const LieAlgebra& g, ScanFamily family, double from, double to,
                           int n_samples, int steps) {
  if (n_samples < 2) throw std::invalid_argument("degeneracy_scan: need at least 2 samples");
  if (!(to > from)) throw std::invalid_argument("degeneracy_scan: empty parameter range");

  auto indicator = [&](double c) {
    NahmTrajectory traj = integrate(g, scan_family_init(g, family, c), 1.0, steps, true);
    return degeneracy_indicator(traj);
  };

  ScanResult result;
  result.samples.resize(n_samples);
  parallel_for(static_cast<std::size_t>(n_samples), [&](std::size_t i) {
    double c = from + (to - from) * static_cast<double>(i) / (n_samples - 1);
    DegeneracyReport rep = indicator(c);
    result.samples[i] = {c, rep.det, rep.min_singular_value};
  });

  const double xtol = 1e-7;
  // Route 1: det sign changes, refined by bisection.
  for (int i = 0; i + 1 < n_samples; ++i) {
    double d0 = result.samples[i].det;
    double d1 = result.samples[i + 1].det;
    if (d0 == 0.0) {
      result.roots.push_back(result.samples[i].param);
      continue;
    }
    if (d0 * d1 < 0.0) {
      double root = bisect_root([&](double c) { return indicator(c).det; },
                                result.samples[i].param, result.samples[i + 1].param, xtol);
      result.roots.push_back(root);
    }
  }
  // Route 2: even-multiplicity singularities show as dips of the smallest
  // singular value without a det sign change (the constant-T2 family brings
  // two components through zero together); refine local minima by golden
  // section and accept only values consistent with an exact zero.
  for (int i = 1; i + 1 < n_samples; ++i) {
    double prev = result.samples[i - 1].min_singular_value;
    double here = result.samples[i].min_singular_value;
    double next = result.samples[i + 1].min_singular_value;
    if (!(here < prev && here <= next)) continue;
    double c_star = golden_min([&](double c) { return indicator(c).min_singular_value; },
                               result.samples[i - 1].param, result.samples[i + 1].param, 1e-8);
    DegeneracyReport at = indicator(c_star);
    if (at.min_singular_value > 1e-4 * std::max(1.0, at.max_singular_value)) continue;
    bool duplicate = false;
    for (double r : result.roots)
      if (std::fabs(r - c_star) < 1e-4) duplicate = true;
    if (!duplicate) result.roots.push_back(c_star);
  }
  std::sort(result.roots.begin(), result.roots.end());
  return result;
}

}  // namespace splitgeom
