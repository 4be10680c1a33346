#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "splitgeom/errors.hpp"
#include "splitgeom/nahm.hpp"

using namespace splitgeom;

namespace {

const LieAlgebra kSu2 = LieAlgebra::su2();

/// Closed-form solution of the reduced system on su(2):
/// T1 = -k tanh(kt) e1, T2 = k sech(kt) e2, T3 = k sech(kt) e3.
NahmState exact_state(double k, double t) {
  NahmState s = NahmState::zero(kSu2);
  s.T1[0] = -k * std::tanh(k * t);
  s.T2[1] = k / std::cosh(k * t);
  s.T3[2] = k / std::cosh(k * t);
  return s;
}

NahmTrajectory exact_trajectory_rk4(double k, int steps) {
  return integrate(kSu2, exact_state(k, 0.0), 1.0, steps, true);
}

double sup_error_vs_exact(const NahmTrajectory& traj, double k) {
  double worst = 0.0;
  for (int i = 0; i <= traj.steps(); ++i) {
    NahmState ref = exact_state(k, traj.time(i));
    worst = std::max(worst, lv_max_abs(lv_sub(traj.states[i].T1, ref.T1)));
    worst = std::max(worst, lv_max_abs(lv_sub(traj.states[i].T2, ref.T2)));
    worst = std::max(worst, lv_max_abs(lv_sub(traj.states[i].T3, ref.T3)));
  }
  return worst;
}

/// exp(t * sum a_k E_k) in the 2x2 realization: M^2 = -(|a|^2/4) id.
Su2Matrix gauge_exp(const LieVector& a, double t) {
  double na = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  double c = std::cos(0.5 * na * t);
  double s = na > 0 ? std::sin(0.5 * na * t) / na : t;
  using cd = std::complex<double>;
  // sum a_k E_k with E_k = -(i/2) sigma_k
  Su2Matrix m{cd(0, -0.5 * a[2]), cd(-0.5 * a[1], -0.5 * a[0]),
              cd(0.5 * a[1], -0.5 * a[0]), cd(0, 0.5 * a[2])};
  return {cd(c, 0) + 2.0 * s * m[0], 2.0 * s * m[1], 2.0 * s * m[2], cd(c, 0) + 2.0 * s * m[3]};
}

}  // namespace

TEST_CASE("right-hand side") {
  NahmState zero = NahmState::zero(kSu2);
  NahmState d0 = rhs(kSu2, zero, true);
  CHECK(lv_max_abs(d0.T1) == 0.0);
  CHECK(lv_max_abs(d0.T2) == 0.0);
  CHECK(lv_max_abs(d0.T3) == 0.0);

  // T1 = a e1, T2 = b e2, T3 = c e3 -> (da, db, dc) = (-bc, ca, ab)
  NahmState s = NahmState::zero(kSu2);
  const double a = 1.3, b = -0.7, c = 2.1;
  s.T1[0] = a;
  s.T2[1] = b;
  s.T3[2] = c;
  NahmState d = rhs(kSu2, s, true);
  CHECK(d.T1[0] == doctest::Approx(-b * c).epsilon(1e-15));
  CHECK(d.T2[1] == doctest::Approx(c * a).epsilon(1e-15));
  CHECK(d.T3[2] == doctest::Approx(a * b).epsilon(1e-15));

  // commuting constants: everything along e2
  NahmState line = NahmState::zero(kSu2);
  line.T1[1] = 0.4;
  line.T2[1] = -1.0;
  line.T3[1] = 0.9;
  NahmState dl = rhs(kSu2, line, true);
  CHECK(lv_max_abs(dl.T1) == 0.0);
  CHECK(lv_max_abs(dl.T2) == 0.0);
  CHECK(lv_max_abs(dl.T3) == 0.0);

  // full equations add the [T0, .] terms
  NahmState with_t0 = s;
  with_t0.T0[2] = 1.0;  // [e3, e1] = e2, so dT1 gains -[T0,T1] = -a e2
  NahmState df = rhs(kSu2, with_t0, false);
  CHECK(df.T1[1] == doctest::Approx(-a).epsilon(1e-15));
}

TEST_CASE("fixed points stay fixed") {
  NahmState s = NahmState::zero(kSu2);
  s.T1[0] = 0.8;  // T2 = T3 = 0
  NahmTrajectory traj = integrate(kSu2, s, 1.0, 100, true);
  for (const auto& st : traj.states) {
    CHECK(lv_max_abs(lv_sub(st.T1, s.T1)) == 0.0);
    CHECK(lv_max_abs(st.T2) == 0.0);
  }
}

TEST_CASE("RK4 against the closed form, fourth-order convergence") {
  NahmTrajectory fine = exact_trajectory_rk4(1.0, 1000);
  CHECK(sup_error_vs_exact(fine, 1.0) <= 1e-8);

  double e100 = sup_error_vs_exact(exact_trajectory_rk4(1.0, 100), 1.0);
  double e200 = sup_error_vs_exact(exact_trajectory_rk4(1.0, 200), 1.0);
  double e400 = sup_error_vs_exact(exact_trajectory_rk4(1.0, 400), 1.0);
  double order1 = std::log2(e100 / e200);
  double order2 = std::log2(e200 / e400);
  CHECK(order1 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(order2 == doctest::Approx(4.0).epsilon(0.05));

  CHECK_THROWS_AS((void)integrate(kSu2, exact_state(1.0, 0.0), 1.0, 1, true),
                  std::invalid_argument);
}

TEST_CASE("integration blowup is reported") {
  NahmState huge = NahmState::zero(kSu2);
  huge.T1[0] = 1e200;
  huge.T2[1] = 1e200;
  huge.T3[2] = 1e200;
  CHECK_THROWS_AS((void)integrate(kSu2, huge, 1.0, 2, true), IntegrationBlowupError);
}

TEST_CASE("conserved quantity") {
  CHECK(conserved(kSu2, NahmState::zero(kSu2)) == 0.0);

  // 2 tanh^2 + sech^2 + sech^2 = 2 at every time
  for (double t : {0.0, 0.3, 0.7, 1.0})
    CHECK(conserved(kSu2, exact_state(1.0, t)) == doctest::Approx(2.0).epsilon(1e-14));

  NahmTrajectory traj = exact_trajectory_rk4(1.0, 1000);
  double c0 = conserved(kSu2, traj.states.front());
  double drift = 0.0;
  for (const auto& s : traj.states)
    drift = std::max(drift, std::fabs(conserved(kSu2, s) - c0));
  CHECK(drift <= 1e-10);
}

TEST_CASE("moment residual separates solutions from non-solutions") {
  NahmTrajectory traj = exact_trajectory_rk4(1.0, 500);
  CHECK(moment_residual(traj).max() <= 1e-6);

  // random smooth non-solution: polynomial coefficients
  NahmTrajectory fake;
  fake.algebra = &kSu2;
  fake.length = 1.0;
  for (int i = 0; i <= 200; ++i) {
    double t = i / 200.0;
    NahmState s = NahmState::zero(kSu2);
    s.T1[0] = 1.0 + t * t;
    s.T2[1] = 0.5 - t;
    s.T3[2] = std::sin(3.0 * t);
    fake.states.push_back(s);
  }
  CHECK(moment_residual(fake).max() > 0.1);

  // commuting constants solve the equations; derivative of constants is zero
  NahmTrajectory flat;
  flat.algebra = &kSu2;
  flat.length = 1.0;
  NahmState cst = NahmState::zero(kSu2);
  cst.T2[1] = 1.7;
  for (int i = 0; i <= 50; ++i) flat.states.push_back(cst);
  // zero up to roundoff of the cancelling stencil weights
  CHECK(moment_residual(flat).max() <= 1e-13);
}

TEST_CASE("gauge transform") {
  NahmTrajectory traj = exact_trajectory_rk4(1.0, 400);
  const int n = traj.steps() + 1;

  std::vector<Su2Matrix> id_path(n, Su2Matrix{1.0, 0.0, 0.0, 1.0});
  NahmTrajectory same = gauge_transform(id_path, traj);
  for (int i = 0; i < n; ++i) {
    CHECK(lv_max_abs(lv_sub(same.states[i].T1, traj.states[i].T1)) <= 1e-12);
    CHECK(lv_max_abs(same.states[i].T0) <= 1e-12);
  }

  // non-trivial path g(t) = exp(t A): conjugation preserves the conserved
  // value, the transformed trajectory solves the full equations
  LieVector gen = {0.4, -0.8, 0.3};
  std::vector<Su2Matrix> path;
  for (int i = 0; i < n; ++i) path.push_back(gauge_exp(gen, traj.time(i)));
  NahmTrajectory moved = gauge_transform(path, traj);
  for (int i = 0; i < n; ++i) {
    CHECK(std::fabs(conserved(kSu2, moved.states[i]) - conserved(kSu2, traj.states[i])) <= 1e-10);
  }
  CHECK(moment_residual(moved).max() <= 1e-6);

  // unsupported backend
  LieAlgebra abelian(1, {0.0}, {1.0});
  NahmTrajectory tiny;
  tiny.algebra = &abelian;
  tiny.length = 1.0;
  tiny.states.assign(5, NahmState::zero(abelian));
  std::vector<Su2Matrix> p5(5, Su2Matrix{1.0, 0.0, 0.0, 1.0});
  CHECK_THROWS_AS((void)gauge_transform(p5, tiny), UnsupportedError);
}

TEST_CASE("gauge fixing kills T0") {
  // full solution with constant T0
  NahmState init = exact_state(1.0, 0.0);
  init.T0 = {0.5, -0.2, 0.8};
  NahmTrajectory full = integrate(kSu2, init, 1.0, 1000, false);
  CHECK(moment_residual(full).max() <= 1e-6);

  GaugeFixResult fixed = gauge_fix_T0(full);
  double t0_sup = 0.0;
  for (const auto& s : fixed.trajectory.states) t0_sup = std::max(t0_sup, lv_max_abs(s.T0));
  CHECK(t0_sup <= 1e-8);
  CHECK(moment_residual(fixed.trajectory).max() <= 1e-6);

  // conserved values match node by node (Ad-invariance)
  for (int i = 0; i <= full.steps(); ++i)
    CHECK(std::fabs(conserved(kSu2, fixed.trajectory.states[i]) -
                    conserved(kSu2, full.states[i])) <= 1e-9);

  // g(1) is reported; for constant T0 it is exp(T0), not the identity
  double off_identity = std::abs(fixed.g_end[1]) + std::abs(fixed.g_end[2]);
  CHECK(off_identity > 1e-3);
}

TEST_CASE("scaling") {
  NahmTrajectory traj = exact_trajectory_rk4(1.0, 1000);

  NahmTrajectory same = scaling(1.0, traj);
  CHECK(sup_error_vs_exact(same, 1.0) <= 1e-8);

  // a = 2 lands on the k = 2 closed form
  NahmTrajectory doubled = scaling(2.0, traj);
  CHECK(sup_error_vs_exact(doubled, 2.0) <= 1e-6);
  CHECK(conserved(kSu2, doubled.states.front()) == doctest::Approx(8.0).epsilon(1e-10));
  CHECK(moment_residual(doubled).max() <= 1e-5);

  NahmTrajectory halved = scaling(0.5, traj);
  CHECK(sup_error_vs_exact(halved, 0.5) <= 1e-6);
  CHECK(conserved(kSu2, halved.states.front()) == doctest::Approx(0.5).epsilon(1e-10));

  CHECK_THROWS_AS((void)scaling(-1.0, traj), std::invalid_argument);

  NahmTrajectory fake;
  fake.algebra = &kSu2;
  fake.length = 1.0;
  for (int i = 0; i <= 100; ++i) {
    NahmState s = NahmState::zero(kSu2);
    s.T1[0] = i / 100.0;
    s.T2[1] = 1.0;
    fake.states.push_back(s);
  }
  CHECK_THROWS_AS((void)scaling(2.0, fake), std::domain_error);
}

TEST_CASE("su(1,1) action on trajectories") {
  NahmTrajectory traj = exact_trajectory_rk4(1.0, 500);

  NahmTrajectory same = su11_act(SplitQuaternion::one(), traj);
  for (int i = 0; i <= traj.steps(); ++i)
    CHECK(lv_max_abs(lv_sub(same.states[i].T2, traj.states[i].T2)) == 0.0);

  NahmTrajectory by_i = su11_act(SplitQuaternion::i(), traj);
  for (int i = 0; i <= traj.steps(); ++i) {
    CHECK(lv_max_abs(lv_sub(by_i.states[i].T1, traj.states[i].T1)) <= 1e-14);
    CHECK(lv_max_abs(lv_add(by_i.states[i].T2, traj.states[i].T2)) <= 1e-14);
    CHECK(lv_max_abs(lv_add(by_i.states[i].T3, traj.states[i].T3)) <= 1e-14);
  }
  CHECK(moment_residual(by_i).max() <= 1e-6);

  Rng rng(21);
  for (int it = 0; it < 5; ++it) {
    SplitQuaternion q = random_unit(rng);
    CHECK(moment_residual(su11_act(q, traj)).max() <= 1e-6);
  }
  CHECK_THROWS_AS((void)su11_act(SplitQuaternion{2, 0, 0, 0}, traj), NotUnitError);
}

TEST_CASE("degeneracy indicator closed forms") {
  // zero trajectory: xi(t) = t v, endpoint map is the identity
  NahmTrajectory zero;
  zero.algebra = &kSu2;
  zero.length = 1.0;
  zero.states.assign(1001, NahmState::zero(kSu2));
  DegeneracyReport rep = degeneracy_indicator(zero);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(std::fabs(rep.endpoint_map(r, c) - (r == c ? 1.0 : 0.0)) <= 1e-12);
  CHECK(rep.det == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(rep.degenerate);

  // constant T2 = c e2: e1/e3 components oscillate (sin(ct)/c at t=1),
  // the e2 component is free
  auto const_t2 = [&](double c) {
    return integrate(kSu2, scan_family_init(kSu2, ScanFamily::ConstT2, c), 1.0, 1000, true);
  };
  {
    double c = 1.3;
    DegeneracyReport r = degeneracy_indicator(const_t2(c));
    double expect = std::sin(c) / c;
    CHECK(std::fabs(r.endpoint_map(0, 0) - expect) <= 1e-8);
    CHECK(std::fabs(r.endpoint_map(2, 2) - expect) <= 1e-8);
    CHECK(std::fabs(r.endpoint_map(1, 1) - 1.0) <= 1e-12);
    CHECK(std::fabs(r.det - expect * expect) <= 1e-7);
  }
  CHECK(degeneracy_indicator(const_t2(3.14159265358979312)).min_singular_value <= 1e-6);
  CHECK(degeneracy_indicator(const_t2(3.14159265358979312)).degenerate);
  CHECK(degeneracy_indicator(const_t2(3.14159265358979312 - 0.2)).min_singular_value > 1e-2);
  CHECK(degeneracy_indicator(const_t2(3.14159265358979312 + 0.2)).min_singular_value > 1e-2);

  // constant T1 = c e1: sinh growth, never degenerate on (0, 5]
  for (double c : {0.5, 2.5, 5.0}) {
    NahmTrajectory traj =
        integrate(kSu2, scan_family_init(kSu2, ScanFamily::ConstT1, c), 1.0, 1000, true);
    DegeneracyReport r = degeneracy_indicator(traj);
    double expect = std::sinh(c) / c;
    CHECK(std::fabs(r.det - expect * expect) <= 1e-5 * expect * expect);
    CHECK_FALSE(r.degenerate);
    CHECK(r.min_singular_value >= 1.0 - 1e-10);
  }
}

TEST_CASE("degeneracy scan finds pi for the constant-T2 family") {
  ScanResult scan = degeneracy_scan(kSu2, ScanFamily::ConstT2, 0.5, 4.0, 100, 1000);
  REQUIRE(scan.roots.size() == 1);
  CHECK(std::fabs(scan.roots[0] - 3.14159265358979312) <= 1e-6);

  ScanResult none = degeneracy_scan(kSu2, ScanFamily::ConstT1, 0.5, 4.0, 50, 500);
  CHECK(none.roots.empty());
}

TEST_CASE("conservation holds for the full equations too") {
  NahmState init = exact_state(1.0, 0.0);
  init.T0 = {0.9, -0.4, 0.2};
  NahmTrajectory full = integrate(kSu2, init, 1.0, 1000, false);
  double c0 = conserved(kSu2, full.states.front());
  double drift = 0.0;
  for (const auto& s : full.states)
    drift = std::max(drift, std::fabs(conserved(kSu2, s) - c0));
  CHECK(drift <= 1e-10);
}

TEST_CASE("degeneracy indicator is invariant under the su(1,1) action") {
  // the coefficient combination [T1,[T1,.]] - [T2,[T2,.]] - [T3,[T3,.]] only
  // sees the SO+(1,2)-invariant quadratic form of (T1,T2,T3)
  NahmTrajectory sol = exact_trajectory_rk4(1.0, 500);
  DegeneracyReport base = degeneracy_indicator(sol);
  Rng rng(31);
  for (int it = 0; it < 5; ++it) {
    DegeneracyReport rotated = degeneracy_indicator(su11_act(random_unit(rng), sol));
    CHECK(std::fabs(std::fabs(rotated.det) - std::fabs(base.det)) <= 1e-10);
    CHECK(std::fabs(rotated.min_singular_value - base.min_singular_value) <= 1e-8);
  }
}

TEST_CASE("scaling preserves the degeneracy locus") {
  // after scaling by a, the constant-T2 trajectory with parameter c becomes
  // the constant a*c, so the root in the scanned parameter moves to pi/a
  auto scaled_min_sv = [&](double a, double c) {
    NahmTrajectory base =
        integrate(kSu2, scan_family_init(kSu2, ScanFamily::ConstT2, c), 1.0, 400, true);
    return degeneracy_indicator(scaling(a, base)).min_singular_value;
  };
  const double a = 2.0;
  double best_c = 0.0, best_v = 1e9;
  for (int i = 0; i <= 40; ++i) {
    double c = 1.2 + 0.02 * i;
    double v = scaled_min_sv(a, c);
    if (v < best_v) {
      best_v = v;
      best_c = c;
    }
  }
  double refined = golden_min([&](double c) { return scaled_min_sv(a, c); }, best_c - 0.02,
                              best_c + 0.02, 1e-7);
  CHECK(std::fabs(refined - 3.14159265358979312 / a) <= 1e-5);

  // a trajectory on the locus stays on it: c = pi maps to the 2*pi member
  NahmTrajectory on_locus =
      integrate(kSu2, scan_family_init(kSu2, ScanFamily::ConstT2, 3.14159265358979312), 1.0,
                1000, true);
  CHECK(degeneracy_indicator(scaling(2.0, on_locus)).degenerate);
}
