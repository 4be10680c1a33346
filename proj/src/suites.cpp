#include "splitgeom/suites.hpp"

#include <cmath>
#include <stdexcept>

#include "splitgeom/errors.hpp"

namespace splitgeom {

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void SuiteReport::add(const std::string& name, double residual, double tolerance) {
  checks.push_back({name, residual, tolerance, residual <= tolerance});
}

namespace {

/// Table-driven product: the sixteen basis products as stored constants.
/// The sign-flip switch negates the i*s entry and nothing else, so a wrong
/// table is caught by the table and associativity checks.
struct MulTable {
  SplitQuaternion entry[4][4];

  static MulTable reference(bool inject_sign_flip) {
    using Q = SplitQuaternion;
    MulTable tbl;
    const Q one = Q::one(), i = Q::i(), s = Q::s(), t = Q::t();
    const Q table[4][4] = {
        {one, i, s, t},
        {i, -one, t, -s},
        {s, -t, one, -i},
        {t, s, i, one},
    };
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) tbl.entry[a][b] = table[a][b];
    if (inject_sign_flip) tbl.entry[1][2] = -tbl.entry[1][2];
    return tbl;
  }

  SplitQuaternion apply(const SplitQuaternion& p, const SplitQuaternion& q) const {
    const double pc[4] = {p.w, p.x, p.y, p.z};
    const double qc[4] = {q.w, q.x, q.y, q.z};
    SplitQuaternion acc{};
    for (int a = 0; a < 4; ++a) {
      if (pc[a] == 0.0) continue;
      for (int b = 0; b < 4; ++b) {
        if (qc[b] == 0.0) continue;
        acc = acc + entry[a][b] * (pc[a] * qc[b]);
      }
    }
    return acc;
  }
};

SplitQuaternion basis4(int a) {
  switch (a) {
    case 0: return SplitQuaternion::one();
    case 1: return SplitQuaternion::i();
    case 2: return SplitQuaternion::s();
    default: return a == 3 ? SplitQuaternion::t() : SplitQuaternion{};
  }
}

SplitQuaternion random_quat(Rng& rng) {
  return {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
}

}  // namespace

SuiteReport algebra_suite(std::uint64_t seed, int pairs, bool inject_sign_flip) {
  SuiteReport rep;
  rep.suite = "algebra";
  MulTable tbl = MulTable::reference(inject_sign_flip);
  MulTable clean = MulTable::reference(false);

  // Basis products, compared entry by entry against the fixed relations.
  {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        SplitQuaternion got = tbl.apply(basis4(a), basis4(b));
        worst = std::max(worst, (got - clean.entry[a][b]).max_abs());
      }
    rep.add("multiplication_table", worst, 0.0);
  }

  // Closed-form product against the table route.
  {
    Rng rng = Rng::for_index(seed, 1);
    double worst = 0.0;
    for (int it = 0; it < 256; ++it) {
      SplitQuaternion p = random_quat(rng), q = random_quat(rng);
      worst = std::max(worst, (mul(p, q) - tbl.apply(p, q)).max_abs());
    }
    rep.add("product_consistency", worst, 1e-13);
  }

  {
    Rng rng = Rng::for_index(seed, 2);
    double worst = 0.0;
    for (int it = 0; it < pairs; ++it) {
      SplitQuaternion p = random_quat(rng), q = random_quat(rng);
      double lhs = norm_sq(tbl.apply(p, q));
      double rhs = norm_sq(p) * norm_sq(q);
      worst = std::max(worst, std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs)));
    }
    rep.add("norm_multiplicativity", worst, 1e-10);
  }

  {
    Rng rng = Rng::for_index(seed, 3);
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
      SplitQuaternion p = random_quat(rng), q = random_quat(rng), r = random_quat(rng);
      SplitQuaternion lhs = tbl.apply(tbl.apply(p, q), r);
      SplitQuaternion rhs = tbl.apply(p, tbl.apply(q, r));
      worst = std::max(worst, (lhs - rhs).max_abs());
    }
    rep.add("associativity", worst, 1e-12);
  }

  {
    Rng rng = Rng::for_index(seed, 4);
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
      SplitQuaternion q = random_unit(rng);
      worst = std::max(worst, (mul(q, inverse(q)) - SplitQuaternion::one()).max_abs());
    }
    rep.add("inverse_identity", worst, 1e-12);
  }

  {
    double fail = 1.0;
    try {
      (void)inverse(SplitQuaternion{1, 0, 1, 0});  // 1 + s, a zero divisor
    } catch (const NullDivisorError&) {
      fail = 0.0;
    }
    rep.add("zero_divisor_detection", fail, 0.0);
  }

  {
    Rng rng = Rng::for_index(seed, 5);
    double worst_j = 0.0, worst_det = 0.0, worst_hom = 0.0, worst_kernel = 0.0;
    Matrix J(3);
    J(0, 0) = 1;
    J(1, 1) = -1;
    J(2, 2) = -1;
    for (int it = 0; it < pairs; ++it) {
      SplitQuaternion q1 = random_unit(rng), q2 = random_unit(rng);
      Matrix m1 = adjoint_matrix(q1);
      Matrix m2 = adjoint_matrix(q2);
      Matrix jerr = m1.transposed() * J * m1;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) jerr(r, c) -= J(r, c);
      worst_j = std::max(worst_j, jerr.max_abs());
      worst_det = std::max(worst_det, std::fabs(m1.det() - 1.0));

      Matrix prod = adjoint_matrix(mul(q1, q2));
      Matrix expect = m1 * m2;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) expect(r, c) -= prod(r, c);
      worst_hom = std::max(worst_hom, expect.max_abs());

      Matrix neg = adjoint_matrix(-q1);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) neg(r, c) -= m1(r, c);
      worst_kernel = std::max(worst_kernel, neg.max_abs());
    }
    rep.add("adjoint_orthogonality", worst_j, 1e-10);
    rep.add("adjoint_determinant", worst_det, 1e-10);
    rep.add("adjoint_homomorphism", worst_hom, 1e-10);
    rep.add("adjoint_kernel_pm1", worst_kernel, 0.0);
  }

  {
    double fail = 0.0;
    if (classify(ImSplit::i()) != Causal::Spacelike) fail = 1.0;
    if (classify(ImSplit::s()) != Causal::Timelike) fail = 1.0;
    if (classify(ImSplit{1, 1, 0}) != Causal::Null) fail = 1.0;
    rep.add("classification_anchors", fail, 0.0);
  }

  {
    Rng a = Rng::for_index(seed, 6);
    Rng b = Rng::for_index(seed, 6);
    SplitQuaternion qa = random_unit(a), qb = random_unit(b);
    double det_err = (qa - qb).max_abs();
    double unit_err = std::fabs(norm_sq(qa) - 1.0);
    rep.add("random_unit_determinism", det_err, 0.0);
    rep.add("random_unit_norm", unit_err, 1e-12);
  }

  return rep;
}

std::vector<ObstructionRow> flat_obstruction_rows(int n, int points, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("flat_obstruction_rows: n must be >= 0");
  if (points < 1) throw std::invalid_argument("flat_obstruction_rows: points must be >= 1");
  const SignTable table = calibration().table;
  std::vector<ObstructionRow> rows(points);
  parallel_for(static_cast<std::size_t>(points), [&](std::size_t idx) {
    Rng rng = Rng::for_index(seed, idx);
    BVector h = sample_spacelike(n + 1, rng);
    FlatPoint p(h);
    RhoParts r = rho(p, table);
    double hh = metric(h, h);
    rows[idx] = {static_cast<int>(idx), hh, r.rho0, std::fabs(r.rho0 - 0.5 * hh),
                 r.rho2.max_abs()};
  });
  return rows;
}

SuiteReport flat_suite(int n, int points, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "flat";
  const Calibration& cal = calibration();
  const SignTable& table = cal.table;
  const int entries = n + 1;

  {
    double fail = 1.0;
    try {
      Calibration c = calibrate(seed, 100);
      fail = (c.table == table) ? 0.0 : 1.0;
    } catch (const std::exception&) {
      fail = 1.0;
    }
    rep.add("calibration_unique", fail, 0.0);
  }

  double rho2_worst = 0.0, rho0_worst = 0.0, chi2_worst = 0.0, chi0_worst = 0.0;
  double euler_norm_worst = 0.0, euler_indep_worst = 0.0, kappa_worst = 0.0;
  double gamma1_worst = 0.0, scale_worst = 0.0, invariance_worst = 0.0, null_chi_worst = 0.0;
  for (int it = 0; it < points; ++it) {
    Rng rng = Rng::for_index(seed, 0x100 + it);
    BVector h = sample_spacelike(entries, rng);
    FlatPoint p(h);
    double hh = metric(h, h);

    RhoParts r = rho(p, table);
    rho2_worst = std::max(rho2_worst, r.rho2.max_abs());
    rho0_worst = std::max(rho0_worst, std::fabs(r.rho0 - 0.5 * hh));

    ChiParts cp = chi_parts(h, table);
    for (const auto& entry : cp.chi2.m) chi2_worst = std::max(chi2_worst, bv_max_abs(entry));
    BVector e = euler(p, table);
    chi0_worst = std::max(chi0_worst, bv_max_abs(bv_sub(cp.chi0, e)));
    chi0_worst = std::max(chi0_worst, bv_max_abs(bv_sub(e, h)));

    euler_norm_worst = std::max(euler_norm_worst, std::fabs(metric(e, e) - 2.0 * r.rho0));

    ImSplit xi_sp = random_unit_im(rng);
    if (classify(xi_sp) == Causal::Spacelike) {
      BVector alt = bv_scale(-1.0, lambda_apply(xi_sp, fundamental_field(xi_sp, h), table));
      euler_indep_worst = std::max(euler_indep_worst, bv_max_abs(bv_sub(alt, e)));
    }

    kappa_worst = std::max(kappa_worst, std::fabs(r.rho0 - kappa(ImSplit::i(), p, table)));
    kappa_worst = std::max(kappa_worst, std::fabs(r.rho0 + kappa(ImSplit::s(), p, table)));
    kappa_worst = std::max(kappa_worst, std::fabs(r.rho0 + kappa(ImSplit::t(), p, table)));

    auto g1 = gamma1(h, table);
    for (int a = 0; a < 3; ++a) {
      BVector expect = lambda_apply(ImSplit::basis(a), e, table);
      gamma1_worst = std::max(gamma1_worst, bv_max_abs(bv_sub(g1[a], expect)));
    }

    double u = rng.uniform() * 2.0 - 1.0;
    double scaled = rho0_value(bv_scale(std::exp(u), h), table);
    scale_worst =
        std::max(scale_worst, std::fabs(scaled - std::exp(2.0 * u) * r.rho0) / (1.0 + scaled));

    SplitQuaternion q = random_unit(rng);
    invariance_worst = std::max(
        invariance_worst, std::fabs(rho0_value(bv_rmul(h, conj(q)), table) - r.rho0));

    ImSplit null_xi{1, rng.uniform() > 0.5 ? 1.0 : -1.0, 0};  // norm_sq = 0
    ImSplit xi2 = random_unit_im(rng);
    BVector cx = lambda_apply(null_xi, fundamental_field(xi2, h), table);
    null_chi_worst = std::max(null_chi_worst, std::fabs(metric(cx, cx)));
  }
  rep.add("rho2_vanishing", rho2_worst, 1e-10);
  rep.add("rho0_potential", rho0_worst, 1e-12);
  rep.add("chi2_vanishing", chi2_worst, 1e-10);
  rep.add("chi0_is_euler", chi0_worst, 1e-12);
  rep.add("euler_norm_2rho0", euler_norm_worst, 1e-12);
  rep.add("euler_xi_independence", euler_indep_worst, 1e-12);
  rep.add("kappa_relations", kappa_worst, 1e-12);
  rep.add("gamma1_euler_contraction", gamma1_worst, 1e-12);
  rep.add("rho0_scaling", scale_worst, 1e-12);
  rep.add("rho0_su11_invariance", invariance_worst, 1e-12);
  rep.add("null_chi_isotropy", null_chi_worst, 1e-10);

  // Derivative-based identities on a smaller sweep.
  const int fd_points = std::min(points, 100);
  double potential_worst[3] = {0.0, 0.0, 0.0};
  double dgamma1_worst = 0.0, hessian_worst = 0.0, grad_worst = 0.0, moment_worst = 0.0;
  double fund_worst = 0.0;
  const double step = 1e-4;
  for (int it = 0; it < fd_points; ++it) {
    Rng rng = Rng::for_index(seed, 0x9000 + it);
    BVector h = sample_spacelike(entries, rng);
    FlatPoint p(h);

    const ImSplit dirs[3] = {ImSplit::i(), ImSplit::s(), ImSplit::t()};
    for (int a = 0; a < 3; ++a) {
      double res = potential_check(p, dirs[a], table, rng, 4, step);
      potential_worst[a] = std::max(potential_worst[a], res);
    }

    // d gamma1 = 2 omega by the finite-difference exterior derivative of the
    // computed covector representatives.
    {
      BVector X = random_bvector(entries, rng);
      BVector Y = random_bvector(entries, rng);
      for (int a = 0; a < 3; ++a) {
        auto comp = [&](const BVector& at, const BVector& v) {
          return metric(gamma1(at, table)[a], v);
        };
        double d = (comp(bv_add(h, bv_scale(step, X)), Y) -
                    comp(bv_sub(h, bv_scale(step, X)), Y)) /
                       (2.0 * step) -
                   (comp(bv_add(h, bv_scale(step, Y)), X) -
                    comp(bv_sub(h, bv_scale(step, Y)), X)) /
                       (2.0 * step);
        double rhs = 2.0 * omega(ImSplit::basis(a), X, Y, table);
        dgamma1_worst = std::max(dgamma1_worst, std::fabs(d - rhs) / (1.0 + std::fabs(rhs)));
      }
    }

    // Hessian of rho0 against the metric, via the Euler field (exact for the
    // linear field) and via nested differences of rho0 itself.
    {
      BVector X = random_bvector(entries, rng);
      BVector Y = random_bvector(entries, rng);
      BVector de = bv_scale(1.0 / (2.0 * step),
                            bv_sub(euler(FlatPoint(bv_add(h, bv_scale(step, X))), table),
                                   euler(FlatPoint(bv_sub(h, bv_scale(step, X))), table)));
      hessian_worst = std::max(hessian_worst, std::fabs(metric(de, Y) - metric(X, Y)));
      double quad = (rho0_value(bv_add(bv_add(h, bv_scale(step, X)), bv_scale(step, Y)), table) -
                     rho0_value(bv_add(bv_sub(h, bv_scale(step, X)), bv_scale(step, Y)), table) -
                     rho0_value(bv_sub(bv_add(h, bv_scale(step, X)), bv_scale(step, Y)), table) +
                     rho0_value(bv_sub(bv_sub(h, bv_scale(step, X)), bv_scale(step, Y)), table)) /
                    (4.0 * step * step);
      hessian_worst = std::max(hessian_worst, std::fabs(quad - metric(X, Y)));

      BVector e = euler(p, table);
      double d_rho = (rho0_value(bv_add(h, bv_scale(step, X)), table) -
                      rho0_value(bv_sub(h, bv_scale(step, X)), table)) /
                     (2.0 * step);
      grad_worst = std::max(grad_worst, std::fabs(d_rho - metric(e, X)));
    }

    // kappa as the moment map: d kappa(xi) = moment_sign * omega_xi(K_xi, .).
    {
      ImSplit xi = random_unit_im(rng);
      BVector v = random_bvector(entries, rng);
      double dk = (kappa(xi, FlatPoint(bv_add(h, bv_scale(step, v))), table) -
                   kappa(xi, FlatPoint(bv_sub(h, bv_scale(step, v))), table)) /
                  (2.0 * step);
      double w = cal.moment_sign * omega(xi, fundamental_field(xi, h), v, table);
      moment_worst = std::max(moment_worst, std::fabs(dk - w));
    }

    // Fundamental field against the finite difference of the action curve.
    {
      ImSplit xi = random_unit_im(rng);
      const double fd_step = 1e-5;
      BVector plus = bv_rmul(h, conj(exp_im(xi * fd_step)));
      BVector minus = bv_rmul(h, conj(exp_im(xi * -fd_step)));
      BVector fd = bv_scale(1.0 / (2.0 * fd_step), bv_sub(plus, minus));
      fund_worst = std::max(fund_worst, bv_max_abs(bv_sub(fd, fundamental_field(xi, h))));
    }
  }
  rep.add("potential_identity_i", potential_worst[0], 1e-6);
  rep.add("potential_identity_s", potential_worst[1], 1e-6);
  rep.add("potential_identity_t", potential_worst[2], 1e-6);
  rep.add("dgamma1_equals_2omega", dgamma1_worst, 1e-6);
  rep.add("hessian_rho0_is_metric", hessian_worst, 1e-6);
  rep.add("gradient_is_euler_dual", grad_worst, 1e-8);
  rep.add("kappa_moment_map", moment_worst, 1e-6);
  rep.add("fundamental_field_oracle", fund_worst, 1e-8);
  return rep;
}

SuiteReport sasakian_suite(int n, int points, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sasakian_suite: n must be >= 1");
  SuiteReport rep;
  rep.suite = "sasakian";
  const Calibration& cal = calibration();
  const SignTable& table = cal.table;
  const int entries = n + 1;

  std::vector<ContactReport> reports(points);
  parallel_for(static_cast<std::size_t>(points), [&](std::size_t idx) {
    Rng rng = Rng::for_index(seed, idx);
    SpherePoint p = sample_sphere_point(entries, rng);
    reports[idx] = contact_axioms(p, 8, rng, cal);
  });
  ContactReport agg;
  for (const auto& r : reports) {
    agg.phi_square = std::max(agg.phi_square, r.phi_square);
    agg.eta_of_reeb = std::max(agg.eta_of_reeb, r.eta_of_reeb);
    agg.eta_of_phi = std::max(agg.eta_of_phi, r.eta_of_phi);
    agg.metric_compat = std::max(agg.metric_compat, r.metric_compat);
    agg.d_eta = std::max(agg.d_eta, r.d_eta);
    agg.normality = std::max(agg.normality, r.normality);
    agg.bracket = std::max(agg.bracket, r.bracket);
    agg.lengths = std::max(agg.lengths, r.lengths);
  }
  rep.add("reeb_lengths", agg.lengths, 1e-10);
  rep.add("eta_duality", agg.eta_of_reeb, 1e-10);
  rep.add("phi_square", agg.phi_square, 1e-10);
  rep.add("eta_of_phi", agg.eta_of_phi, 1e-10);
  rep.add("metric_compatibility", agg.metric_compat, 1e-10);
  rep.add("d_eta", agg.d_eta, 1e-6);
  rep.add("normality", agg.normality, 1e-6);
  rep.add("bracket_relations", agg.bracket, 1e-10);

  // Horizontal bundle, the 4-form, and its invariance, on a smaller sweep.
  const int hz_points = std::min(points, 25);
  double dim_fail = 0.0, tangency_worst = 0.0;
  double omega_agree_worst = 0.0, su11_worst = 0.0, homothety_worst = 0.0;
  for (int it = 0; it < hz_points; ++it) {
    Rng rng = Rng::for_index(seed, 0x5a5a + it);
    SpherePoint p = sample_sphere_point(entries, rng);
    auto basis = horizontal_basis(p, table);
    if (static_cast<int>(basis.size()) != 4 * n) dim_fail = 1.0;

    BVector frame[4] = {p.p, reeb(1, p, table), reeb(2, p, table), reeb(3, p, table)};
    for (const auto& w : basis) {
      for (int a = 0; a < 3; ++a) {
        BVector img = lambda_apply(ImSplit::basis(a), w, table);
        for (const auto& f : frame) {
          double comp = metric(img, f) / metric(f, f);
          tangency_worst = std::max(tangency_worst, std::fabs(comp));
        }
      }
    }

    auto combo = [&]() {
      BVector v(p.p.size());
      for (const auto& u : basis) v = bv_add(v, bv_scale(rng.gaussian(), u));
      return v;
    };
    for (int rep_it = 0; rep_it < 4; ++rep_it) {
      BVector W = combo(), X = combo(), Y = combo(), Z = combo();
      double lhs = omega_hat(p, W, X, Y, Z, table);
      double rhs = omega_wedge_reference(W, X, Y, Z, table);
      omega_agree_worst =
          std::max(omega_agree_worst, std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs)));
    }

    SplitQuaternion q = random_unit(rng);
    su11_worst = std::max(su11_worst, su11_invariance_check(p, q, 4, rng, table));
    homothety_worst = std::max(homothety_worst, homothety_check(p, 0.5, 2.0, table, rng, 4));
  }
  rep.add("horizontal_dimension", dim_fail, 0.0);
  rep.add("horizontal_ist_invariance", tangency_worst, 1e-10);
  rep.add("omega_hat_agreement", omega_agree_worst, 1e-9);
  rep.add("omega_hat_su11_invariance", su11_worst, 1e-9);
  rep.add("level_set_homothety", homothety_worst, 1e-10);
  return rep;
}

}  // namespace splitgeom
