#include "splitgeom/permuting.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "splitgeom/errors.hpp"

namespace splitgeom {

FlatPoint::FlatPoint(BVector h_) : h(std::move(h_)) {
  double hh = metric(h, h);
  if (!(hh > 1e-10)) throw std::invalid_argument("FlatPoint: point is not space-like");
}

BVector fundamental_field(const ImSplit& xi, const BVector& h) {
  return bv_rmul(h, -xi.embed());
}

SpBilinear<BVector> chi(const BVector& h, const SignTable& table) {
  SpBilinear<BVector> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      out(a, b) = lambda_apply(ImSplit::basis(a), fundamental_field(ImSplit::basis(b), h), table);
  return out;
}

ChiParts chi_parts(const BVector& h, const SignTable& table) {
  auto d = decompose(chi(h, table));
  ChiParts parts;
  parts.chi0 = bv_scale(-1.0 / 3.0, d.trace);
  parts.chi1 = d.alt;
  parts.chi2 = d.sym0;
  return parts;
}

SpBilinear<BVector> gamma(const BVector& h, const SignTable& table) {
  SpBilinear<BVector> out = chi(h, table);
  for (auto& entry : out.m) entry = bv_scale(0.5, entry);
  return out;
}

std::array<BVector, 3> gamma1(const BVector& h, const SignTable& table) {
  // Alternating part of iota omega = 2 gamma, pushed through the bracket
  // identification of Lambda^2 with the imaginary basis:
  // component i <- -(s,t) slot, s <- (t,i), t <- (i,s).
  auto g = gamma(h, table);
  return {bv_sub(g(2, 1), g(1, 2)), bv_sub(g(2, 0), g(0, 2)), bv_sub(g(0, 1), g(1, 0))};
}

BVector euler(const FlatPoint& p, const SignTable& table) {
  BVector k = fundamental_field(ImSplit::i(), p.h);
  return bv_scale(-1.0, lambda_apply(ImSplit::i(), k, table));
}

RhoParts rho(const FlatPoint& p, const SignTable& table) {
  auto g1 = gamma1(p.h, table);
  RhoParts out;
  SpBilinear<double> r;
  for (int a = 0; a < 3; ++a) {
    BVector k = fundamental_field(ImSplit::basis(a), p.h);
    for (int b = 0; b < 3; ++b) {
      r(a, b) = 0.5 * metric(g1[b], k);
      out.full(a, b) = r(a, b);
    }
  }
  auto d = decompose(r);
  out.rho0 = d.trace / 3.0;
  out.rho1 = ImSplit{r(2, 1) - r(1, 2), r(2, 0) - r(0, 2), r(0, 1) - r(1, 0)};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out.rho2(a, b) = d.sym0(a, b);
  return out;
}

double kappa(const ImSplit& xi, const FlatPoint& p, const SignTable& table) {
  if (std::fabs(norm_sq(xi)) <= 1e-12)
    throw NullDirectionError("kappa: null direction");
  auto g1 = gamma1(p.h, table);
  BVector g1_xi(p.h.size());
  for (std::size_t k = 0; k < g1_xi.size(); ++k)
    g1_xi[k] = g1[0][k] * xi.x + g1[1][k] * xi.y + g1[2][k] * xi.z;
  return 0.5 * metric(g1_xi, fundamental_field(xi, p.h));
}

double rho0_value(const BVector& h, const SignTable& table) {
  return rho(FlatPoint(h), table).rho0;
}

double potential_check(const FlatPoint& p, const ImSplit& xi, const SignTable& table, Rng& rng,
                       int pairs, double step) {
  const int n = static_cast<int>(p.h.size());
  // one-form beta(v)|_h = -d rho0|_h (lambda(xi) v), with d rho0 by central
  // differences; the outer exterior derivative likewise.
  auto drho0 = [&](const BVector& at, const BVector& v) {
    BVector hp = bv_add(at, bv_scale(step, v));
    BVector hm = bv_sub(at, bv_scale(step, v));
    return (rho0_value(hp, table) - rho0_value(hm, table)) / (2.0 * step);
  };
  auto beta = [&](const BVector& at, const BVector& v) {
    return -drho0(at, lambda_apply(xi, v, table));
  };
  double worst = 0.0;
  for (int it = 0; it < pairs; ++it) {
    BVector X = random_bvector(n, rng);
    BVector Y = random_bvector(n, rng);
    double d_beta = (beta(bv_add(p.h, bv_scale(step, X)), Y) -
                     beta(bv_sub(p.h, bv_scale(step, X)), Y)) /
                        (2.0 * step) -
                    (beta(bv_add(p.h, bv_scale(step, Y)), X) -
                     beta(bv_sub(p.h, bv_scale(step, Y)), X)) /
                        (2.0 * step);
    double rhs = 2.0 * omega(xi, X, Y, table);
    worst = std::max(worst, std::fabs(d_beta - rhs) / (1.0 + std::fabs(rhs)));
  }
  return worst;
}

BVector sample_spacelike(int n_entries, Rng& rng) {
  for (;;) {
    BVector h = random_bvector(n_entries, rng);
    if (metric(h, h) > 0.2) return h;
  }
}

namespace {

/// rho2 / chi2 / antisymmetry / rho0 predicate for one candidate table.
bool table_passes(const SignTable& table, std::uint64_t seed, int points) {
  Rng rng = Rng::for_index(seed, 0x5161);
  const double tol = 1e-10;
  for (int it = 0; it < points; ++it) {
    int n = 1 + static_cast<int>(rng.next_u64() % 2);  // mix B^1 and B^2
    BVector h = sample_spacelike(n, rng);
    FlatPoint p(h);

    auto parts = chi_parts(h, table);
    for (const auto& entry : parts.chi2.m)
      if (bv_max_abs(entry) > tol) return false;
    // off-diagonal antisymmetry of chi itself
    auto x = chi(h, table);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (bv_max_abs(bv_add(x(a, b), x(b, a))) > tol) return false;

    auto r = rho(p, table);
    if (r.rho2.max_abs() > tol) return false;
    if (std::fabs(r.rho0 - 0.5 * metric(h, h)) > tol) return false;
  }
  return true;
}

}  // namespace

Calibration calibrate(std::uint64_t seed, int points) {
  int found = -1;
  for (int idx = 0; idx < 8; ++idx) {
    if (table_passes(SignTable::from_index(idx), seed, points)) {
      if (found >= 0) throw std::runtime_error("calibrate: multiple sign tables pass");
      found = idx;
    }
  }
  if (found < 0) throw std::runtime_error("calibrate: no sign table passes");

  Calibration cal;
  cal.table = SignTable::from_index(found);

  // Remaining constants: which sign/factor variant the flat data satisfies.
  Rng rng = Rng::for_index(seed, 0xca1b);
  BVector h = sample_spacelike(1, rng);
  FlatPoint p(h);

  // d kappa(xi) vs omega_xi(K_xi, .), second-order differences.
  {
    ImSplit xi = ImSplit::i();
    double step = 1e-5;
    double plus_err = 0.0, minus_err = 0.0;
    for (int it = 0; it < 4; ++it) {
      BVector v = random_bvector(1, rng);
      double dk = (kappa(xi, FlatPoint(bv_add(h, bv_scale(step, v))), cal.table) -
                   kappa(xi, FlatPoint(bv_sub(h, bv_scale(step, v))), cal.table)) /
                  (2.0 * step);
      double w = omega(xi, fundamental_field(xi, h), v, cal.table);
      plus_err += std::fabs(dk - w);
      minus_err += std::fabs(dk + w);
    }
    cal.moment_sign = (plus_err < minus_err) ? +1.0 : -1.0;
  }

  // Bracket sign of the sphere Reeb fields X_a(h) = h * q_a, computed exactly
  // from the right-multiplication operators: [X_a, X_b](h) = h (q_a q_b - q_b q_a),
  // against the cyclic relation (1/2)[X_1, X_2] = X_3.
  {
    const auto& sg = cal.table.sigma;
    SplitQuaternion q1 = ImSplit::i().embed() * static_cast<double>(sg[0]);
    SplitQuaternion q2 = ImSplit::s().embed() * static_cast<double>(-sg[1]);
    SplitQuaternion q3 = ImSplit::t().embed() * static_cast<double>(-sg[2]);
    BVector lhs = bv_scale(0.5, bv_rmul(h, mul(q1, q2) - mul(q2, q1)));
    BVector x3 = bv_rmul(h, q3);
    cal.bracket_sign = (bv_max_abs(bv_sub(lhs, x3)) < bv_max_abs(bv_add(lhs, x3))) ? +1.0 : -1.0;
  }

  cal.potential_factor = 2.0;
  cal.deta_factor = 2.0;
  cal.metric_eps = {-1.0, +1.0, +1.0};
  cal.normality_eps = cal.metric_eps;
  return cal;
}

const Calibration& calibration() {
  static Calibration cal = [] { return calibrate(0, 100); }();
  return cal;
}

}  // namespace splitgeom
