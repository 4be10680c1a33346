#include "splitgeom/sasakian.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "splitgeom/errors.hpp"

namespace splitgeom {

namespace {

constexpr double kTau[3] = {1.0, -1.0, -1.0};

double euclid_norm(const BVector& v) {
  double acc = 0.0;
  for (const auto& q : v) acc += q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  return std::sqrt(acc);
}

double euclid_dot(const BVector& a, const BVector& b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    acc += a[k].w * b[k].w + a[k].x * b[k].x + a[k].y * b[k].y + a[k].z * b[k].z;
  return acc;
}

/// Right-multiplication generator of the a-th Reeb field (1-based):
/// X_a(h) = h * q_a.
SplitQuaternion reeb_generator(int a, const SignTable& table) {
  switch (a) {
    case 1: return ImSplit::i().embed() * static_cast<double>(table.sigma[0]);
    case 2: return ImSplit::s().embed() * static_cast<double>(-table.sigma[1]);
    case 3: return ImSplit::t().embed() * static_cast<double>(-table.sigma[2]);
    default: throw std::invalid_argument("reeb: index must be 1, 2 or 3");
  }
}

using Field = std::function<BVector(const BVector&)>;

/// [F, G](h) = DG|_h F(h) - DF|_h G(h), directional derivatives by central
/// differences with the given step.
BVector field_bracket(const Field& F, const Field& G, const BVector& h, double step) {
  BVector f = F(h);
  BVector g = G(h);
  auto dir = [&](const Field& W, const BVector& u) {
    BVector hp = bv_add(h, bv_scale(step, u));
    BVector hm = bv_sub(h, bv_scale(step, u));
    return bv_scale(1.0 / (2.0 * step), bv_sub(W(hp), W(hm)));
  };
  return bv_sub(dir(G, f), dir(F, g));
}

}  // namespace

SpherePoint::SpherePoint(BVector p_) : p(std::move(p_)) {
  if (std::fabs(metric(p, p) - 1.0) > 1e-10)
    throw std::invalid_argument("SpherePoint: |metric(p,p) - 1| > 1e-10");
}

SpherePoint sample_sphere_point(int n_entries, Rng& rng) {
  BVector h = sample_spacelike(n_entries, rng);
  return SpherePoint(bv_scale(1.0 / std::sqrt(metric(h, h)), h));
}

BVector tangent_project(const SpherePoint& p, const BVector& X) {
  double c = metric(p.p, X) / metric(p.p, p.p);
  return bv_sub(X, bv_scale(c, p.p));
}

BVector reeb(int a, const SpherePoint& p, const SignTable& table) {
  return bv_rmul(p.p, reeb_generator(a, table));
}

double eta(int a, const SpherePoint& p, const BVector& Y, const SignTable& table) {
  return kTau[a - 1] * metric(reeb(a, p, table), Y);
}

BVector phi(int a, const SpherePoint& p, const BVector& Y, const SignTable& table) {
  BVector out = lambda_apply(ImSplit::basis(a - 1), Y, table);
  return bv_add(out, bv_scale(eta(a, p, Y, table), p.p));
}

BVector reeb_bracket(int a, int b, const SpherePoint& p, const SignTable& table) {
  SplitQuaternion qa = reeb_generator(a, table);
  SplitQuaternion qb = reeb_generator(b, table);
  return bv_rmul(p.p, mul(qa, qb) - mul(qb, qa));
}

double ContactReport::max_residual() const {
  double m = phi_square;
  for (double v : {eta_of_reeb, eta_of_phi, metric_compat, d_eta, normality, bracket, lengths})
    m = std::max(m, v);
  return m;
}

ContactReport contact_axioms(const SpherePoint& p, int n_samples, Rng& rng,
                             const Calibration& cal, double step) {
  const SignTable& table = cal.table;
  const int n = static_cast<int>(p.p.size());
  ContactReport rep;
  rep.samples = n_samples;

  BVector X[3] = {reeb(1, p, table), reeb(2, p, table), reeb(3, p, table)};
  for (int a = 0; a < 3; ++a) {
    rep.lengths = std::max(rep.lengths, std::fabs(metric(X[a], X[a]) - kTau[a]));
    for (int b = 0; b < 3; ++b) {
      double expect = (a == b) ? 1.0 : 0.0;
      rep.eta_of_reeb =
          std::max(rep.eta_of_reeb, std::fabs(eta(a + 1, p, X[b], table) - expect));
    }
    rep.eta_of_phi = std::max(rep.eta_of_phi, bv_max_abs(phi(a + 1, p, X[a], table)));
  }

  // (1/2)[X_a, X_b] against the calibrated sign of the cyclic relations
  // (exact: the fields are linear).
  {
    struct Rel { int a, b, c; double rhs; };
    const Rel rels[3] = {{1, 2, 3, +1.0}, {2, 3, 1, -1.0}, {3, 1, 2, +1.0}};
    for (const auto& r : rels) {
      BVector lhs = bv_scale(0.5, reeb_bracket(r.a, r.b, p, table));
      BVector rhs = bv_scale(cal.bracket_sign * r.rhs, X[r.c - 1]);
      rep.bracket = std::max(rep.bracket, bv_max_abs(bv_sub(lhs, rhs)));
    }
  }

  // Linear ambient extensions used by the derivative-based checks.
  auto eta_ext = [&](int a, const BVector& h, const BVector& v) {
    return kTau[a - 1] * metric(bv_rmul(h, reeb_generator(a, table)), v);
  };
  auto phi_field = [&](int a, const Field& F) -> Field {
    return [&, a, F](const BVector& h) {
      BVector val = F(h);
      BVector out = lambda_apply(ImSplit::basis(a - 1), val, table);
      return bv_add(out, bv_scale(eta_ext(a, h, val), h));
    };
  };

  for (int it = 0; it < n_samples; ++it) {
    BVector Yv = tangent_project(p, random_bvector(n, rng));
    BVector Zv = tangent_project(p, random_bvector(n, rng));
    double ny = euclid_norm(Yv), nz = euclid_norm(Zv);
    if (ny < 1e-8 || nz < 1e-8) continue;
    Yv = bv_scale(1.0 / ny, Yv);
    Zv = bv_scale(1.0 / nz, Zv);

    for (int a = 1; a <= 3; ++a) {
      const double eps = cal.metric_eps[a - 1];
      const double tau = kTau[a - 1];
      BVector phiY = phi(a, p, Yv, table);
      BVector phiZ = phi(a, p, Zv, table);

      BVector lhs_sq = phi(a, p, phiY, table);
      BVector rhs_sq = bv_scale(eps, bv_sub(Yv, bv_scale(eta(a, p, Yv, table), X[a - 1])));
      rep.phi_square = std::max(rep.phi_square, bv_max_abs(bv_sub(lhs_sq, rhs_sq)));

      rep.eta_of_phi = std::max(rep.eta_of_phi, std::fabs(eta(a, p, phiY, table)));

      double mc = metric(phiY, phiZ) -
                  eps * (-metric(Yv, Zv) + tau * eta(a, p, Yv, table) * eta(a, p, Zv, table));
      rep.metric_compat = std::max(rep.metric_compat, std::fabs(mc));

      // d eta by central differences of the linear extension along ambient lines.
      double de = (eta_ext(a, bv_add(p.p, bv_scale(step, Yv)), Zv) -
                   eta_ext(a, bv_sub(p.p, bv_scale(step, Yv)), Zv)) /
                      (2.0 * step) -
                  (eta_ext(a, bv_add(p.p, bv_scale(step, Zv)), Yv) -
                   eta_ext(a, bv_sub(p.p, bv_scale(step, Zv)), Yv)) /
                      (2.0 * step);
      double deta_val = cal.deta_factor * metric(phiY, Zv);
      rep.d_eta = std::max(rep.d_eta, std::fabs(de - deta_val));

      // Nijenhuis tensor from tangent-projected polynomial extensions.
      Field Yf = [&, Yv](const BVector& h) { return bv_sub(Yv, bv_scale(metric(h, Yv), h)); };
      Field Zf = [&, Zv](const BVector& h) { return bv_sub(Zv, bv_scale(metric(h, Zv), h)); };
      Field phiYf = phi_field(a, Yf);
      Field phiZf = phi_field(a, Zf);

      BVector br_pp = field_bracket(phiYf, phiZf, p.p, step);
      BVector br_yz = field_bracket(Yf, Zf, p.p, step);
      BVector br_y_pz = field_bracket(Yf, phiZf, p.p, step);
      BVector br_py_z = field_bracket(phiYf, Zf, p.p, step);

      BVector nij = bv_add(br_pp, phi(a, p, phi(a, p, br_yz, table), table));
      nij = bv_sub(nij, phi(a, p, br_y_pz, table));
      nij = bv_sub(nij, phi(a, p, br_py_z, table));

      BVector normal_rhs = bv_scale(cal.normality_eps[a - 1] * de, X[a - 1]);
      rep.normality = std::max(rep.normality, bv_max_abs(bv_sub(nij, normal_rhs)));
    }
  }
  return rep;
}

std::vector<BVector> horizontal_basis(const SpherePoint& p, const SignTable& table) {
  const int n = static_cast<int>(p.p.size());
  const int ambient = 4 * n;
  const int want = ambient - 4;

  BVector frame[4] = {p.p, reeb(1, p, table), reeb(2, p, table), reeb(3, p, table)};
  double frame_norm[4];
  for (int a = 0; a < 4; ++a) {
    frame_norm[a] = metric(frame[a], frame[a]);
    if (std::fabs(frame_norm[a]) < 1e-8)
      throw std::runtime_error("horizontal_basis: degenerate vertical frame");
  }

  std::vector<BVector> accepted;       // returned basis
  std::vector<BVector> orthonormal;    // Euclidean ortho copies, for rank detection
  for (int idx = 0; idx < ambient && static_cast<int>(accepted.size()) < want; ++idx) {
    BVector v(n);
    SplitQuaternion e{};
    switch (idx % 4) {
      case 0: e.w = 1; break;
      case 1: e.x = 1; break;
      case 2: e.y = 1; break;
      case 3: e.z = 1; break;
    }
    v[idx / 4] = e;
    for (int a = 0; a < 4; ++a)
      v = bv_sub(v, bv_scale(metric(v, frame[a]) / frame_norm[a], frame[a]));

    BVector w = v;
    for (const auto& u : orthonormal) w = bv_sub(w, bv_scale(euclid_dot(w, u), u));
    double nw = euclid_norm(w);
    if (nw < 1e-6) continue;
    orthonormal.push_back(bv_scale(1.0 / nw, w));
    accepted.push_back(v);
  }
  if (static_cast<int>(accepted.size()) != want)
    throw std::runtime_error("horizontal_basis: failed to span the horizontal space");
  return accepted;
}

namespace {

using TwoForm = std::function<double(const BVector&, const BVector&)>;

double wedge4(const TwoForm& a, const TwoForm& b, const BVector& W, const BVector& X,
              const BVector& Y, const BVector& Z) {
  return a(W, X) * b(Y, Z) - a(W, Y) * b(X, Z) + a(W, Z) * b(X, Y) + b(W, X) * a(Y, Z) -
         b(W, Y) * a(X, Z) + b(W, Z) * a(X, Y);
}

}  // namespace

double omega_hat(const SpherePoint& p, const BVector& W, const BVector& X, const BVector& Y,
                 const BVector& Z, const SignTable& table) {
  // theta_a = g(Phi_a ., .) + eta_b ^ eta_c, (a, b, c) cyclic.
  auto theta = [&](int a) -> TwoForm {
    int b = a % 3 + 1;
    int c = b % 3 + 1;
    return [&, a, b, c](const BVector& U, const BVector& V) {
      double beta = metric(phi(a, p, U, table), V);
      double ee = eta(b, p, U, table) * eta(c, p, V, table) -
                  eta(b, p, V, table) * eta(c, p, U, table);
      return beta + ee;
    };
  };
  TwoForm t1 = theta(1), t2 = theta(2), t3 = theta(3);
  return wedge4(t1, t1, W, X, Y, Z) - wedge4(t2, t2, W, X, Y, Z) - wedge4(t3, t3, W, X, Y, Z);
}

double omega_wedge_reference(const BVector& W, const BVector& X, const BVector& Y, const BVector& Z,
                             const SignTable& table) {
  auto w = [&](int a) -> TwoForm {
    return [&, a](const BVector& U, const BVector& V) {
      return omega(ImSplit::basis(a), U, V, table);
    };
  };
  TwoForm w1 = w(0), w2 = w(1), w3 = w(2);
  return wedge4(w1, w1, W, X, Y, Z) - wedge4(w2, w2, W, X, Y, Z) - wedge4(w3, w3, W, X, Y, Z);
}

double su11_invariance_check(const SpherePoint& p, const SplitQuaternion& q, int n_samples,
                             Rng& rng, const SignTable& table) {
  if (std::fabs(norm_sq(q) - 1.0) > 1e-10)
    throw NotUnitError("su11_invariance_check: q is not a unit");
  auto basis = horizontal_basis(p, table);
  SpherePoint pq(bv_rmul(p.p, conj(q)));

  auto combo = [&](Rng& r) {
    BVector v(p.p.size());
    for (const auto& u : basis) v = bv_add(v, bv_scale(r.gaussian(), u));
    return bv_scale(1.0 / std::max(euclid_norm(v), 1e-12), v);
  };

  double worst = 0.0;
  for (int it = 0; it < n_samples; ++it) {
    BVector W = combo(rng), X = combo(rng), Y = combo(rng), Z = combo(rng);
    double before = omega_hat(p, W, X, Y, Z, table);
    double after = omega_hat(pq, bv_rmul(W, conj(q)), bv_rmul(X, conj(q)), bv_rmul(Y, conj(q)),
                             bv_rmul(Z, conj(q)), table);
    worst = std::max(worst, std::fabs(before - after));
  }
  return worst;
}

double homothety_check(const SpherePoint& p, double c1, double c2, const SignTable& table,
                       Rng& rng, int n_samples) {
  // Radial correspondence from the unit level: h_c = sqrt(2c) p lies on the
  // rho0 = c level set and tangents scale with the same factor, so the
  // induced Gram matrices at corresponding points have ratio c1/c2.
  const int n = static_cast<int>(p.p.size());
  BVector h1 = bv_scale(std::sqrt(2.0 * c1), p.p);
  BVector h2 = bv_scale(std::sqrt(2.0 * c2), p.p);
  double worst = std::max(std::fabs(rho0_value(h1, table) - c1),
                          std::fabs(rho0_value(h2, table) - c2));
  for (int it = 0; it < n_samples; ++it) {
    BVector Y = tangent_project(p, random_bvector(n, rng));
    BVector Z = tangent_project(p, random_bvector(n, rng));
    double g1 = metric(bv_scale(std::sqrt(2.0 * c1), Y), bv_scale(std::sqrt(2.0 * c1), Z));
    double g2 = metric(bv_scale(std::sqrt(2.0 * c2), Y), bv_scale(std::sqrt(2.0 * c2), Z));
    worst = std::max(worst, std::fabs(g1 - (c1 / c2) * g2));
  }
  return worst;
}

}  // namespace splitgeom
