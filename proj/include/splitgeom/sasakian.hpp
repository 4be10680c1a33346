#ifndef SPLITGEOM_SASAKIAN_HPP
#define SPLITGEOM_SASAKIAN_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "splitgeom/bmodule.hpp"
#include "splitgeom/permuting.hpp"

namespace splitgeom {

/// Point of the positive pseudo-sphere S_+ = { p : metric(p,p) = 1 }.
struct SpherePoint {
  BVector p;
  explicit SpherePoint(BVector p_);  // enforces |metric(p,p) - 1| <= 1e-10
};

/// Per-axiom max residuals of the split 3-Sasakian verification.
struct ContactReport {
  double phi_square = 0.0;    // Phi_a^2 - eps_a (id - eta_a (x) X_a)
  double eta_of_reeb = 0.0;   // eta_a(X_b) - delta_ab
  double eta_of_phi = 0.0;    // eta_a(Phi_a Y) and Phi_a(X_a)
  double metric_compat = 0.0; // g(Phi X, Phi Y) - eps (-g(X,Y) + tau eta eta)
  double d_eta = 0.0;         // d eta_a - deta_factor * g(Phi_a ., .)
  double normality = 0.0;     // N_Phi_a - normality_eps_a * d eta_a (x) X_a
  double bracket = 0.0;       // (1/2)[X_a,X_b] - bracket_sign * cyclic table
  double lengths = 0.0;       // g(X_a, X_a) - (1, -1, -1)
  int samples = 0;

  double max_residual() const;
};

/// Rescaled Gaussian sample of S_+ (rejects non-space-like draws).
SpherePoint sample_sphere_point(int n_entries, Rng& rng);

/// Projection onto T_p S_+ = { X : g(p, X) = 0 }, subtracting along p.
BVector tangent_project(const SpherePoint& p, const BVector& X);

/// Reeb fields X_1 = I E, X_2 = -S E, X_3 = -T E with E = p;
/// lengths (1, -1, -1). `a` is 1-based per the (i, s, t) labels.
BVector reeb(int a, const SpherePoint& p, const SignTable& table);

/// eta_a(Y) = tau_a g(X_a, Y), tau = (1, -1, -1).
double eta(int a, const SpherePoint& p, const BVector& Y, const SignTable& table);

/// Phi_a(Y) = lambda(xi_a) Y + eta_a(Y) E.
BVector phi(int a, const SpherePoint& p, const BVector& Y, const SignTable& table);

/// Exact field bracket [X_a, X_b](p) = p * (q_b q_a - q_a q_b) of the linear
/// Reeb fields, where X_a(h) = h * q_a.
BVector reeb_bracket(int a, int b, const SpherePoint& p, const SignTable& table);

/// Runs every contact axiom at p over `n_samples` random tangent vectors.
/// Derivative-based residuals (d_eta, normality) use central differences of
/// polynomial ambient extensions with the given step, then tangent projection.
ContactReport contact_axioms(const SpherePoint& p, int n_samples, Rng& rng,
                             const Calibration& cal, double step = 1e-4);

/// Basis of the 4n-dimensional horizontal space H = intersection ker eta_a,
/// obtained by projecting ambient basis vectors off span{p, X_1, X_2, X_3}.
/// Throws std::runtime_error on numerical degeneration.
std::vector<BVector> horizontal_basis(const SpherePoint& p, const SignTable& table);

/// The 4-form Omega = theta_1^theta_1 - theta_2^theta_2 - theta_3^theta_3
/// with theta_a = g(Phi_a ., .) + eta_b ^ eta_c, evaluated on a 4-tuple.
double omega_hat(const SpherePoint& p, const BVector& W, const BVector& X, const BVector& Y,
                 const BVector& Z, const SignTable& table);

/// Same 4-tuple evaluation of i* omega_1 ^ i* omega_1 - ... (pullbacks of the
/// ambient 2-forms); agrees with omega_hat on horizontal tuples.
double omega_wedge_reference(const BVector& W, const BVector& X, const BVector& Y, const BVector& Z,
                             const SignTable& table);

/// Compares omega_hat at p on horizontal tuples with its value at p*conj(q)
/// on right-translated tuples; returns the max difference over samples.
double su11_invariance_check(const SpherePoint& p, const SplitQuaternion& q, int n_samples,
                             Rng& rng, const SignTable& table);

/// Gram-matrix ratio check between the level sets of rho0 through p and
/// through sqrt(c2/c1) * p; returns the max deviation from the ratio c1/c2.
double homothety_check(const SpherePoint& p, double c1, double c2, const SignTable& table,
                       Rng& rng, int n_samples);

}  // namespace splitgeom

#endif
