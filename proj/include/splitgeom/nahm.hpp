#ifndef SPLITGEOM_NAHM_HPP
#define SPLITGEOM_NAHM_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "splitgeom/liealg.hpp"
#include "splitgeom/numerics.hpp"
#include "splitgeom/splitquat.hpp"

namespace splitgeom {

/// Quadruple (T0, T1, T2, T3) of Lie-algebra values at one time.
struct NahmState {
  LieVector T0, T1, T2, T3;

  static NahmState zero(const LieAlgebra& g);
};

/// Time-gridded solution on [0, length]: uniform grid, states.size() == steps+1.
struct NahmTrajectory {
  const LieAlgebra* algebra = nullptr;
  double length = 1.0;
  std::vector<NahmState> states;

  int steps() const { return static_cast<int>(states.size()) - 1; }
  double dt() const { return length / steps(); }
  double time(int i) const { return length * i / steps(); }
};

/// Endpoint (shooting) map of the second-order degeneracy equation and its
/// singularity indicators. The trajectory is flagged degenerate when
/// min_singular_value <= 1e-8 * ||endpoint_map||_2.
struct DegeneracyReport {
  Matrix endpoint_map;
  double det = 0.0;
  double min_singular_value = 0.0;
  double max_singular_value = 0.0;
  bool degenerate = false;
};

struct ScanSample {
  double param = 0.0;
  double det = 0.0;
  double min_singular_value = 0.0;
};

struct ScanResult {
  std::vector<ScanSample> samples;
  std::vector<double> roots;
};

/// Right-hand side of the evolution: dT1 = -[T0,T1] - [T2,T3] and cyclic
/// variants with the split signs; dT0 = 0 (T0 is carried, not evolved).
/// `reduced` drops the [T0, .] terms.
NahmState rhs(const LieAlgebra& g, const NahmState& state, bool reduced);

/// Classical fixed-step RK4 from `init` over [0, length] with `steps` >= 2
/// subintervals. Throws IntegrationBlowupError on non-finite values.
NahmTrajectory integrate(const LieAlgebra& g, const NahmState& init, double length, int steps,
                         bool reduced);

/// 2|T1|^2 + |T2|^2 + |T3|^2; constant along solutions.
double conserved(const LieAlgebra& g, const NahmState& state);

struct MomentResidual {
  double mu_i = 0.0, mu_s = 0.0, mu_t = 0.0;
  double max() const;
};

/// Sup-norms of mu_I = dT1 + [T0,T1] + [T2,T3] (and cyclic variants) along
/// the grid; time derivatives by 5-point stencils.
MomentResidual moment_residual(const NahmTrajectory& traj);

/// Gauge action T0 -> g T0 g^-1 - dg g^-1, Ti -> g Ti g^-1 along a grid of
/// SU(2) matrices; dg by 5-point stencils. su(2) only (UnsupportedError).
using Su2Matrix = std::array<std::complex<double>, 4>;  // row-major 2x2
NahmTrajectory gauge_transform(const std::vector<Su2Matrix>& g_path, const NahmTrajectory& traj);

struct GaugeFixResult {
  NahmTrajectory trajectory;
  std::vector<Su2Matrix> gauge_path;
  Su2Matrix g_end;  // g(1); reported, not normalized away
};

/// Solves dg = g T0 with g(0) = id by RK4 on the trajectory grid and applies
/// the gauge action; the output has sup|T0| at finite-difference level.
GaugeFixResult gauge_fix_T0(const NahmTrajectory& traj);

/// Scaling map: T(t) -> a T(a t) on [0, 1], realized by re-integrating the
/// reduced flow from the initial state with step a/steps (this both restricts
/// for a < 1 and extends past t = 1 for a > 1). Requires a > 0 and a reduced
/// solution (moment residual <= 1e-6).
NahmTrajectory scaling(double a, const NahmTrajectory& traj);

/// (q, T) -> q T conj(q): T0 fixed, (T1,T2,T3) rotated by adjoint_matrix(q)
/// at every node. Throws NotUnitError unless |norm_sq(q) - 1| <= 1e-10.
NahmTrajectory su11_act(const SplitQuaternion& q, const NahmTrajectory& traj);

/// For each basis vector v: integrates xi'' + [T0, xi'] + [dT0, xi]
/// + sum_i a_ii [Ti, [Ti, xi]] = 0 (a = (1,1,-1,-1)) with xi(0) = 0,
/// xi'(0) = v on the trajectory grid, and assembles v -> xi(1).
DegeneracyReport degeneracy_indicator(const NahmTrajectory& traj);

/// Families of constant initial data for parameter scans.
enum class ScanFamily { ConstT1, ConstT2 };

/// Scans the degeneracy indicator over params in [from, to]; roots located by
/// det sign changes (bisection) and by local minima of the smallest singular
/// value (golden section; needed when the singularity has even multiplicity,
/// e.g. the constant-T2 family where two components vanish together), both
/// refined to 1e-6.
ScanResult degeneracy_scan(const LieAlgebra& g, ScanFamily family, double from, double to,
                           int n_samples, int steps = 1000);

NahmState scan_family_init(const LieAlgebra& g, ScanFamily family, double param);

}  // namespace splitgeom

#endif
