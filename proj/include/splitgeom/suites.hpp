#ifndef SPLITGEOM_SUITES_HPP
#define SPLITGEOM_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "splitgeom/sasakian.hpp"

namespace splitgeom {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  void add(const std::string& name, double residual, double tolerance);
};

/// Split-quaternion algebra invariants: multiplication table, norm
/// multiplicativity, associativity, inverses, adjoint orthogonality and
/// homomorphism. `inject_sign_flip` flips the i*s entry of the internal
/// product table (negative control; the suite must then fail).
SuiteReport algebra_suite(std::uint64_t seed, int pairs, bool inject_sign_flip = false);

struct ObstructionRow {
  int index = 0;
  double metric_hh = 0.0;
  double rho0 = 0.0;
  double rho0_err = 0.0;       // |rho0 - 1/2 metric(h,h)|
  double rho2_maxnorm = 0.0;
};

/// Per-point rho0 / ||rho2|| sweep on (B^{n+1})*_+, parallel over points,
/// deterministic per (seed, index).
std::vector<ObstructionRow> flat_obstruction_rows(int n, int points, std::uint64_t seed);

/// Flat-model identity suite (potentials, gamma1, kappa, scaling,
/// invariance); tolerances as stated per check.
SuiteReport flat_suite(int n, int points, std::uint64_t seed);

/// Split 3-Sasakian verification on S_+ in B^{n+1} over `points` sphere
/// points, plus horizontal / 4-form / invariance checks.
SuiteReport sasakian_suite(int n, int points, std::uint64_t seed);

}  // namespace splitgeom

#endif
