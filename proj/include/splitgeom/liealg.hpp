#ifndef SPLITGEOM_LIEALG_HPP
#define SPLITGEOM_LIEALG_HPP

#include <string>
#include <vector>

namespace splitgeom {

/// Coefficient vector of a Lie-algebra element in the defining basis.
using LieVector = std::vector<double>;

/// Per-invariant residuals of a structure-constant check.
struct AlgebraReport {
  double antisymmetry = 0.0;   // max |c[i][j][k] + c[j][i][k]|
  double jacobi = 0.0;         // max Jacobi-identity residual over basis triples
  double ad_invariance = 0.0;  // max |<[x,y],z> - <x,[y,z]>| over basis triples
  double ip_symmetry = 0.0;    // max |ip - ip^T|
  double ip_min_eigenvalue = 0.0;
  bool ok = false;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k and an ad-invariant inner product.
/// Values are immutable after construction.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<double> structure_constants, std::vector<double> inner_product,
             std::string name = "");

  /// su(2) with [e1,e2] = e3 cyclic and the identity inner product.
  static LieAlgebra su2();

  /// Reads {"dim": n, "c": [[[...]]], "ip": [[...]]} from a JSON file.
  static LieAlgebra from_json_file(const std::string& path);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  double c(int i, int j, int k) const { return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]; }
  double ip(int i, int j) const { return ip_[static_cast<std::size_t>(i) * dim_ + j]; }

  LieVector zero() const { return LieVector(dim_, 0.0); }
  LieVector basis(int k) const;

  LieVector bracket(const LieVector& x, const LieVector& y) const;
  double inner(const LieVector& x, const LieVector& y) const;
  double norm_sq(const LieVector& x) const { return inner(x, x); }

  /// Evaluates the three type invariants; `ok` uses tolerance 1e-12
  /// (and requires ip to be symmetric positive definite).
  AlgebraReport check() const;

 private:
  int dim_;
  std::vector<double> c_;   // dim^3, [i][j][k]
  std::vector<double> ip_;  // dim^2
  std::string name_;
};

LieVector lv_add(const LieVector& a, const LieVector& b);
LieVector lv_sub(const LieVector& a, const LieVector& b);
LieVector lv_scale(double c, const LieVector& a);
double lv_max_abs(const LieVector& a);

}  // namespace splitgeom

#endif
