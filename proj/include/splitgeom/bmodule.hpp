#ifndef SPLITGEOM_BMODULE_HPP
#define SPLITGEOM_BMODULE_HPP

#include <array>
#include <vector>

#include "splitgeom/numerics.hpp"
#include "splitgeom/splitquat.hpp"

namespace splitgeom {

/// Element of the left module B^n: n split-quaternion entries.
/// The metric is the entrywise sum of the (2,2) forms, signature (2n, 2n).
using BVector = std::vector<SplitQuaternion>;

/// Dense n x n matrix over the split quaternions.
class BMatrix {
 public:
  BMatrix() = default;
  explicit BMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static BMatrix identity(int n);

  int n() const { return n_; }
  SplitQuaternion& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const SplitQuaternion& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<SplitQuaternion> a_;
};

/// Signs applied to right multiplication by (i, s, t) in the linear map
/// lambda. The algebra admits eight candidate tables; the calibration in
/// flat.hpp selects the one under which the flat-model identities close.
struct SignTable {
  std::array<int, 3> sigma{+1, +1, +1};

  bool operator==(const SignTable& o) const { return sigma == o.sigma; }
  /// Enumerates all eight tables, index 0..7.
  static SignTable from_index(int idx);
};

BVector bv_add(const BVector& a, const BVector& b);
BVector bv_sub(const BVector& a, const BVector& b);
BVector bv_scale(double c, const BVector& a);
double bv_max_abs(const BVector& a);
/// Entrywise right multiplication a_k -> a_k * q.
BVector bv_rmul(const BVector& a, const SplitQuaternion& q);

// Found by argument-dependent lookup; lets generic 3x3 tensor code treat
// BVector entries like scalars.
inline BVector operator+(const BVector& a, const BVector& b) { return bv_add(a, b); }
inline BVector operator-(const BVector& a, const BVector& b) { return bv_sub(a, b); }
inline BVector operator*(double c, const BVector& a) { return bv_scale(c, a); }

/// <alpha, beta> = sum_k Re(alpha_k * conj(beta_k)). Symmetric, signature (2n,2n).
double metric(const BVector& alpha, const BVector& beta);

/// lambda(xi) alpha: entrywise right multiplication by
/// sigma_1 xi_1 i + sigma_2 xi_2 s + sigma_3 xi_3 t.
/// For unit xi this squares to -norm_sq(xi) * id.
BVector lambda_apply(const ImSplit& xi, const BVector& alpha, const SignTable& table);

/// omega_xi(X, Y) = metric(lambda(xi) X, Y); antisymmetric in X, Y.
double omega(const ImSplit& xi, const BVector& X, const BVector& Y, const SignTable& table);

/// Membership test for Sp(n, B): max-norm of A * conj(A)^T - id <= 1e-10.
bool is_sp_matrix(const BMatrix& A);

/// (A, xi) . q = A q conj(xi) for A in Sp(n,B) and unit xi.
/// Throws NotSymplecticError / NotUnitError when the preconditions fail.
BVector sp_action(const BMatrix& A, const SplitQuaternion& xi, const BVector& q);

/// Gram matrix of the metric on the standard real basis of B^n (4n x 4n).
Matrix gram_matrix(int n);

/// Gaussian-coordinate vector in B^n.
BVector random_bvector(int n, Rng& rng);

}  // namespace splitgeom

#endif
