#include "splitgeom/bmodule.hpp"

#include <cmath>
#include <stdexcept>

#include "splitgeom/errors.hpp"

namespace splitgeom {

BMatrix BMatrix::identity(int n) {
  BMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = SplitQuaternion::one();
  return m;
}

SignTable SignTable::from_index(int idx) {
  if (idx < 0 || idx > 7) throw std::invalid_argument("SignTable::from_index: out of range");
  SignTable t;
  t.sigma = {(idx & 1) ? -1 : +1, (idx & 2) ? -1 : +1, (idx & 4) ? -1 : +1};
  return t;
}

BVector bv_add(const BVector& a, const BVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bv_add: length mismatch");
  BVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

BVector bv_sub(const BVector& a, const BVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bv_sub: length mismatch");
  BVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

BVector bv_scale(double c, const BVector& a) {
  BVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * c;
  return out;
}

double bv_max_abs(const BVector& a) {
  double m = 0.0;
  for (const auto& q : a) m = std::max(m, q.max_abs());
  return m;
}

BVector bv_rmul(const BVector& a, const SplitQuaternion& q) {
  BVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = mul(a[k], q);
  return out;
}

double metric(const BVector& alpha, const BVector& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("metric: length mismatch");
  double acc = 0.0;
  for (std::size_t k = 0; k < alpha.size(); ++k) acc += inner(alpha[k], beta[k]);
  return acc;
}

BVector lambda_apply(const ImSplit& xi, const BVector& alpha, const SignTable& table) {
  SplitQuaternion r{0.0, table.sigma[0] * xi.x, table.sigma[1] * xi.y, table.sigma[2] * xi.z};
  return bv_rmul(alpha, r);
}

double omega(const ImSplit& xi, const BVector& X, const BVector& Y, const SignTable& table) {
  return metric(lambda_apply(xi, X, table), Y);
}

bool is_sp_matrix(const BMatrix& A) {
  const int n = A.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      SplitQuaternion acc = (i == j) ? SplitQuaternion{-1, 0, 0, 0} : SplitQuaternion{};
      for (int k = 0; k < n; ++k) acc = acc + mul(A(i, k), conj(A(j, k)));
      worst = std::max(worst, acc.max_abs());
    }
  }
  return worst <= 1e-10;
}

BVector sp_action(const BMatrix& A, const SplitQuaternion& xi, const BVector& q) {
  if (A.n() != static_cast<int>(q.size()))
    throw std::invalid_argument("sp_action: size mismatch");
  if (!is_sp_matrix(A)) throw NotSymplecticError("sp_action: A conj(A)^T != id");
  if (std::fabs(norm_sq(xi) - 1.0) > 1e-10)
    throw NotUnitError("sp_action: xi is not a unit");
  const int n = A.n();
  BVector out(q.size());
  const SplitQuaternion xic = conj(xi);
  for (int i = 0; i < n; ++i) {
    SplitQuaternion acc{};
    for (int j = 0; j < n; ++j) acc = acc + mul(A(i, j), q[j]);
    out[i] = mul(acc, xic);
  }
  return out;
}

Matrix gram_matrix(int n) {
  Matrix g(4 * n);
  auto basis_vec = [n](int idx) {
    BVector v(n);
    SplitQuaternion e{};
    switch (idx % 4) {
      case 0: e.w = 1; break;
      case 1: e.x = 1; break;
      case 2: e.y = 1; break;
      case 3: e.z = 1; break;
    }
    v[idx / 4] = e;
    return v;
  };
  for (int i = 0; i < 4 * n; ++i)
    for (int j = 0; j < 4 * n; ++j) g(i, j) = metric(basis_vec(i), basis_vec(j));
  return g;
}

BVector random_bvector(int n, Rng& rng) {
  BVector v(n);
  for (int k = 0; k < n; ++k)
    v[k] = {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
  return v;
}

}  // namespace splitgeom
