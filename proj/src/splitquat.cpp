#include "splitgeom/splitquat.hpp"

#include <cmath>
#include <stdexcept>

#include "splitgeom/errors.hpp"

namespace splitgeom {

double SplitQuaternion::max_abs() const {
  return std::max(std::max(std::fabs(w), std::fabs(x)), std::max(std::fabs(y), std::fabs(z)));
}

ImSplit ImSplit::basis(int a) {
  switch (a) {
    case 0: return ImSplit::i();
    case 1: return ImSplit::s();
    case 2: return ImSplit::t();
    default: throw std::invalid_argument("ImSplit::basis: index out of range");
  }
}

SplitQuaternion mul(const SplitQuaternion& p, const SplitQuaternion& q) {
  // Expansion of the relations i^2 = -1, s^2 = t^2 = 1, is = t = -si.
  return {p.w * q.w - p.x * q.x + p.y * q.y + p.z * q.z,
          p.w * q.x + p.x * q.w - p.y * q.z + p.z * q.y,
          p.w * q.y + p.y * q.w - p.x * q.z + p.z * q.x,
          p.w * q.z + p.z * q.w + p.x * q.y - p.y * q.x};
}

SplitQuaternion conj(const SplitQuaternion& p) { return {p.w, -p.x, -p.y, -p.z}; }

double norm_sq(const SplitQuaternion& p) { return p.w * p.w + p.x * p.x - p.y * p.y - p.z * p.z; }

double inner(const SplitQuaternion& p, const SplitQuaternion& q) {
  return p.w * q.w + p.x * q.x - p.y * q.y - p.z * q.z;
}

double norm_sq(const ImSplit& v) { return v.x * v.x - v.y * v.y - v.z * v.z; }

double inner(const ImSplit& a, const ImSplit& b) { return a.x * b.x - a.y * b.y - a.z * b.z; }

SplitQuaternion inverse(const SplitQuaternion& p) {
  double n = norm_sq(p);
  if (std::fabs(n) <= kNullTol) {
    throw NullDivisorError("inverse: norm_sq vanishes (zero divisor)");
  }
  return conj(p) * (1.0 / n);
}

Causal classify(const ImSplit& v) {
  double n = norm_sq(v);
  if (n > kNullTol) return Causal::Spacelike;
  if (n < -kNullTol) return Causal::Timelike;
  return Causal::Null;
}

SplitQuaternion exp_im(const ImSplit& v) {
  double n = norm_sq(v);
  double re, fac;
  if (n > kNullTol) {
    double r = std::sqrt(n);
    re = std::cos(r);
    fac = std::sin(r) / r;
  } else if (n < -kNullTol) {
    double r = std::sqrt(-n);
    re = std::cosh(r);
    fac = std::sinh(r) / r;
  } else {
    re = 1.0;
    fac = 1.0;
  }
  return {re, fac * v.x, fac * v.y, fac * v.z};
}

Matrix adjoint_matrix(const SplitQuaternion& q) {
  if (std::fabs(norm_sq(q) - 1.0) > 1e-10) {
    throw NotUnitError("adjoint_matrix: |norm_sq(q) - 1| > 1e-10");
  }
  Matrix m(3);
  const SplitQuaternion qc = conj(q);
  for (int b = 0; b < 3; ++b) {
    SplitQuaternion img = mul(mul(q, ImSplit::basis(b).embed()), qc);
    m(0, b) = img.x;
    m(1, b) = img.y;
    m(2, b) = img.z;
  }
  return m;
}

ImSplit adjoint_apply(const SplitQuaternion& q, const ImSplit& v) {
  SplitQuaternion img = mul(mul(q, v.embed()), conj(q));
  return {img.x, img.y, img.z};
}

SplitQuaternion random_unit(Rng& rng) {
  for (;;) {
    double x = rng.gaussian() * 0.5;
    double y = rng.gaussian() * 0.5;
    double z = rng.gaussian() * 0.5;
    double w2 = 1.0 - x * x + y * y + z * z;
    if (w2 < 0.0) continue;  // no real solution on this draw
    return {std::sqrt(w2), x, y, z};
  }
}

ImSplit random_unit_im(Rng& rng) {
  for (;;) {
    ImSplit v{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    double n = norm_sq(v);
    if (std::fabs(n) < 0.05) continue;  // stay clear of the null cone
    double r = std::sqrt(std::fabs(n));
    return v * (1.0 / r);
  }
}

}  // namespace splitgeom
