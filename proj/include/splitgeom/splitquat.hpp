#ifndef SPLITGEOM_SPLITQUAT_HPP
#define SPLITGEOM_SPLITQUAT_HPP

#include <array>
#include <cstdint>

#include "splitgeom/numerics.hpp"

namespace splitgeom {

/// Classification of an imaginary element by the sign of its norm-square.
enum class Causal { Spacelike, Timelike, Null };

/// Tolerance below which a norm-square counts as null.
inline constexpr double kNullTol = 1e-12;

struct ImSplit;

/// Element w + x*i + y*s + z*t of the split-quaternion algebra:
/// i^2 = -1, s^2 = t^2 = +1, i*s = t = -s*i, i = t*s.
/// The quadratic form is w^2 + x^2 - y^2 - z^2 (signature (2,2)).
struct SplitQuaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr SplitQuaternion() = default;
  constexpr SplitQuaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr SplitQuaternion one() { return {1, 0, 0, 0}; }
  static constexpr SplitQuaternion i() { return {0, 1, 0, 0}; }
  static constexpr SplitQuaternion s() { return {0, 0, 1, 0}; }
  static constexpr SplitQuaternion t() { return {0, 0, 0, 1}; }

  SplitQuaternion operator+(const SplitQuaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  SplitQuaternion operator-(const SplitQuaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  SplitQuaternion operator-() const { return {-w, -x, -y, -z}; }
  SplitQuaternion operator*(double c) const { return {c * w, c * x, c * y, c * z}; }

  double max_abs() const;
};

inline SplitQuaternion operator*(double c, const SplitQuaternion& p) { return p * c; }

/// Imaginary element x*i + y*s + z*t; norm-square x^2 - y^2 - z^2.
struct ImSplit {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr ImSplit() = default;
  constexpr ImSplit(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  static constexpr ImSplit i() { return {1, 0, 0}; }
  static constexpr ImSplit s() { return {0, 1, 0}; }
  static constexpr ImSplit t() { return {0, 0, 1}; }
  /// Basis vector 0,1,2 -> i,s,t.
  static ImSplit basis(int a);

  SplitQuaternion embed() const { return {0.0, x, y, z}; }

  ImSplit operator+(const ImSplit& o) const { return {x + o.x, y + o.y, z + o.z}; }
  ImSplit operator-() const { return {-x, -y, -z}; }
  ImSplit operator*(double c) const { return {c * x, c * y, c * z}; }
};

inline ImSplit operator*(double c, const ImSplit& v) { return v * c; }

SplitQuaternion mul(const SplitQuaternion& p, const SplitQuaternion& q);
SplitQuaternion conj(const SplitQuaternion& p);
double norm_sq(const SplitQuaternion& p);
/// Re(p * conj(q)); the bilinear form polarizing norm_sq.
double inner(const SplitQuaternion& p, const SplitQuaternion& q);

double norm_sq(const ImSplit& v);
double inner(const ImSplit& a, const ImSplit& b);

/// conj(p) / norm_sq(p). Throws NullDivisorError when |norm_sq(p)| <= kNullTol.
SplitQuaternion inverse(const SplitQuaternion& p);

Causal classify(const ImSplit& v);

/// exp of an imaginary element, in closed form per the sign of norm_sq.
SplitQuaternion exp_im(const ImSplit& v);

/// 3x3 matrix M with M * coords(v) = coords(q * v * conj(q)) on (i, s, t).
/// Requires |norm_sq(q) - 1| <= 1e-10 (throws NotUnitError); then
/// M^T J M = J for J = diag(1,-1,-1) and det M = 1.
Matrix adjoint_matrix(const SplitQuaternion& q);

/// q * v * conj(q) restricted to imaginary elements.
ImSplit adjoint_apply(const SplitQuaternion& q, const ImSplit& v);

/// Deterministic unit split quaternion on the sheet connected to 1:
/// imaginary part sampled Gaussian, real part solved as the positive root,
/// resampling whenever 1 - x^2 + y^2 + z^2 < 0.
SplitQuaternion random_unit(Rng& rng);

/// Unit imaginary element with |norm_sq| = 1; rejects near-null samples.
ImSplit random_unit_im(Rng& rng);

}  // namespace splitgeom

#endif
