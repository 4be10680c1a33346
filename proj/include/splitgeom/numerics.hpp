#ifndef SPLITGEOM_NUMERICS_HPP
#define SPLITGEOM_NUMERICS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace splitgeom {

/// Deterministic pseudo-random stream (splitmix64 core, Box-Muller normals).
/// Chosen over <random> distributions so that outputs are bit-identical
/// across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for element `index` of a sweep seeded by `seed`.
  static Rng for_index(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal deviate.
  double gaussian();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Small dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  static Matrix identity(int n);

  int n() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;

  double max_abs() const;
  /// Determinant by partial-pivot LU.
  double det() const;
  /// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
  std::vector<double> symmetric_eigenvalues() const;
  /// Singular values (via eigenvalues of A^T A), ascending.
  std::vector<double> singular_values() const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Derivative of a uniformly sampled function by 5-point stencils:
/// 4th-order central in the interior, one-sided closures at the ends.
/// `values[i]` is f(t0 + i*h); returns f' at every node.
std::vector<double> stencil_derivative(const std::vector<double>& values, double h);

/// Weights of the 5-point first-derivative stencil when the evaluation node
/// sits at `offset` in {0..4} within the window; multiply by 1/(12h).
std::array<double, 5> five_point_weights(int offset);

/// Root of f on [lo, hi] with f(lo)*f(hi) <= 0, bisected to `xtol`.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double xtol);

/// Argmin of a unimodal f on [lo, hi] by golden-section search to `xtol`.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double xtol);

/// Runs body(i) for i in [0, count). Parallel when count is large; the
/// SPLITGEOM_THREADS environment variable caps the worker count. Work is
/// sharded by index, so results stored per-index are deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Shortest representation that round-trips a double (17 significant digits).
std::string format_double(double v);

}  // namespace splitgeom

#endif
