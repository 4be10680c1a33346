#include "splitgeom/liealg.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "splitgeom/numerics.hpp"

namespace splitgeom {

LieAlgebra::LieAlgebra(int dim, std::vector<double> structure_constants,
                       std::vector<double> inner_product, std::string name)
    : dim_(dim), c_(std::move(structure_constants)), ip_(std::move(inner_product)),
      name_(std::move(name)) {
  if (dim_ <= 0) throw std::invalid_argument("LieAlgebra: dim must be positive");
  if (c_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
    throw std::invalid_argument("LieAlgebra: structure constants have wrong size");
  if (ip_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw std::invalid_argument("LieAlgebra: inner product has wrong size");
}

LieAlgebra LieAlgebra::su2() {
  std::vector<double> c(27, 0.0);
  auto set = [&](int i, int j, int k, double v) {
    c[(static_cast<std::size_t>(i) * 3 + j) * 3 + k] = v;
    c[(static_cast<std::size_t>(j) * 3 + i) * 3 + k] = -v;
  };
  set(0, 1, 2, 1.0);  // [e1, e2] = e3
  set(1, 2, 0, 1.0);  // [e2, e3] = e1
  set(2, 0, 1, 1.0);  // [e3, e1] = e2
  std::vector<double> ip = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  return LieAlgebra(3, std::move(c), std::move(ip), "su2");
}

LieAlgebra LieAlgebra::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("LieAlgebra: cannot open " + path);
  nlohmann::json j;
  in >> j;
  int dim = j.at("dim").get<int>();
  if (dim <= 0) throw std::invalid_argument("LieAlgebra: dim must be positive");
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(dim) * dim * dim);
  const auto& jc = j.at("c");
  if (static_cast<int>(jc.size()) != dim) throw std::invalid_argument("LieAlgebra: bad c shape");
  for (const auto& plane : jc) {
    if (static_cast<int>(plane.size()) != dim) throw std::invalid_argument("LieAlgebra: bad c shape");
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("LieAlgebra: bad c shape");
      for (const auto& v : row) c.push_back(v.get<double>());
    }
  }
  std::vector<double> ip;
  ip.reserve(static_cast<std::size_t>(dim) * dim);
  const auto& jip = j.at("ip");
  if (static_cast<int>(jip.size()) != dim) throw std::invalid_argument("LieAlgebra: bad ip shape");
  for (const auto& row : jip) {
    if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("LieAlgebra: bad ip shape");
    for (const auto& v : row) ip.push_back(v.get<double>());
  }
  return LieAlgebra(dim, std::move(c), std::move(ip), path);
}

LieVector LieAlgebra::basis(int k) const {
  LieVector v(dim_, 0.0);
  v.at(k) = 1.0;
  return v;
}

LieVector LieAlgebra::bracket(const LieVector& x, const LieVector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  LieVector out(dim_, 0.0);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      double xy = x[i] * y[j];
      if (xy == 0.0) continue;
      for (int k = 0; k < dim_; ++k) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

double LieAlgebra::inner(const LieVector& x, const LieVector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("inner: dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) acc += x[i] * ip(i, j) * y[j];
  return acc;
}

AlgebraReport LieAlgebra::check() const {
  AlgebraReport rep;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        rep.antisymmetry = std::max(rep.antisymmetry, std::fabs(c(i, j, k) + c(j, i, k)));

  // Jacobi on basis triples: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0.
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        LieVector sum = lv_add(bracket(basis(i), bracket(basis(j), basis(k))),
                               lv_add(bracket(basis(j), bracket(basis(k), basis(i))),
                                      bracket(basis(k), bracket(basis(i), basis(j)))));
        rep.jacobi = std::max(rep.jacobi, lv_max_abs(sum));
      }

  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        double lhs = inner(bracket(basis(i), basis(j)), basis(k));
        double rhs = inner(basis(i), bracket(basis(j), basis(k)));
        rep.ad_invariance = std::max(rep.ad_invariance, std::fabs(lhs - rhs));
      }

  Matrix ipm(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      ipm(i, j) = ip(i, j);
      rep.ip_symmetry = std::max(rep.ip_symmetry, std::fabs(ip(i, j) - ip(j, i)));
    }
  rep.ip_min_eigenvalue = ipm.symmetric_eigenvalues().front();

  rep.ok = rep.antisymmetry <= 1e-12 && rep.jacobi <= 1e-12 && rep.ad_invariance <= 1e-12 &&
           rep.ip_symmetry <= 1e-12 && rep.ip_min_eigenvalue > 0.0;
  return rep;
}

LieVector lv_add(const LieVector& a, const LieVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lv_add: dimension mismatch");
  LieVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LieVector lv_sub(const LieVector& a, const LieVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lv_sub: dimension mismatch");
  LieVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

LieVector lv_scale(double c, const LieVector& a) {
  LieVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

double lv_max_abs(const LieVector& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::fabs(v));
  return m;
}

}  // namespace splitgeom
