#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "splitgeom/liealg.hpp"
#include "splitgeom/numerics.hpp"

using namespace splitgeom;

namespace {
LieVector rand_vec(const LieAlgebra& g, Rng& rng) {
  LieVector v = g.zero();
  for (auto& x : v) x = rng.gaussian();
  return v;
}
}  // namespace

TEST_CASE("su2 bracket table") {
  LieAlgebra g = LieAlgebra::su2();
  CHECK(g.dim() == 3);
  CHECK(lv_max_abs(lv_sub(g.bracket(g.basis(0), g.basis(1)), g.basis(2))) == 0.0);
  CHECK(lv_max_abs(lv_sub(g.bracket(g.basis(1), g.basis(2)), g.basis(0))) == 0.0);
  CHECK(lv_max_abs(lv_sub(g.bracket(g.basis(2), g.basis(0)), g.basis(1))) == 0.0);
  CHECK(lv_max_abs(g.bracket(g.basis(0), g.basis(0))) == 0.0);
}

TEST_CASE("bilinearity of the bracket") {
  LieAlgebra g = LieAlgebra::su2();
  // [e1 + e2, e2] = [e1, e2] = e3
  LieVector x = lv_add(g.basis(0), g.basis(1));
  CHECK(lv_max_abs(lv_sub(g.bracket(x, g.basis(1)), g.basis(2))) == 0.0);

  Rng rng(3);
  for (int it = 0; it < 300; ++it) {
    LieVector a = rand_vec(g, rng), b = rand_vec(g, rng), c = rand_vec(g, rng);
    double s = rng.gaussian();
    LieVector lhs = g.bracket(lv_add(a, lv_scale(s, b)), c);
    LieVector rhs = lv_add(g.bracket(a, c), lv_scale(s, g.bracket(b, c)));
    CHECK(lv_max_abs(lv_sub(lhs, rhs)) <= 1e-12);
    CHECK(lv_max_abs(g.bracket(a, a)) <= 1e-12);
  }
}

TEST_CASE("inner product and ad-invariance") {
  LieAlgebra g = LieAlgebra::su2();
  CHECK(g.inner(g.basis(0), g.basis(0)) == 1.0);
  CHECK(g.inner(g.bracket(g.basis(0), g.basis(1)), g.basis(2)) ==
        g.inner(g.basis(0), g.bracket(g.basis(1), g.basis(2))));

  Rng rng(5);
  for (int it = 0; it < 1000; ++it) {
    LieVector x = rand_vec(g, rng), y = rand_vec(g, rng), z = rand_vec(g, rng);
    double lhs = g.inner(g.bracket(x, y), z);
    double rhs = g.inner(x, g.bracket(y, z));
    CHECK(std::fabs(lhs - rhs) <= 1e-12);

    // Jacobi
    LieVector sum = lv_add(g.bracket(x, g.bracket(y, z)),
                           lv_add(g.bracket(y, g.bracket(z, x)), g.bracket(z, g.bracket(x, y))));
    CHECK(lv_max_abs(sum) <= 1e-12);
  }
}

TEST_CASE("check_algebra report") {
  AlgebraReport rep = LieAlgebra::su2().check();
  CHECK(rep.ok);
  CHECK(rep.antisymmetry == 0.0);
  CHECK(rep.jacobi == 0.0);
  CHECK(rep.ad_invariance == 0.0);

  // a broken table is flagged: [e1,e2] = e3 but [e2,e1] = 0
  std::vector<double> c(27, 0.0);
  c[(0 * 3 + 1) * 3 + 2] = 1.0;
  std::vector<double> ip = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  AlgebraReport bad = LieAlgebra(3, c, ip).check();
  CHECK_FALSE(bad.ok);
  CHECK(bad.antisymmetry > 0.5);
}

TEST_CASE("dimension mismatch raises") {
  LieAlgebra g = LieAlgebra::su2();
  CHECK_THROWS_AS((void)g.bracket({1.0, 0.0}, g.basis(0)), std::invalid_argument);
  CHECK_THROWS_AS((void)g.inner(g.basis(0), {1.0}), std::invalid_argument);
}

TEST_CASE("structure constants from JSON") {
  const char* path = "liealg_roundtrip.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 3,
      "c": [[[0,0,0],[0,0,1],[0,-1,0]],
            [[0,0,-1],[0,0,0],[1,0,0]],
            [[0,1,0],[-1,0,0],[0,0,0]]],
      "ip": [[1,0,0],[0,1,0],[0,0,1]]})";
  }
  LieAlgebra g = LieAlgebra::from_json_file(path);
  CHECK(g.dim() == 3);
  CHECK(g.check().ok);
  CHECK(lv_max_abs(lv_sub(g.bracket(g.basis(0), g.basis(1)), g.basis(2))) == 0.0);
  std::remove(path);

  CHECK_THROWS_AS((void)LieAlgebra::from_json_file("missing_algebra.json"),
                  std::invalid_argument);
}
