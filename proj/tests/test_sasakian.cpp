#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "splitgeom/errors.hpp"
#include "splitgeom/sasakian.hpp"
#include "splitgeom/suites.hpp"

using namespace splitgeom;

namespace {
const Calibration& kCal = calibration();
const SignTable kTable = kCal.table;
}  // namespace

TEST_CASE("sphere point validation and sampling") {
  CHECK_THROWS_AS(SpherePoint(BVector{SplitQuaternion{2, 0, 0, 0}}), std::invalid_argument);
  Rng rng(1);
  for (int it = 0; it < 100; ++it) {
    SpherePoint p = sample_sphere_point(2, rng);
    CHECK(std::fabs(metric(p.p, p.p) - 1.0) <= 1e-10);
  }
}

TEST_CASE("tangent projection") {
  Rng rng(2);
  SpherePoint p = sample_sphere_point(2, rng);

  BVector zero = tangent_project(p, p.p);
  CHECK(bv_max_abs(zero) <= 1e-12);

  for (int it = 0; it < 200; ++it) {
    BVector X = random_bvector(2, rng);
    BVector pr = tangent_project(p, X);
    CHECK(std::fabs(metric(p.p, pr)) <= 1e-12 * (1.0 + bv_max_abs(X)));
    BVector twice = tangent_project(p, pr);
    CHECK(bv_max_abs(bv_sub(twice, pr)) <= 1e-12);
  }
}

TEST_CASE("reeb fields: lengths, tangency, duality") {
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    SpherePoint p = sample_sphere_point(1 + static_cast<int>(rng.next_u64() % 2), rng);
    const double tau[3] = {1.0, -1.0, -1.0};
    for (int a = 1; a <= 3; ++a) {
      BVector X = reeb(a, p, kTable);
      CHECK(std::fabs(metric(X, X) - tau[a - 1]) <= 1e-10);
      CHECK(std::fabs(metric(p.p, X)) <= 1e-12);
      for (int b = 1; b <= 3; ++b) {
        double expect = a == b ? 1.0 : 0.0;
        CHECK(std::fabs(eta(a, p, reeb(b, p, kTable), kTable) - expect) <= 1e-12);
      }
      CHECK(bv_max_abs(phi(a, p, X, kTable)) <= 1e-12);
    }
  }
}

TEST_CASE("exact bracket relations with the calibrated global sign") {
  Rng rng(4);
  SpherePoint p = sample_sphere_point(2, rng);
  // (1/2)[X1,X2] = sign*X3, (1/2)[X2,X3] = -sign*X1, (1/2)[X3,X1] = sign*X2
  struct Rel { int a, b, c; double rhs; } rels[3] = {{1, 2, 3, 1}, {2, 3, 1, -1}, {3, 1, 2, 1}};
  for (const auto& r : rels) {
    BVector lhs = bv_scale(0.5, reeb_bracket(r.a, r.b, p, kTable));
    BVector rhs = bv_scale(kCal.bracket_sign * r.rhs, reeb(r.c, p, kTable));
    CHECK(bv_max_abs(bv_sub(lhs, rhs)) <= 1e-14);
  }
}

TEST_CASE("phi squared law on tangent vectors") {
  Rng rng(5);
  SpherePoint p = sample_sphere_point(2, rng);
  for (int it = 0; it < 100; ++it) {
    BVector Y = tangent_project(p, random_bvector(2, rng));
    // pseudo case a=1: Phi^2 = -(id - eta (x) X); para cases a=2,3: +(id - ...)
    for (int a = 1; a <= 3; ++a) {
      BVector pp = phi(a, p, phi(a, p, Y, kTable), kTable);
      BVector expect = bv_sub(Y, bv_scale(eta(a, p, Y, kTable), reeb(a, p, kTable)));
      expect = bv_scale(kCal.metric_eps[a - 1], expect);
      CHECK(bv_max_abs(bv_sub(pp, expect)) <= 1e-12);
    }
  }
}

TEST_CASE("contact axiom report under tolerance") {
  for (int n : {1, 2}) {
    for (std::uint64_t seed : {0, 1, 2}) {
      Rng rng = Rng::for_index(seed, 99);
      SpherePoint p = sample_sphere_point(n + 1, rng);
      ContactReport rep = contact_axioms(p, 8, rng, kCal);
      CHECK(rep.lengths <= 1e-10);
      CHECK(rep.eta_of_reeb <= 1e-10);
      CHECK(rep.eta_of_phi <= 1e-10);
      CHECK(rep.phi_square <= 1e-10);
      CHECK(rep.metric_compat <= 1e-10);
      CHECK(rep.d_eta <= 1e-6);
      CHECK(rep.normality <= 1e-6);
      CHECK(rep.bracket <= 1e-10);
    }
  }
}

TEST_CASE("horizontal bundle") {
  Rng rng(6);
  for (int n : {1, 2}) {
    SpherePoint p = sample_sphere_point(n + 1, rng);
    auto basis = horizontal_basis(p, kTable);
    CHECK(static_cast<int>(basis.size()) == 4 * n);
    for (const auto& w : basis) {
      for (int a = 1; a <= 3; ++a) CHECK(std::fabs(eta(a, p, w, kTable)) <= 1e-10);
      CHECK(std::fabs(metric(p.p, w)) <= 1e-10);
      // I, S, T keep the horizontal space horizontal
      for (int a = 0; a < 3; ++a) {
        BVector img = lambda_apply(ImSplit::basis(a), w, kTable);
        CHECK(std::fabs(metric(img, p.p)) <= 1e-10);
        for (int b = 1; b <= 3; ++b) CHECK(std::fabs(eta(b, p, img, kTable)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("omega_hat agrees with the wedge of the pulled-back 2-forms") {
  Rng rng(7);
  for (int n : {1, 2}) {
    SpherePoint p = sample_sphere_point(n + 1, rng);
    auto basis = horizontal_basis(p, kTable);
    auto combo = [&]() {
      BVector v(p.p.size());
      for (const auto& u : basis) v = bv_add(v, bv_scale(rng.gaussian(), u));
      return v;
    };
    for (int it = 0; it < 20; ++it) {
      BVector W = combo(), X = combo(), Y = combo(), Z = combo();
      double lhs = omega_hat(p, W, X, Y, Z, kTable);
      double rhs = omega_wedge_reference(W, X, Y, Z, kTable);
      CHECK(std::fabs(lhs - rhs) <= 1e-9 * (1.0 + std::fabs(rhs)));
    }
  }
}

TEST_CASE("su(1,1) invariance of omega_hat") {
  Rng rng(8);
  SpherePoint p = sample_sphere_point(2, rng);

  CHECK(su11_invariance_check(p, SplitQuaternion::one(), 4, rng, kTable) == 0.0);
  CHECK(su11_invariance_check(p, -SplitQuaternion::one(), 4, rng, kTable) == 0.0);

  for (int it = 0; it < 10; ++it) {
    SplitQuaternion q = random_unit(rng);
    CHECK(su11_invariance_check(p, q, 4, rng, kTable) <= 1e-9);
  }
  CHECK_THROWS_AS((void)su11_invariance_check(p, SplitQuaternion{2, 0, 0, 0}, 1, rng, kTable),
                  NotUnitError);
}

TEST_CASE("level sets are homothetic") {
  Rng rng(9);
  SpherePoint p = sample_sphere_point(2, rng);
  CHECK(homothety_check(p, 0.5, 2.0, kTable, rng, 8) <= 1e-10);
  CHECK(homothety_check(p, 1.25, 0.75, kTable, rng, 8) <= 1e-10);
}

TEST_CASE("sasakian suite passes end to end") {
  SuiteReport rep = sasakian_suite(1, 40, 0);
  for (const auto& c : rep.checks) {
    INFO(c.name, " residual ", c.residual, " tol ", c.tolerance);
    CHECK(c.pass);
  }
}
