#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "splitgeom/errors.hpp"
#include "splitgeom/splitquat.hpp"

using namespace splitgeom;

namespace {
const SplitQuaternion I = SplitQuaternion::i();
const SplitQuaternion S = SplitQuaternion::s();
const SplitQuaternion T = SplitQuaternion::t();
const SplitQuaternion One = SplitQuaternion::one();

double qdist(const SplitQuaternion& a, const SplitQuaternion& b) { return (a - b).max_abs(); }
}  // namespace

TEST_CASE("defining relations of the product") {
  CHECK(qdist(mul(I, I), -One) == 0.0);
  CHECK(qdist(mul(S, S), One) == 0.0);
  CHECK(qdist(mul(T, T), One) == 0.0);
  CHECK(qdist(mul(I, S), T) == 0.0);
  CHECK(qdist(mul(S, I), -T) == 0.0);
  CHECK(qdist(mul(T, S), I) == 0.0);
  CHECK(qdist(mul(S, T), -I) == 0.0);
  CHECK(qdist(mul(T, I), S) == 0.0);
  CHECK(qdist(mul(I, T), -S) == 0.0);
}

TEST_CASE("unit element and zero divisors") {
  Rng rng(7);
  SplitQuaternion p{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
  CHECK(qdist(mul(One, p), p) == 0.0);
  CHECK(qdist(mul(p, One), p) == 0.0);

  // (1 + s)(1 - s) = 0: the algebra has zero divisors.
  SplitQuaternion a{1, 0, 1, 0};
  SplitQuaternion b{1, 0, -1, 0};
  CHECK(mul(a, b).max_abs() == 0.0);
}

TEST_CASE("norm anchors and multiplicativity") {
  CHECK(norm_sq(I) == 1.0);
  CHECK(norm_sq(S) == -1.0);
  CHECK(norm_sq(T) == -1.0);
  CHECK(norm_sq(SplitQuaternion{1, 0, 1, 0}) == 0.0);  // 1 + s

  Rng rng(11);
  for (int it = 0; it < 2000; ++it) {
    SplitQuaternion p{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    SplitQuaternion q{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    double lhs = norm_sq(mul(p, q));
    double rhs = norm_sq(p) * norm_sq(q);
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * (1.0 + std::fabs(rhs)));
    CHECK(std::fabs(inner(p, q) - mul(p, conj(q)).w) <= 1e-14);
  }
}

TEST_CASE("associativity on random triples") {
  Rng rng(13);
  for (int it = 0; it < 2000; ++it) {
    SplitQuaternion p{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    SplitQuaternion q{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    SplitQuaternion r{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    CHECK(qdist(mul(mul(p, q), r), mul(p, mul(q, r))) <= 1e-12);
  }
}

TEST_CASE("inverse") {
  CHECK(qdist(inverse(I), -I) == 0.0);
  CHECK_THROWS_AS((void)inverse(SplitQuaternion{1, 0, 1, 0}), NullDivisorError);

  Rng rng(17);
  for (int it = 0; it < 500; ++it) {
    SplitQuaternion q = random_unit(rng);
    CHECK(qdist(mul(q, inverse(q)), One) <= 1e-12);
  }
}

TEST_CASE("classification of imaginary elements") {
  CHECK(classify(ImSplit::i()) == Causal::Spacelike);
  CHECK(classify(ImSplit::s()) == Causal::Timelike);
  CHECK(classify(ImSplit{1, 1, 0}) == Causal::Null);
  CHECK(classify(ImSplit{1, 0.5, 0.5}) == Causal::Spacelike);
}

TEST_CASE("adjoint matrix") {
  Matrix id3 = adjoint_matrix(One);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(id3(r, c) == (r == c ? 1.0 : 0.0));

  // i s conj(i) = -s and i t conj(i) = -t.
  Matrix mi = adjoint_matrix(I);
  CHECK(mi(0, 0) == 1.0);
  CHECK(mi(1, 1) == -1.0);
  CHECK(mi(2, 2) == -1.0);
  CHECK(std::fabs(mi(0, 1)) + std::fabs(mi(0, 2)) + std::fabs(mi(1, 0)) == 0.0);

  CHECK_THROWS_AS((void)adjoint_matrix(SplitQuaternion{2, 0, 0, 0}), NotUnitError);

  Matrix J(3);
  J(0, 0) = 1;
  J(1, 1) = -1;
  J(2, 2) = -1;
  Rng rng(23);
  for (int it = 0; it < 500; ++it) {
    SplitQuaternion q = random_unit(rng);
    Matrix mq = adjoint_matrix(q);
    Matrix jerr = mq.transposed() * J * mq;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) jerr(r, c) -= J(r, c);
    CHECK(jerr.max_abs() <= 1e-10);
    CHECK(std::fabs(mq.det() - 1.0) <= 1e-10);

    SplitQuaternion q2 = random_unit(rng);
    Matrix hom = adjoint_matrix(mul(q, q2));
    Matrix prod = mq * adjoint_matrix(q2);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) hom(r, c) -= prod(r, c);
    CHECK(hom.max_abs() <= 1e-10);

    // action matches the matrix on a random imaginary element
    ImSplit v{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    ImSplit w = adjoint_apply(q, v);
    double mx = mq(0, 0) * v.x + mq(0, 1) * v.y + mq(0, 2) * v.z;
    CHECK(std::fabs(w.x - mx) <= 1e-12);
  }
}

TEST_CASE("random_unit determinism and normalization") {
  Rng a(42), b(42);
  for (int it = 0; it < 100; ++it) {
    SplitQuaternion qa = random_unit(a);
    SplitQuaternion qb = random_unit(b);
    CHECK(qdist(qa, qb) == 0.0);
    CHECK(std::fabs(norm_sq(qa) - 1.0) <= 1e-12);
    CHECK(qa.w > 0.0);  // sheet connected to 1
  }
}

TEST_CASE("exp of imaginary elements") {
  // spacelike: cos/sin; timelike: cosh/sinh; null: affine.
  SplitQuaternion es = exp_im(ImSplit{0.7, 0, 0});
  CHECK(std::fabs(es.w - std::cos(0.7)) <= 1e-15);
  CHECK(std::fabs(es.x - std::sin(0.7)) <= 1e-15);

  SplitQuaternion et = exp_im(ImSplit{0, 0.7, 0});
  CHECK(std::fabs(et.w - std::cosh(0.7)) <= 1e-15);
  CHECK(std::fabs(et.y - std::sinh(0.7)) <= 1e-15);

  SplitQuaternion en = exp_im(ImSplit{0.5, 0.5, 0});
  CHECK(en.w == 1.0);
  CHECK(en.x == 0.5);

  // one-parameter subgroup: exp((a+b) xi) = exp(a xi) exp(b xi)
  Rng rng(5);
  for (int it = 0; it < 200; ++it) {
    ImSplit xi{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    double a = rng.uniform(), b = rng.uniform();
    SplitQuaternion lhs = exp_im(xi * (a + b));
    SplitQuaternion rhs = mul(exp_im(xi * a), exp_im(xi * b));
    CHECK(qdist(lhs, rhs) <= 1e-12);
  }
}
