#include "kpq/error.hpp"
#include "kpq/field.hpp"
#include "kpq/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace kpq;

namespace {

template <class F>
void check_field_axioms(const F& f) {
  const int q = f.size();
  for (int a = 0; a < q; ++a) {
    auto x = static_cast<typename F::Elem>(a);
    CHECK(f.add(x, f.zero()) == x);
    CHECK(f.mul(x, f.one()) == x);
    CHECK(f.is_zero(f.add(x, f.neg(x))));
    if (!f.is_zero(x)) CHECK(f.mul(x, f.inv(x)) == f.one());
    for (int b = 0; b < q; ++b) {
      auto y = static_cast<typename F::Elem>(b);
      CHECK(f.add(x, y) == f.add(y, x));
      CHECK(f.mul(x, y) == f.mul(y, x));
      for (int c = 0; c < q; c += 3) {
        auto z = static_cast<typename F::Elem>(c);
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
      }
    }
  }
}

}  // namespace

TEST_CASE("finite fields satisfy the field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
    CAPTURE(q);
    check_field_axioms(GaloisField(q));
  }
}

TEST_CASE("finite field structure") {
  GaloisField f9(9);
  CHECK(f9.characteristic() == 3);
  CHECK(f9.degree() == 2);
  CHECK(f9.size() == 9);
  CHECK(f9.name() == "q 9");
  CHECK(GaloisField(5).name() == "prime 5");
  CHECK(GaloisField(5).from_int(-1) == 4);
  CHECK(GaloisField(5).from_int(12) == 2);
  // The multiplicative group is cyclic of order q - 1: x^(q-1) = 1.
  for (int q : {4, 8, 9}) {
    GaloisField f(q);
    for (int a = 1; a < q; ++a) {
      auto p = f.one();
      for (int k = 0; k < q - 1; ++k) p = f.mul(p, static_cast<GaloisField::Elem>(a));
      CHECK(p == f.one());
    }
  }
  CHECK_THROWS_AS(GaloisField(6), Error);
  CHECK_THROWS_AS(GaloisField(1), Error);
}

TEST_CASE("prime powers") {
  CHECK(prime_power(8) == std::pair{2, 3});
  CHECK(prime_power(7) == std::pair{7, 1});
  CHECK(!prime_power(12));
  CHECK(!prime_power(1));
}

TEST_CASE("field specifications parse") {
  CHECK(FieldSpec::parse("rationals") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("prime 3") == FieldSpec::finite(3));
  CHECK(FieldSpec::parse("F3") == FieldSpec::finite(3));
  CHECK(FieldSpec::parse("q 4") == FieldSpec::finite(4));
  CHECK_THROWS_AS(FieldSpec::parse("prime 4"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("reals"), Error);
}

TEST_CASE("rank, null space and inverse over the rationals") {
  RationalField f;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix<Rational> a(4, 5, Rational(0));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 5; ++c) a(r, c) = Rational(d(rng));
    auto ns = null_space(f, a);
    CHECK(rank(f, a) + ns.cols() == 5);
    CHECK(is_zero_matrix(f, multiply(f, a, ns)));
    auto lns = left_null_space(f, a);
    CHECK(rank(f, a) + lns.rows() == 4);
    CHECK(is_zero_matrix(f, multiply(f, lns, a)));
  }
  Matrix<Rational> m(2, 2, Rational(0));
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  Matrix<Rational> inv;
  REQUIRE(invert(f, m, inv));
  CHECK(multiply(f, m, inv) == identity_matrix(f, 2));
  m(1, 1) = Rational(1, 2);
  CHECK(!invert(f, m, inv));
}

TEST_CASE("solve over a finite field") {
  GaloisField f(7);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 6);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix<GaloisField::Elem> a(3, 3, 0);
    Matrix<GaloisField::Elem> x(3, 2, 0);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = static_cast<GaloisField::Elem>(d(rng));
      for (std::size_t c = 0; c < 2; ++c) x(r, c) = static_cast<GaloisField::Elem>(d(rng));
    }
    auto b = multiply(f, a, x);
    Matrix<GaloisField::Elem> y;
    REQUIRE(solve(f, a, b, y));
    CHECK(multiply(f, a, y) == b);
  }
}
