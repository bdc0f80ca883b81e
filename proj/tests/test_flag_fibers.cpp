#include "kpq/error.hpp"
#include "kpq/flag_fibers.hpp"
#include "kpq/orders_geometry.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace kpq;

namespace {

Quiver a2_forward() { return Quiver(CartanDatum::parse("A2"), {{0, 1}}); }

std::vector<std::pair<int, BigInt>> sample(const std::vector<int>& qs, const std::function<BigInt(long long)>& f) {
  std::vector<std::pair<int, BigInt>> out;
  for (int q : qs) out.emplace_back(q, f(q));
  return out;
}

}  // namespace

TEST_CASE("fibres in rank two") {
  for (int q : {2, 3, 4, 5}) {
    GaloisField f(q);
    RepContext<GaloisField> ctx(f, a2_forward());
    auto kps = enumerate_kp(ctx.order(), RootVector({1, 1}));
    CHECK(fiber_point_count(ctx.rep_of_kp(kps[0])) == 1);
    CHECK(fiber_point_count(ctx.rep_of_kp(kps[1])) == 2);
    CHECK(fiber_point_count(simple_rep(f, a2_forward(), 0)) == 1);
    CHECK(fiber_point_count(zero_rep(f, a2_forward(), RootVector({0, 0}))) == 1);
    CHECK(z_point_count(ctx, RootVector({1, 1})) == q + 3);
  }
  CHECK(z_point_count(a2_forward(), RootVector({1, 1}), 2) == 5);
  CHECK(z_point_count(a2_forward(), RootVector({1, 1}), 3) == 6);
  CHECK_THROWS_AS(fiber_point_count(zero_rep(RationalField{}, a2_forward(), RootVector({1, 1}))), Error);
}

TEST_CASE("flags of a semisimple module count graded complete flags") {
  // For M = S_1^a, every complete flag of F_q^a is stable: [a]_q! of them.
  GaloisField f(3);
  auto m = zero_rep(f, a2_forward(), RootVector({3, 0}));
  CHECK(fiber_point_count(m) == 13 * 4);
}

TEST_CASE("memoised and literal counts agree and ignore the basis") {
  std::mt19937 rng(9);
  for (auto q : {Quiver::linear(CartanDatum::parse("A3")), Quiver::zigzag(CartanDatum::parse("D4"))}) {
    for (int fq : {2, 3}) {
      GaloisField f(fq);
      RepContext<GaloisField> ctx(f, q);
      FiberCounter<GaloisField> counter(ctx);
      auto nu = RootVector(std::vector<Coord>(static_cast<std::size_t>(q.rank()), 1));
      nu.coords[1] = 2;
      for (const auto& lambda : enumerate_kp(ctx.order(), nu)) {
        auto m = ctx.rep_of_kp(lambda);
        auto literal = fiber_point_count(m);
        CHECK(counter.count(lambda) == literal);
        std::vector<Matrix<GaloisField::Elem>> g;
        for (int d : m.dims) {
          while (true) {
            auto x = zero_matrix(f, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
            for (std::size_t r = 0; r < x.rows(); ++r)
              for (std::size_t c = 0; c < x.cols(); ++c)
                x(r, c) = static_cast<GaloisField::Elem>(std::uniform_int_distribution<int>(0, fq - 1)(rng));
            if (rank(f, x) == x.rows()) {
              g.push_back(x);
              break;
            }
          }
        }
        CHECK(fiber_point_count(change_basis(m, g)) == literal);
      }
    }
  }
}

TEST_CASE("orbit-weighted fibres count Y, checked flags first") {
  for (auto q : {a2_forward(), Quiver::linear(CartanDatum::parse("A3")), Quiver::zigzag(CartanDatum::parse("A3")),
                 Quiver::zigzag(CartanDatum::parse("D4"))}) {
    for (int fq : {2, 3, 4}) {
      RepContext<GaloisField> ctx(GaloisField(fq), q);
      for (const auto& nu : dimension_vectors_up_to(q.rank(), 3)) {
        CAPTURE(format_vector(nu.coords));
        CHECK(y_point_count(ctx, nu) == oracle::y_point_count_flags_first(q, nu, fq));
      }
    }
  }
}

TEST_CASE("polynomial fitting") {
  std::vector<int> qs{2, 3, 4, 5, 7};
  auto good = fit_point_counts(sample(qs, [](long long q) { return BigInt(q * q + q + 1); }), 2);
  CHECK(good.coeffs == std::vector<Rational>{1, 1, 1});
  CHECK(good.verified);
  CHECK(good.verdict == EvenVerdict::ConsistentWithEven);
  CHECK(good.fitted_points == 3);
  CHECK(good.polynomial_string() == "q^2 + q + 1");

  auto negative = fit_point_counts(sample(qs, [](long long q) { return BigInt(q * q - q); }), 2);
  CHECK(negative.verified);
  CHECK(negative.verdict == EvenVerdict::EvidenceAgainst);

  auto exponential = fit_point_counts(sample(qs, [](long long q) { return BigInt(1) << q; }), 2);
  CHECK(!exponential.verified);
  CHECK(exponential.verdict == EvenVerdict::EvidenceAgainst);
  CHECK(to_string(EvenVerdict::EvidenceAgainst) == "evidence-against");

  CHECK_THROWS_AS(fit_point_counts(sample({2, 3, 4}, [](long long q) { return BigInt(q); }), 2), Error);
  CHECK(fiber_degree_bound(RootVector({4, 2, 1})) == 7);
}

TEST_CASE("fibre polynomial of a semisimple module is a q-factorial") {
  auto q = Quiver::linear(CartanDatum::parse("A2"));
  auto roots = positive_roots(q.datum());
  std::vector<Coord> lambda(roots.size(), 0);
  lambda[0] = 4;
  auto fit = interpolate_fiber_polynomial(q, lambda, default_q_list());
  CHECK(fit.verified);
  CHECK(fit.coeffs == std::vector<Rational>{1, 3, 5, 6, 5, 3, 1});
  CHECK(fit.verdict == EvenVerdict::ConsistentWithEven);
}

TEST_CASE("fibre sweep in small rank") {
  auto rows = fiber_sweep(Quiver::zigzag(CartanDatum::parse("A3")), 3, default_q_list());
  CHECK(!rows.empty());
  for (const auto& row : rows) {
    CAPTURE(row.parts);
    CHECK(row.fit.verified);
    CHECK(row.fit.verdict == EvenVerdict::ConsistentWithEven);
  }
}
