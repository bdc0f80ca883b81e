#pragma once

// Point counts over F_q of the fibres of the flag map Y_nu -> E_nu, i.e. the
// number of complete I-graded flags with one-dimensional steps stable under a
// representation, and of Z = Y x_E Y.

#include "kpq/field.hpp"
#include "kpq/quiver_rep.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kpq {

namespace detail {

/// Each hyperplane W of M_i containing the images of all arrows into i,
/// as the subrepresentation equal to M away from i and W at i.
template <class F>
std::vector<QuiverRep<F>> stable_hyperplane_subreps(const QuiverRep<F>& m, Vertex i) {
  const auto& field = m.field;
  const auto d = static_cast<std::size_t>(m.dims[static_cast<std::size_t>(i)]);
  std::vector<std::size_t> incoming;
  std::vector<std::size_t> outgoing;
  for (std::size_t k = 0; k < m.quiver.arrows().size(); ++k) {
    if (m.quiver.arrows()[k].head == i) incoming.push_back(k);
    if (m.quiver.arrows()[k].tail == i) outgoing.push_back(k);
  }
  std::size_t width = 0;
  for (auto k : incoming) width += m.maps[k].cols();
  auto images = zero_matrix(field, d, width);
  std::size_t at = 0;
  for (auto k : incoming) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < m.maps[k].cols(); ++c) images(r, at + c) = m.maps[k](r, c);
    at += m.maps[k].cols();
  }
  // Functionals vanishing on the images, one per row.
  auto annihilator = left_null_space(field, images);
  const auto c = annihilator.rows();
  std::vector<QuiverRep<F>> out;
  if (c == 0) return out;

  const auto q = static_cast<std::size_t>(*field.order());
  // Projective points of F_q^c: the first nonzero coordinate is 1.
  std::vector<std::size_t> digits(c, 0);
  std::size_t total = 1;
  for (std::size_t s = 0; s < c; ++s) total *= q;
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t s = 0; s < c; ++s) {
      digits[s] = rest % q;
      rest /= q;
    }
    std::size_t lead = 0;
    while (digits[lead] == 0) ++lead;
    if (digits[lead] != 1) continue;
    auto phi = zero_matrix(field, 1, d);
    for (std::size_t s = 0; s < c; ++s) {
      auto coeff = static_cast<typename F::Elem>(digits[s]);
      if (field.is_zero(coeff)) continue;
      for (std::size_t col = 0; col < d; ++col)
        phi(0, col) = field.add(phi(0, col), field.mul(coeff, annihilator(s, col)));
    }
    auto basis = null_space(field, phi);  // d x (d - 1)
    QuiverRep<F> sub = m;
    sub.dims[static_cast<std::size_t>(i)] = static_cast<int>(d - 1);
    for (auto k : outgoing) sub.maps[k] = multiply(field, m.maps[k], basis);
    for (auto k : incoming) {
      Matrix<typename F::Elem> coords;
      if (!solve(field, basis, m.maps[k], coords)) throw InternalError("image does not lie in the hyperplane");
      sub.maps[k] = std::move(coords);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace detail

/// Number of stable complete graded flags, by direct recursion on the top
/// step of the flag. Requires a finite field.
template <class F>
BigInt fiber_point_count(const QuiverRep<F>& m) {
  if (!m.field.order()) throw Error("fibre point counts need a finite field");
  if (m.total_dim() == 0) return 1;
  BigInt total = 0;
  for (Vertex i = 0; i < m.quiver.rank(); ++i) {
    if (m.dims[static_cast<std::size_t>(i)] == 0) continue;
    for (const auto& sub : detail::stable_hyperplane_subreps(m, i)) total += fiber_point_count(sub);
  }
  return total;
}

/// The same recursion, memoised on isomorphism classes: the count only
/// depends on the orbit, so each class is expanded once.
template <class F>
class FiberCounter {
 public:
  explicit FiberCounter(const RepContext<F>& ctx) : ctx_(ctx) {
    if (!ctx.field().order()) throw Error("fibre point counts need a finite field");
  }

  BigInt count(const QuiverRep<F>& m) {
    if (m.total_dim() == 0) return 1;
    auto key = ctx_.iso_class(m).mult;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (Vertex i = 0; i < m.quiver.rank(); ++i) {
      if (m.dims[static_cast<std::size_t>(i)] == 0) continue;
      for (const auto& sub : detail::stable_hyperplane_subreps(m, i)) total += count(sub);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  BigInt count(const KostantPartition& lambda) { return count(ctx_.rep_of_kp(lambda)); }

 private:
  const RepContext<F>& ctx_;
  std::map<std::vector<Coord>, BigInt> memo_;
};

/// sum over lambda in KP(nu) of |orbit(lambda)| * fibre(lambda)^2.
BigInt z_point_count(const RepContext<GaloisField>& ctx, const RootVector& nu);
BigInt z_point_count(const Quiver& q, const RootVector& nu, int field_order);

/// sum over lambda in KP(nu) of |orbit(lambda)| * fibre(lambda).
BigInt y_point_count(const RepContext<GaloisField>& ctx, const RootVector& nu);

/// Upper bound for the degree in q of a fibre count: the dimension of the
/// variety of graded complete flags, sum_i nu_i (nu_i - 1) / 2.
int fiber_degree_bound(const RootVector& nu);

enum class EvenVerdict { ConsistentWithEven, EvidenceAgainst };
std::string to_string(EvenVerdict v);

struct PolynomialFit {
  std::vector<Rational> coeffs;  // constant term first, trailing zeros dropped
  std::vector<std::pair<int, BigInt>> data;  // (q, count)
  std::size_t fitted_points = 0;
  bool verified = false;  // every held-out point matches
  EvenVerdict verdict = EvenVerdict::EvidenceAgainst;

  std::string polynomial_string() const;
  std::string report_line() const;
};

/// Interpolates counts at the first degree_bound + 1 values of q and checks
/// the remaining ones. Verdict is consistent-with-even iff all points match
/// and every coefficient is a nonnegative integer. Throws kpq::Error unless
/// data has at least degree_bound + 2 points.
PolynomialFit fit_point_counts(const std::vector<std::pair<int, BigInt>>& data, int degree_bound);

/// Fibre counts of M(lambda) over F_q for each q, then fit_point_counts.
/// lambda is given as multiplicities on positive_roots(datum).
PolynomialFit interpolate_fiber_polynomial(const Quiver& q, const std::vector<Coord>& lambda_by_root,
                                           const std::vector<int>& q_list);

/// The q-values used by default for interpolation.
std::vector<int> default_q_list();

}  // namespace kpq

namespace kpq {

struct FiberSweepRow {
  RootVector nu;
  std::vector<Coord> lambda_by_root;
  std::string parts;  // lambda written as a sum of roots
  PolynomialFit fit;
};

/// Fibre polynomials of every M(lambda), lambda in KP(nu), for every nonzero
/// nu with |nu| <= nu_max.
std::vector<FiberSweepRow> fiber_sweep(const Quiver& q, int nu_max, const std::vector<int>& q_list);

}  // namespace kpq
