#include "kpq/flag_fibers.hpp"

namespace kpq {

BigInt z_point_count(const RepContext<GaloisField>& ctx, const RootVector& nu) {
  const long long q = ctx.field().size();
  FiberCounter<GaloisField> fibers(ctx);
  BigInt total = 0;
  for (const auto& lambda : enumerate_kp(ctx.order(), nu)) {
    auto f = fibers.count(lambda);
    total += orbit_point_count(ctx, lambda, q) * f * f;
  }
  return total;
}

BigInt z_point_count(const Quiver& q, const RootVector& nu, int field_order) {
  RepContext<GaloisField> ctx(GaloisField(field_order), q);
  return z_point_count(ctx, nu);
}

BigInt y_point_count(const RepContext<GaloisField>& ctx, const RootVector& nu) {
  const long long q = ctx.field().size();
  FiberCounter<GaloisField> fibers(ctx);
  BigInt total = 0;
  for (const auto& lambda : enumerate_kp(ctx.order(), nu)) total += orbit_point_count(ctx, lambda, q) * fibers.count(lambda);
  return total;
}

int fiber_degree_bound(const RootVector& nu) {
  Coord d = 0;
  for (auto c : nu.coords) d += c * (c - 1) / 2;
  return static_cast<int>(d);
}

std::string to_string(EvenVerdict v) {
  return v == EvenVerdict::ConsistentWithEven ? "consistent-with-even" : "evidence-against";
}

std::string PolynomialFit::polynomial_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const auto& c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational mag = c < 0 ? Rational(-c) : c;
    bool unit = mag == 1;
    if (!unit || k == 0) out += mag.str();
    if (k >= 1) out += unit ? "q" : "*q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string PolynomialFit::report_line() const {
  std::string coeff_list;
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeff_list += (k ? "," : "") + coeffs[k].str();
  std::string points;
  for (const auto& [q, n] : data) points += (points.empty() ? "" : " ") + std::to_string(q) + ":" + n.str();
  return polynomial_string() + "\tcoeffs=[" + coeff_list + "]\t" + to_string(verdict) + "\tfitted=" +
         std::to_string(fitted_points) + "\theld_out=" + std::to_string(data.size() - fitted_points) +
         "\tcounts=" + points;
}

PolynomialFit fit_point_counts(const std::vector<std::pair<int, BigInt>>& data, int degree_bound) {
  const auto need = static_cast<std::size_t>(degree_bound) + 1;
  if (data.size() < need + 1)
    throw Error("interpolation of degree <= " + std::to_string(degree_bound) + " needs at least " +
                std::to_string(need + 1) + " values of q, got " + std::to_string(data.size()));
  RationalField rat;
  auto vander = zero_matrix(rat, need, need);
  auto rhs = zero_matrix(rat, need, 1);
  for (std::size_t r = 0; r < need; ++r) {
    Rational x = data[r].first;
    Rational pw = 1;
    for (std::size_t c = 0; c < need; ++c) {
      vander(r, c) = pw;
      pw *= x;
    }
    rhs(r, 0) = Rational(data[r].second);
  }
  Matrix<Rational> sol;
  if (!solve(rat, vander, rhs, sol) || rank(rat, vander) != need)
    throw Error("interpolation points must be distinct");

  PolynomialFit fit;
  fit.data = data;
  fit.fitted_points = need;
  for (std::size_t c = 0; c < need; ++c) fit.coeffs.push_back(sol(c, 0));
  while (!fit.coeffs.empty() && fit.coeffs.back() == 0) fit.coeffs.pop_back();

  fit.verified = true;
  for (std::size_t r = need; r < data.size(); ++r) {
    Rational x = data[r].first;
    Rational value = 0;
    for (std::size_t c = fit.coeffs.size(); c-- > 0;) value = value * x + fit.coeffs[c];
    if (value != Rational(data[r].second)) fit.verified = false;
  }
  bool nonneg_integral = std::all_of(fit.coeffs.begin(), fit.coeffs.end(),
                                     [](const Rational& c) { return denominator(c) == 1 && c >= 0; });
  fit.verdict = fit.verified && nonneg_integral ? EvenVerdict::ConsistentWithEven : EvenVerdict::EvidenceAgainst;
  return fit;
}

PolynomialFit interpolate_fiber_polynomial(const Quiver& q, const std::vector<Coord>& lambda_by_root,
                                           const std::vector<int>& q_list) {
  std::vector<std::pair<int, BigInt>> data;
  std::optional<RootVector> nu;
  for (int fq : q_list) {
    RepContext<GaloisField> ctx(GaloisField(fq), q);
    auto lambda = from_root_multiplicities(lambda_by_root, ctx.order());
    nu = lambda.nu;
    FiberCounter<GaloisField> fibers(ctx);
    data.emplace_back(fq, fibers.count(lambda));
  }
  if (!nu) throw Error("empty q list");
  return fit_point_counts(data, fiber_degree_bound(*nu));
}

std::vector<int> default_q_list() { return {2, 3, 4, 5, 7, 8, 9, 11, 13}; }

}  // namespace kpq

#include "kpq/orders_geometry.hpp"

namespace kpq {

std::vector<FiberSweepRow> fiber_sweep(const Quiver& q, int nu_max, const std::vector<int>& q_list) {
  const auto nus = dimension_vectors_up_to(q.rank(), nu_max);
  // counts[q index][(nu, lambda) index]
  std::vector<FiberSweepRow> rows;
  std::vector<std::vector<std::pair<int, BigInt>>> data;
  bool first = true;
  for (int fq : q_list) {
    RepContext<GaloisField> ctx(GaloisField(fq), q);
    FiberCounter<GaloisField> fibers(ctx);
    std::size_t at = 0;
    for (const auto& nu : nus)
      for (const auto& lambda : enumerate_kp(ctx.order(), nu)) {
        if (first) {
          rows.push_back({nu, root_multiplicities(lambda, ctx.order()), format_parts(lambda, ctx.order()), {}});
          data.emplace_back();
        }
        data[at++].emplace_back(fq, fibers.count(lambda));
      }
    first = false;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].fit = fit_point_counts(data[r], fiber_degree_bound(rows[r].nu));
  return rows;
}

}  // namespace kpq
