#include "kpq/convex_order.hpp"

#include "kpq/error.hpp"

#include <algorithm>

namespace kpq {

std::optional<std::size_t> ConvexOrder::position(const RootVector& root) const {
  auto it = std::find(beta.begin(), beta.end(), root);
  if (it == beta.end()) return std::nullopt;
  return static_cast<std::size_t>(it - beta.begin());
}

ConvexOrder build_order(const CartanDatum& datum, const Word& w) {
  const auto n = number_of_positive_roots(datum);
  if (w.size() != n)
    throw Error("word " + format_word(w) + " has length " + std::to_string(w.size()) + ", w0 has length " +
                std::to_string(n));
  if (!is_reduced(datum, w)) throw Error("word " + format_word(w) + " is not reduced");

  ConvexOrder order{datum, w, {}, {}, IntMatrix(n, n, 0)};
  Word prefix;
  for (auto letter : w) {
    order.beta.push_back(apply_word(datum, prefix, RootVector::simple(datum.rank(), letter)));
    prefix.push_back(letter);
    order.gamma.push_back(-apply_word(datum, prefix, CoweightVector::fundamental(datum.rank(), letter)));
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) order.pairing(k, l) = pairing(order.gamma[k], order.beta[l]);

  for (std::size_t k = 0; k < n; ++k)
    if (order.pairing(k, k) != 1) throw InternalError("pairing diagonal is not 1 for " + format_word(w));
  return order;
}

std::vector<SignViolation> pairing_sign_report(const ConvexOrder& order) {
  std::vector<SignViolation> out;
  const auto n = order.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      auto v = order.pairing(k, l);
      if (k == l && v != 1) out.push_back({k, l, v, "=1"});
      if (k < l && v > 0) out.push_back({k, l, v, "<=0"});
      if (k > l && v < 0) out.push_back({k, l, v, ">=0"});
    }
  return out;
}

std::string format_pairing_tsv(const ConvexOrder& order) {
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t l = 0; l < order.size(); ++l) {
      if (l) out += '\t';
      out += std::to_string(order.pairing(k, l));
    }
    out += '\n';
  }
  return out;
}

}  // namespace kpq
