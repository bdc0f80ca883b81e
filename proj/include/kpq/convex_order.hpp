#pragma once

// The total order on positive roots attached to a reduced word of w0:
//
//   beta_k  = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}
//   gamma_k = -s_{i_1} ... s_{i_k} omega^vee_{i_k}
//   C[k][l] = <gamma_k, beta_l>
//
// C has unit diagonal, is <= 0 strictly above the diagonal and >= 0 strictly
// below it.

#include "kpq/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kpq {

struct ConvexOrder {
  CartanDatum datum;
  Word word;
  std::vector<RootVector> beta;
  std::vector<CoweightVector> gamma;
  IntMatrix pairing;  // pairing(k, l) = <gamma_k, beta_l>

  std::size_t size() const { return beta.size(); }
  /// Index of a positive root in the beta-sequence.
  std::optional<std::size_t> position(const RootVector& root) const;
};

/// Throws kpq::Error unless w is a reduced word of w0.
ConvexOrder build_order(const CartanDatum& datum, const Word& w);

struct SignViolation {
  std::size_t k;
  std::size_t l;
  long long value;
  std::string expected;  // "=1", "<=0" or ">=0"
};

/// Every entry of the pairing matrix breaking the sign pattern.
std::vector<SignViolation> pairing_sign_report(const ConvexOrder& order);

/// Pairing matrix as tab-separated rows.
std::string format_pairing_tsv(const ConvexOrder& order);

}  // namespace kpq
