#pragma once

// Convention constants that the text leaves ambiguous. They are fixed once by
// orders_geometry::calibrate against brute-force oracles and then read by
// every order-sensitive computation.

#include <json.hpp>

#include <string>

namespace kpq {

/// Direction of the inequality in the Kostant-partition order.
enum class OrderDirection { AsPrinted, Reversed };
/// Whether dim Hom(M(beta_k), M(beta_l)) = max(C[k][l], 0) or its transpose.
enum class HomDirection { AsPrinted, Transposed };
/// Which restriction factor carries the roots later in the convex order.
enum class ResLargeSide { FirstFactor, SecondFactor };

struct OrientationLedger {
  OrderDirection order_direction = OrderDirection::AsPrinted;
  HomDirection hom_formula_direction = HomDirection::AsPrinted;
  ResLargeSide res_large_side = ResLargeSide::SecondFactor;

  /// Conventions exactly as written, before any calibration.
  static OrientationLedger printed() { return {}; }

  nlohmann::json to_json() const;
  /// Throws kpq::Error on missing or unknown fields.
  static OrientationLedger from_json(const nlohmann::json& j);
  std::string serialize() const { return to_json().dump(2) + "\n"; }
  static OrientationLedger load(const std::string& path);
  void save(const std::string& path) const;

  bool operator==(const OrientationLedger&) const = default;
};

std::string to_string(OrderDirection d);
std::string to_string(HomDirection d);
std::string to_string(ResLargeSide s);

}  // namespace kpq
