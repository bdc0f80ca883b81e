#include "kpq/ledger.hpp"

#include "kpq/error.hpp"

#include <fstream>
#include <sstream>

namespace kpq {

std::string to_string(OrderDirection d) { return d == OrderDirection::AsPrinted ? "as-printed" : "reversed"; }
std::string to_string(HomDirection d) { return d == HomDirection::AsPrinted ? "as-printed" : "transposed"; }
std::string to_string(ResLargeSide s) { return s == ResLargeSide::FirstFactor ? "first-factor" : "second-factor"; }

nlohmann::json OrientationLedger::to_json() const {
  return {{"order_direction", to_string(order_direction)},
          {"hom_formula_direction", to_string(hom_formula_direction)},
          {"res_large_side", to_string(res_large_side)}};
}

namespace {

std::string field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    throw Error(std::string("ledger is missing string field '") + key + "'");
  return j.at(key).get<std::string>();
}

}  // namespace

OrientationLedger OrientationLedger::from_json(const nlohmann::json& j) {
  OrientationLedger out;
  auto od = field(j, "order_direction");
  if (od == "as-printed") out.order_direction = OrderDirection::AsPrinted;
  else if (od == "reversed") out.order_direction = OrderDirection::Reversed;
  else throw Error("bad order_direction '" + od + "'");

  auto hd = field(j, "hom_formula_direction");
  if (hd == "as-printed") out.hom_formula_direction = HomDirection::AsPrinted;
  else if (hd == "transposed") out.hom_formula_direction = HomDirection::Transposed;
  else throw Error("bad hom_formula_direction '" + hd + "'");

  auto rs = field(j, "res_large_side");
  if (rs == "first-factor") out.res_large_side = ResLargeSide::FirstFactor;
  else if (rs == "second-factor") out.res_large_side = ResLargeSide::SecondFactor;
  else throw Error("bad res_large_side '" + rs + "'");
  return out;
}

OrientationLedger OrientationLedger::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ledger file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error("ledger file '" + path + "' is not valid JSON: " + e.what());
  }
  if (j.is_object() && j.contains("ledger")) return from_json(j.at("ledger"));
  return from_json(j);
}

void OrientationLedger::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write ledger file '" + path + "'");
  out << serialize();
}

}  // namespace kpq
