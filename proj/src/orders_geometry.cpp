#include "kpq/orders_geometry.hpp"

#include <algorithm>
#include <functional>

namespace kpq {

RingelReport ringel_check(const IntMatrix& hom_table, const ConvexOrder& order) {
  const auto n = order.size();
  if (hom_table.rows() != n || hom_table.cols() != n) throw Error("Hom table does not match the order");
  RingelReport rep{hom_table, IntMatrix(n, n, 0)};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) rep.formula(k, l) = std::max<long long>(order.pairing(k, l), 0);
  rep.matches_as_printed = true;
  rep.matches_transposed = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (rep.hom(k, l) != rep.formula(k, l)) rep.matches_as_printed = false;
      if (rep.hom(k, l) != rep.formula(l, k)) rep.matches_transposed = false;
    }
  if (!rep.matches_as_printed && !rep.matches_transposed)
    throw VerificationFailed("Hom table matches max(C, 0) in neither direction for word " + format_word(order.word) + "\n" +
                rep.to_tsv());
  return rep;
}

std::string RingelReport::to_tsv() const {
  std::string out = "k\tl\thom\tmax(C[k][l],0)\tmax(C[l][k],0)\n";
  for (std::size_t k = 0; k < hom.rows(); ++k)
    for (std::size_t l = 0; l < hom.cols(); ++l)
      out += std::to_string(k + 1) + "\t" + std::to_string(l + 1) + "\t" + std::to_string(hom(k, l)) + "\t" +
             std::to_string(formula(k, l)) + "\t" + std::to_string(formula(l, k)) + "\n";
  return out;
}

std::string CalibrationResult::evidence_tsv() const {
  std::string out = "setting\tcandidate\tnu\toutcome\n";
  for (const auto& row : evidence) out += row + "\n";
  return out;
}

nlohmann::json CalibrationResult::to_json() const { return {{"ledger", ledger.to_json()}, {"evidence", evidence}}; }

std::vector<RootVector> dimension_vectors_up_to(int rank, int max_total) {
  std::vector<RootVector> out;
  std::function<void(std::size_t, int, RootVector&)> rec = [&](std::size_t j, int left, RootVector& v) {
    if (j == static_cast<std::size_t>(rank)) {
      if (!v.is_zero()) out.push_back(v);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      v.coords[j] = c;
      rec(j + 1, left - c, v);
    }
    v.coords[j] = 0;
  };
  auto v = RootVector::zero(rank);
  rec(0, max_total, v);
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& what, const CalibrationResult& partial) {
  throw VerificationFailed("calibration failed: " + what + "\n" + partial.evidence_tsv());
}

}  // namespace

CalibrationResult calibrate(const RepContext<RationalField>& ctx, const std::vector<RootVector>& test_nus) {
  if (test_nus.empty()) throw Error("calibration needs at least one test dimension vector");
  CalibrationResult result;
  const auto& order = ctx.order();
  const std::string word = format_word(order.word);

  auto ringel = ringel_check(ctx);
  result.evidence.push_back("hom_formula_direction\tas-printed\tall\t" +
                            std::string(ringel.matches_as_printed ? "match" : "mismatch"));
  result.evidence.push_back("hom_formula_direction\ttransposed\tall\t" +
                            std::string(ringel.matches_transposed ? "match" : "mismatch"));
  if (ringel.matches_as_printed == ringel.matches_transposed)
    fail("the Hom table does not single out a direction", result);
  result.ledger.hom_formula_direction =
      ringel.matches_transposed ? HomDirection::Transposed : HomDirection::AsPrinted;

  std::vector<OrderDirection> consistent;
  for (auto dir : {OrderDirection::AsPrinted, OrderDirection::Reversed}) {
    bool all = true;
    for (const auto& nu : test_nus) {
      auto kps = enumerate_kp(order, nu);
      bool same = kp_relation(kps, order, dir) == closure_relation(ctx, kps);
      result.evidence.push_back("order_direction\t" + to_string(dir) + "\t" + format_vector(nu.coords) + "\t" +
                                (same ? "agrees-with-closure" : "differs-from-closure"));
      all = all && same;
    }
    if (all) consistent.push_back(dir);
  }
  if (consistent.size() != 1)
    fail(std::to_string(consistent.size()) + " order directions agree with the closure order", result);
  result.ledger.order_direction = consistent.front();

  std::vector<ResLargeSide> sides;
  for (auto side : {ResLargeSide::FirstFactor, ResLargeSide::SecondFactor}) {
    auto trial = result.ledger;
    trial.res_large_side = side;
    std::size_t violations = 0;
    for (const auto& nu : test_nus) {
      std::size_t here = 0;
      for (const auto& m : enumerate_kp(order, nu)) here += mackey_dominance_check(m, order, trial).violations().size();
      result.evidence.push_back("res_large_side\t" + to_string(side) + "\t" + format_vector(nu.coords) + "\t" +
                                std::to_string(here) + " violations");
      violations += here;
    }
    if (violations == 0) sides.push_back(side);
  }
  if (sides.size() != 1)
    fail(std::to_string(sides.size()) + " restriction sides give no Mackey violations", result);
  result.ledger.res_large_side = sides.front();
  result.evidence.push_back("word\t" + word + "\t-\tcalibrated");
  return result;
}

}  // namespace kpq
