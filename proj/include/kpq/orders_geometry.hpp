#pragma once

// Cross-checks between the combinatorial order on Kostant partitions and the
// geometry of orbits, and the calibration that fixes the OrientationLedger.

#include "kpq/kostant.hpp"
#include "kpq/ledger.hpp"
#include "kpq/quiver_rep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kpq {

struct RingelReport {
  IntMatrix hom;      // hom(k, l) = dim Hom(M(beta_k), M(beta_l)), brute force
  IntMatrix formula;  // formula(k, l) = max(C[k][l], 0)
  bool matches_as_printed = false;  // hom == formula
  bool matches_transposed = false;  // hom == formula^T
  std::string to_tsv() const;
};

/// Compares the brute-force Hom table against max(C, 0) in both directions.
/// Throws VerificationFailed if neither matches.
RingelReport ringel_check(const IntMatrix& hom_table, const ConvexOrder& order);

template <class F>
RingelReport ringel_check(const RepContext<F>& ctx) {
  return ringel_check(ctx.hom_table(), ctx.order());
}

/// dim Hom(M(lambda), M(beta_l)) for every l, computed on the direct sum.
template <class F>
std::vector<Coord> closure_profile(const RepContext<F>& ctx, const KostantPartition& lambda) {
  return ctx.hom_profile(ctx.rep_of_kp(lambda));
}

/// True iff the orbit of M(lambda) lies in the closure of the orbit of M(mu):
/// dim Hom(M(lambda), X) >= dim Hom(M(mu), X) for every indecomposable X.
template <class F>
bool closure_leq(const RepContext<F>& ctx, const KostantPartition& lambda, const KostantPartition& mu) {
  if (lambda.nu != mu.nu) throw Error("comparing orbits of different dimension vectors");
  auto a = closure_profile(ctx, lambda);
  auto b = closure_profile(ctx, mu);
  for (std::size_t l = 0; l < a.size(); ++l)
    if (a[l] < b[l]) return false;
  return true;
}

template <class F>
Relation closure_relation(const RepContext<F>& ctx, const std::vector<KostantPartition>& elements) {
  std::vector<std::vector<Coord>> profiles;
  for (const auto& e : elements) profiles.push_back(closure_profile(ctx, e));
  Relation rel{std::vector<std::vector<bool>>(elements.size(), std::vector<bool>(elements.size(), true))};
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      for (std::size_t l = 0; l < profiles[a].size(); ++l)
        if (profiles[a][l] < profiles[b][l]) {
          rel.leq[a][b] = false;
          break;
        }
  return rel;
}

/// True iff kp_leq under the ledger and closure_leq agree on KP(nu).
template <class F>
bool baumann_check(const RepContext<F>& ctx, const RootVector& nu, const OrientationLedger& ledger,
                   std::size_t cap = kDefaultCap) {
  auto kps = enumerate_kp(ctx.order(), nu, cap);
  return kp_relation(kps, ctx.order(), ledger.order_direction) == closure_relation(ctx, kps);
}

struct CalibrationResult {
  OrientationLedger ledger;
  std::vector<std::string> evidence;  // TSV rows: setting, candidate, nu, outcome

  std::string evidence_tsv() const;
  /// {"ledger": {...}, "evidence": [...]}
  nlohmann::json to_json() const;
};

/// Chooses each ledger constant as the unique candidate consistent with the
/// oracles: the Hom formula direction from the Hom table, the order direction from
/// agreement with closure_leq on every test nu, and the restriction side from
/// an empty dominance violation list on every test nu. Throws VerificationFailed with the
/// evidence table when a constant has no candidate or more than one.
CalibrationResult calibrate(const RepContext<RationalField>& ctx, const std::vector<RootVector>& test_nus);

/// All nu >= 0 with |nu| <= max_total, nonzero, in root_less order.
std::vector<RootVector> dimension_vectors_up_to(int rank, int max_total);

}  // namespace kpq
