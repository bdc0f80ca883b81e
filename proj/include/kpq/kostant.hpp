#pragma once

// Kostant partitions of a dimension vector and the partial order on them
// defined by the pairing matrix of a convex order:
//
//   n <= m  iff  sum_{t<=k} C[k][t] n_t <= sum_{t<=k} C[k][t] m_t  for all k
//
// (inequality flipped when the ledger says the direction is reversed).

#include "kpq/convex_order.hpp"
#include "kpq/ledger.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kpq {

inline constexpr std::size_t kDefaultCap = 1'000'000;

struct KostantPartition {
  std::vector<Coord> mult;  // indexed by the beta-sequence of the order
  RootVector nu;

  auto operator<=>(const KostantPartition&) const = default;
};

/// Computes nu from the multiplicities.
KostantPartition make_kp(const ConvexOrder& order, std::vector<Coord> mult);

/// The partition with a single part `root` (multiplicity `times`).
KostantPartition single_part(const ConvexOrder& order, const RootVector& root, Coord times = 1);

/// All Kostant partitions of nu, sorted lexicographically by multiplicity
/// vector.
std::vector<KostantPartition> enumerate_kp(const ConvexOrder& order, const RootVector& nu,
                                           std::size_t cap = kDefaultCap);

/// The per-k sums sum_{t<=k} C[k][t] n_t compared by the order.
std::vector<Coord> order_profile(const KostantPartition& p, const ConvexOrder& order);

bool kp_leq(const KostantPartition& a, const KostantPartition& b, const ConvexOrder& order,
            OrderDirection direction);
bool kp_leq(const KostantPartition& a, const KostantPartition& b, const ConvexOrder& order,
            const OrientationLedger& ledger);

/// Multiplicities re-indexed by positive_roots(datum), so partitions from
/// different orders can be compared.
std::vector<Coord> root_multiplicities(const KostantPartition& p, const ConvexOrder& order);
KostantPartition from_root_multiplicities(const std::vector<Coord>& by_root, const ConvexOrder& order);

std::string format_kp(const KostantPartition& p);
/// "2*(1,1,0) + (0,0,1)" style listing of the nonzero parts.
std::string format_parts(const KostantPartition& p, const ConvexOrder& order);

/// A finite relation on a list of elements: leq[a][b] means a <= b.
struct Relation {
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return leq.size(); }
  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }
  /// Pairs (a, b), a != b, with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  bool operator==(const Relation&) const = default;
};

Relation kp_relation(const std::vector<KostantPartition>& elements, const ConvexOrder& order,
                     OrderDirection direction);

struct HasseDiagram {
  std::vector<KostantPartition> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper)

  std::string to_dot() const;
};

/// Throws CapExceeded if kpf(nu) > cap.
HasseDiagram hasse(const ConvexOrder& order, const RootVector& nu, const OrientationLedger& ledger,
                   std::size_t cap = 2000);

/// True iff every word in the commutation class of w induces the same
/// relation on KP(nu), with partitions matched as multiplicity functions on
/// the positive roots.
bool order_invariant_on_class(const CartanDatum& datum, const RootVector& nu, const Word& w,
                              std::size_t cap = 10000);

struct MackeyRow {
  KostantPartition n;
  std::vector<bool> prefix_achievable;  // one flag per k = 1..N
  bool achievable = false;
  bool dominated = false;  // n lies below m in the order of the dominance statement
};

struct MackeyReport {
  KostantPartition m;
  ResLargeSide side = ResLargeSide::SecondFactor;
  std::size_t decompositions = 0;
  std::vector<RootVector> prefix_weights;  // the achievable sums, sorted
  std::vector<MackeyRow> rows;              // one per n in KP(nu)

  std::vector<const MackeyRow*> violations() const;
  std::string to_tsv() const;
};

/// Splits each m_t beta_t = x_t + y_t with the factor on `ledger.res_large_side`
/// spanned by {beta_t, ..., beta_N} and the other by {beta_1, ..., beta_t},
/// collects the sums of the x_t, and flags every n in KP(nu) whose prefix
/// sums n_1 beta_1 + ... + n_k beta_k are all such sums.
///
/// The dominance claim concerns the printed order direction; `dominated` is
/// that claim read through the ledger (kp_leq(n, m) when the ledger keeps the
/// printed direction, kp_leq(m, n) when it reverses it).
MackeyReport mackey_dominance_check(const KostantPartition& m, const ConvexOrder& order,
                                    const OrientationLedger& ledger, std::size_t cap = kDefaultCap);

}  // namespace kpq
