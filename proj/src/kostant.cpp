#include "kpq/kostant.hpp"

#include "kpq/error.hpp"
#include "kpq/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kpq {

KostantPartition make_kp(const ConvexOrder& order, std::vector<Coord> mult) {
  if (mult.size() != order.size()) throw Error("Kostant partition has the wrong length");
  auto nu = RootVector::zero(order.datum.rank());
  for (std::size_t t = 0; t < mult.size(); ++t) {
    if (mult[t] < 0) throw Error("negative multiplicity in Kostant partition");
    nu += mult[t] * order.beta[t];
  }
  return {std::move(mult), std::move(nu)};
}

KostantPartition single_part(const ConvexOrder& order, const RootVector& root, Coord times) {
  auto pos = order.position(root);
  if (!pos) throw Error("(" + format_vector(root.coords) + ") is not a positive root");
  std::vector<Coord> mult(order.size(), 0);
  mult[*pos] = times;
  return make_kp(order, std::move(mult));
}

namespace {

void enumerate_from(const ConvexOrder& order, std::size_t t, RootVector& rest, std::vector<Coord>& mult,
                    std::size_t cap, std::vector<KostantPartition>& out) {
  if (t == order.size()) {
    if (!rest.is_zero()) return;
    if (out.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " Kostant partitions");
    out.push_back(make_kp(order, mult));
    return;
  }
  const auto& b = order.beta[t];
  Coord bound = -1;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] > 0) {
      auto fit = rest[j] / b[j];
      bound = bound < 0 ? fit : std::min(bound, fit);
    }
  for (Coord c = 0; c <= bound; ++c) {
    mult[t] = c;
    if (c) rest -= b;
    enumerate_from(order, t + 1, rest, mult, cap, out);
  }
  for (Coord c = 1; c <= bound; ++c) rest += b;
  mult[t] = 0;
}

}  // namespace

std::vector<KostantPartition> enumerate_kp(const ConvexOrder& order, const RootVector& nu, std::size_t cap) {
  if (static_cast<int>(nu.size()) != order.datum.rank()) throw Error("dimension vector has the wrong rank");
  if (!nu.is_nonnegative()) throw Error("dimension vector must be nonnegative");
  std::vector<KostantPartition> out;
  auto rest = nu;
  std::vector<Coord> mult(order.size(), 0);
  enumerate_from(order, 0, rest, mult, cap, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.mult < b.mult; });
  return out;
}

std::vector<Coord> order_profile(const KostantPartition& p, const ConvexOrder& order) {
  std::vector<Coord> out(order.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t t = 0; t <= k; ++t) out[k] += order.pairing(k, t) * p.mult[t];
  return out;
}

bool kp_leq(const KostantPartition& a, const KostantPartition& b, const ConvexOrder& order,
            OrderDirection direction) {
  if (a.nu != b.nu) throw Error("comparing Kostant partitions of different dimension vectors");
  auto pa = order_profile(a, order);
  auto pb = order_profile(b, order);
  for (std::size_t k = 0; k < pa.size(); ++k) {
    bool ok = direction == OrderDirection::AsPrinted ? pa[k] <= pb[k] : pa[k] >= pb[k];
    if (!ok) return false;
  }
  return true;
}

bool kp_leq(const KostantPartition& a, const KostantPartition& b, const ConvexOrder& order,
            const OrientationLedger& ledger) {
  return kp_leq(a, b, order, ledger.order_direction);
}

std::vector<Coord> root_multiplicities(const KostantPartition& p, const ConvexOrder& order) {
  auto roots = positive_roots(order.datum);
  std::vector<Coord> out(roots.size(), 0);
  for (std::size_t r = 0; r < roots.size(); ++r) out[r] = p.mult[*order.position(roots[r])];
  return out;
}

KostantPartition from_root_multiplicities(const std::vector<Coord>& by_root, const ConvexOrder& order) {
  auto roots = positive_roots(order.datum);
  if (by_root.size() != roots.size()) throw Error("multiplicity function has the wrong length");
  std::vector<Coord> mult(order.size(), 0);
  for (std::size_t r = 0; r < roots.size(); ++r) mult[*order.position(roots[r])] = by_root[r];
  return make_kp(order, std::move(mult));
}

std::string format_kp(const KostantPartition& p) { return "(" + format_vector(p.mult) + ")"; }

std::string format_parts(const KostantPartition& p, const ConvexOrder& order) {
  std::string out;
  for (std::size_t t = 0; t < p.mult.size(); ++t) {
    if (!p.mult[t]) continue;
    if (!out.empty()) out += " + ";
    if (p.mult[t] > 1) out += std::to_string(p.mult[t]) + "*";
    out += "(" + format_vector(order.beta[t].coords) + ")";
  }
  return out.empty() ? "0" : out;
}

bool Relation::is_reflexive() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (!leq[a][a]) return false;
  return true;
}

bool Relation::is_antisymmetric() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (leq[a][b] && leq[b][a]) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < size(); ++c)
        if (leq[b][c] && !leq[a][c]) return false;
    }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (a == b || !leq[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < size() && !between; ++c)
        between = c != a && c != b && leq[a][c] && leq[c][b];
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

Relation kp_relation(const std::vector<KostantPartition>& elements, const ConvexOrder& order,
                     OrderDirection direction) {
  Relation rel{std::vector<std::vector<bool>>(elements.size(), std::vector<bool>(elements.size(), false))};
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      rel.leq[a][b] = kp_leq(elements[a], elements[b], order, direction);
  return rel;
}

std::string HasseDiagram::to_dot() const {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < nodes.size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + format_kp(nodes[v]) + "\"];\n";
  for (auto [lo, hi] : edges) out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

HasseDiagram hasse(const ConvexOrder& order, const RootVector& nu, const OrientationLedger& ledger,
                   std::size_t cap) {
  HasseDiagram h;
  h.nodes = enumerate_kp(order, nu, cap);
  h.edges = kp_relation(h.nodes, order, ledger.order_direction).covers();
  return h;
}

bool order_invariant_on_class(const CartanDatum& datum, const RootVector& nu, const Word& w, std::size_t cap) {
  using Pairs = std::set<std::pair<std::vector<Coord>, std::vector<Coord>>>;
  std::optional<Pairs> reference;
  for (const auto& word : commutation_class(datum, w, cap)) {
    auto order = build_order(datum, word);
    auto kps = enumerate_kp(order, nu, cap);
    Pairs pairs;
    for (const auto& a : kps)
      for (const auto& b : kps)
        if (kp_leq(a, b, order, OrderDirection::AsPrinted))
          pairs.emplace(root_multiplicities(a, order), root_multiplicities(b, order));
    if (!reference) reference = std::move(pairs);
    else if (*reference != pairs) return false;
  }
  return true;
}

namespace {

using Span = std::vector<RootVector>;

bool in_span(const RootVector& x, const Span& gens, std::size_t from, std::map<std::pair<RootVector, std::size_t>, bool>& memo) {
  if (x.is_zero()) return true;
  if (from == gens.size()) return false;
  auto key = std::make_pair(x, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool found = in_span(x, gens, from + 1, memo);
  if (!found) {
    auto rest = x - gens[from];
    if (rest.is_nonnegative()) found = in_span(rest, gens, from, memo);
  }
  memo[key] = found;
  return found;
}

// All vectors 0 <= x <= bound, coordinatewise.
std::vector<RootVector> box(const RootVector& bound) {
  std::vector<RootVector> out{RootVector::zero(static_cast<int>(bound.size()))};
  for (std::size_t j = 0; j < bound.size(); ++j) {
    std::vector<RootVector> next;
    for (const auto& v : out)
      for (Coord c = 0; c <= bound[j]; ++c) {
        auto w = v;
        w.coords[j] = c;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<const MackeyRow*> MackeyReport::violations() const {
  std::vector<const MackeyRow*> out;
  for (const auto& row : rows)
    if (row.achievable && !row.dominated) out.push_back(&row);
  return out;
}

std::string MackeyReport::to_tsv() const {
  std::string out = "n\tachievable_per_k\tachievable\tdominated\n";
  for (const auto& row : rows) {
    std::string flags;
    for (bool f : row.prefix_achievable) flags += f ? '1' : '0';
    out += format_kp(row.n) + "\t" + flags + "\t" + (row.achievable ? "yes" : "no") + "\t" +
           (row.dominated ? "yes" : "no") + "\n";
  }
  return out;
}

MackeyReport mackey_dominance_check(const KostantPartition& m, const ConvexOrder& order,
                                    const OrientationLedger& ledger, std::size_t cap) {
  const auto n_roots = order.size();
  MackeyReport report;
  report.m = m;
  report.side = ledger.res_large_side;

  // Possible x_t for each part.
  std::vector<std::vector<RootVector>> choices;
  std::size_t total = 1;
  for (std::size_t t = 0; t < n_roots; ++t) {
    if (!m.mult[t]) continue;
    Span early(order.beta.begin(), order.beta.begin() + static_cast<std::ptrdiff_t>(t + 1));
    Span late(order.beta.begin() + static_cast<std::ptrdiff_t>(t), order.beta.end());
    const Span& x_span = ledger.res_large_side == ResLargeSide::SecondFactor ? early : late;
    const Span& y_span = ledger.res_large_side == ResLargeSide::SecondFactor ? late : early;
    std::map<std::pair<RootVector, std::size_t>, bool> memo_x;
    std::map<std::pair<RootVector, std::size_t>, bool> memo_y;
    auto whole = m.mult[t] * order.beta[t];
    std::vector<RootVector> xs;
    for (const auto& x : box(whole))
      if (in_span(x, x_span, 0, memo_x) && in_span(whole - x, y_span, 0, memo_y)) xs.push_back(x);
    total *= xs.size();
    if (total > cap) throw CapExceeded("more than " + std::to_string(cap) + " Mackey decompositions");
    choices.push_back(std::move(xs));
  }
  report.decompositions = total;

  std::set<RootVector> sums{RootVector::zero(order.datum.rank())};
  for (const auto& xs : choices) {
    std::set<RootVector> next;
    for (const auto& s : sums)
      for (const auto& x : xs) next.insert(s + x);
    sums = std::move(next);
  }
  report.prefix_weights.assign(sums.begin(), sums.end());
  std::sort(report.prefix_weights.begin(), report.prefix_weights.end(), root_less);

  for (const auto& n : enumerate_kp(order, m.nu, cap)) {
    MackeyRow row{n, {}, true, false};
    auto prefix = RootVector::zero(order.datum.rank());
    for (std::size_t k = 0; k < n_roots; ++k) {
      prefix += n.mult[k] * order.beta[k];
      bool ok = sums.count(prefix) > 0;
      row.prefix_achievable.push_back(ok);
      row.achievable = row.achievable && ok;
    }
    row.dominated = ledger.order_direction == OrderDirection::AsPrinted ? kp_leq(n, m, order, ledger)
                                                                        : kp_leq(m, n, order, ledger);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace kpq
