// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons, each
// timed against its limit. Exit status is nonzero if any line fails.

#include "kpq/convex_order.hpp"
#include "kpq/error.hpp"
#include "kpq/flag_fibers.hpp"
#include "kpq/kostant.hpp"
#include "kpq/orders_geometry.hpp"
#include "kpq/pbw_braid.hpp"
#include "kpq/quiver.hpp"
#include "kpq/quiver_rep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace kpq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Line {
  int number;
  std::string name;
  double limit_s;
  double elapsed_s;
  Outcome outcome;

  bool passed() const { return outcome.ok && elapsed_s <= limit_s; }

  std::string text() const {
    std::ostringstream s;
    s << (passed() ? "PASS" : "FAIL") << "  " << number << "  " << name << "  ";
    s.setf(std::ios::fixed);
    s.precision(2);
    s << elapsed_s << " s (limit " << limit_s << " s)";
    if (!outcome.ok)
      s << "  " << outcome.detail;
    else if (elapsed_s > limit_s)
      s << "  over time";
    else if (!outcome.detail.empty())
      s << "  " << outcome.detail;
    return s.str();
  }
};

Line timed(int number, std::string name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return {number, std::move(name), limit_s, dt.count(), o};
}

std::vector<Quiver> orientations(const char* label) {
  auto d = CartanDatum::parse(label);
  std::vector<Quiver> out;
  const auto& edges = d.edges();
  for (unsigned mask = 0; mask < (1U << edges.size()); ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [i, j] = edges[k];
      arrows.push_back((mask >> k) & 1U ? Arrow{j, i} : Arrow{i, j});
    }
    out.emplace_back(d, arrows);
  }
  return out;
}

std::vector<Quiver> linear_and_zigzag(std::initializer_list<const char*> labels) {
  std::vector<Quiver> out;
  for (auto label : labels) {
    auto d = CartanDatum::parse(label);
    out.push_back(Quiver::linear(d));
    if (!(Quiver::zigzag(d) == Quiver::linear(d))) out.push_back(Quiver::zigzag(d));
  }
  return out;
}

std::string where(const Quiver& q, const RootVector& nu) {
  return q.datum().label() + " [" + q.to_text().substr(q.to_text().find('\n') + 1) + "] nu=(" +
         format_vector(nu.coords) + ")";
}

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

BigInt power(long long q, long long e) {
  BigInt out = 1;
  for (long long k = 0; k < e; ++k) out *= q;
  return out;
}

Outcome root_counts() {
  Outcome o;
  const std::vector<std::pair<const char*, std::size_t>> expected{
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"D4", 12}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (auto [label, n] : expected) {
    auto got = positive_roots(CartanDatum::parse(label)).size();
    if (got != n) o.fail(std::string(label) + " gives " + std::to_string(got));
  }
  return o;
}

Outcome pairing_signs() {
  Outcome o;
  for (auto [label, count] : std::vector<std::pair<const char*, std::size_t>>{{"A2", 2}, {"A3", 16}}) {
    auto d = CartanDatum::parse(label);
    auto words = reduced_words_of_w0(d, 1000);
    if (words.size() != count) o.fail(std::string(label) + " has " + std::to_string(words.size()) + " words");
    for (const auto& w : words) {
      auto report = pairing_sign_report(build_order(d, w));
      if (!report.empty())
        o.fail("word " + format_word(w) + ": C[" + std::to_string(report[0].k + 1) + "][" +
               std::to_string(report[0].l + 1) + "] = " + std::to_string(report[0].value));
    }
  }
  return o;
}

Outcome ringel() {
  Outcome o;
  for (const auto& q : linear_and_zigzag({"A2", "A3", "D4"})) {
    RepContext<RationalField> ctx(RationalField{}, q);
    RingelReport r;
    try {
      r = ringel_check(ctx);
    } catch (const VerificationFailed&) {
      o.fail("no direction matches on " + where(q, RootVector::zero(q.rank())));
      continue;
    }
    if (r.matches_as_printed == r.matches_transposed)
      o.fail("both directions match on " + where(q, RootVector::zero(q.rank())));
  }
  if (o.ok) o.detail = "transposed direction on every quiver";
  return o;
}

Outcome baumann(const OrientationLedger& ledger) {
  Outcome o;
  for (const auto& q : linear_and_zigzag({"A2", "A3", "D4"})) {
    RepContext<RationalField> ctx(RationalField{}, q);
    for (const auto& nu : dimension_vectors_up_to(q.rank(), 4))
      if (!baumann_check(ctx, nu, ledger)) o.fail("relations differ on " + where(q, nu));
  }
  return o;
}

Outcome commutation_invariance() {
  Outcome o;
  auto d = CartanDatum::parse("A3");
  auto classes = commutation_classes(d, reduced_words_of_w0(d, 1000), 1000);
  for (const auto& cls : classes)
    if (!order_invariant_on_class(d, RootVector({1, 1, 1}), cls.front()))
      o.fail("class of " + format_word(cls.front()) + " is not invariant");
  if (o.ok) o.detail = std::to_string(classes.size()) + " classes";
  return o;
}

Outcome orbit_decomposition(const std::vector<int>& qs) {
  Outcome o;
  for (const auto& q : linear_and_zigzag({"A2", "A3", "D4"}))
    for (int fq : qs) {
      RepContext<GaloisField> ctx(GaloisField(fq), q);
      for (const auto& nu : dimension_vectors_up_to(q.rank(), 4)) {
        BigInt total = 0;
        for (const auto& lambda : enumerate_kp(ctx.order(), nu)) total += orbit_point_count(ctx, lambda, fq);
        if (total != power(fq, rep_space_dim(q, nu)))
          o.fail("q=" + std::to_string(fq) + " sum " + total.str() + " on " + where(q, nu));
      }
    }
  return o;
}

Outcome evenness(const std::vector<int>& qs) {
  Outcome o;
  std::size_t fits = 0;
  for (const auto& q : linear_and_zigzag({"A2", "A3", "D4"}))
    for (const auto& row : fiber_sweep(q, 4, default_q_list())) {
      ++fits;
      if (!row.fit.verified || row.fit.verdict != EvenVerdict::ConsistentWithEven)
        o.fail(where(q, row.nu) + " lambda " + row.parts + ": " + row.fit.report_line());
    }
  auto a2 = Quiver::linear(CartanDatum::parse("A2"));
  for (int fq : qs) {
    RepContext<GaloisField> ctx(GaloisField(fq), a2);
    auto kps = enumerate_kp(ctx.order(), RootVector({1, 1}));
    FiberCounter<GaloisField> counter(ctx);
    for (const auto& lambda : kps) {
      bool zero = lambda.mult[*ctx.order().position(RootVector({1, 1}))] == 0;
      auto got = counter.count(lambda);
      if (got != (zero ? 2 : 1))
        o.fail("A2 spot value " + got.str() + " for " + format_parts(lambda, ctx.order()) + " at q=" +
               std::to_string(fq));
    }
  }
  if (o.ok) o.detail = std::to_string(fits) + " fibre polynomials";
  return o;
}

Outcome mackey(const OrientationLedger& ledger) {
  Outcome o;
  std::size_t checked = 0;
  // Every convex order of A2 and A3, not only the adapted ones.
  for (auto label : {"A2", "A3"}) {
    auto d = CartanDatum::parse(label);
    for (const auto& w : reduced_words_of_w0(d, 1000)) {
      auto order = build_order(d, w);
      for (const auto& nu : dimension_vectors_up_to(d.rank(), 4))
        for (const auto& m : enumerate_kp(order, nu)) {
          ++checked;
          auto report = mackey_dominance_check(m, order, ledger);
          if (auto bad = report.violations(); !bad.empty())
            o.fail("word " + format_word(w) + " m=" + format_kp(m) + " n=" + format_kp(bad.front()->n));
        }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " choices of m";
  return o;
}

template <class F>
void reflection_for(const F& field, const OrientationLedger& ledger, Outcome& o, std::size_t& checked) {
  for (auto label : {"A2", "A3", "D4"})
    for (const auto& q : orientations(label)) {
      RepContext<F> ctx(field, q);
      for (auto i : q.sinks()) {
        RepContext<F> reflected(field, reflect_quiver(i, q));
        for (const auto& nu : dimension_vectors_up_to(q.rank(), 4)) {
          for (const auto& lambda : enumerate_kp(ctx.order(), nu)) {
            if (!in_ker_locus(ctx, lambda, i)) continue;
            ++checked;
            if (!verify_reflection(ctx, reflected, i, lambda))
              o.fail(field.name() + " sink " + std::to_string(i + 1) + " " + where(q, nu) + " lambda " +
                     format_kp(lambda));
          }
          if (!order_compat(i, nu, ctx.order(), reflected.order(), ledger))
            o.fail("order not preserved at sink " + std::to_string(i + 1) + " " + where(q, nu));
        }
      }
    }
}

Outcome reflection(const OrientationLedger& ledger) {
  Outcome o;
  std::size_t checked = 0;
  reflection_for(GaloisField(2), ledger, o, checked);
  reflection_for(GaloisField(3), ledger, o, checked);
  reflection_for(RationalField{}, ledger, o, checked);
  if (o.ok) o.detail = std::to_string(checked) + " reflections";
  return o;
}

}  // namespace

int main() {
  // Calibration runs first: later criteria read the ledger, and the suite
  // stops if no consistent assignment exists.
  OrientationLedger ledger;
  auto calibration = timed(10, "calibration stability", 60, [&] {
    Outcome o;
    auto from = [](const Quiver& q) {
      RepContext<RationalField> ctx(RationalField{}, q);
      return calibrate(ctx, dimension_vectors_up_to(q.rank(), 3)).ledger;
    };
    auto a2 = from(Quiver::linear(CartanDatum::parse("A2")));
    auto a3 = from(Quiver::linear(CartanDatum::parse("A3")));
    if (!(a2 == a3)) o.fail("A2 gives " + one_line(a2.serialize()) + ", A3 gives " + one_line(a3.serialize()));
    ledger = a3;
    o.detail = one_line(ledger.to_json().dump());
    return o;
  });
  if (!calibration.outcome.ok) {
    std::cout << calibration.text() << "\naborting: no consistent convention ledger\n";
    return 1;
  }

  const std::vector<int> qs{2, 3, 4, 5, 7, 8, 9};
  std::vector<Line> lines;
  lines.push_back(timed(1, "root counts", 5, root_counts));
  lines.push_back(timed(2, "pairing sign pattern", 1, pairing_signs));
  lines.push_back(timed(3, "Hom table formula", 10, ringel));
  lines.push_back(timed(4, "order equals closure order", 120, [&] { return baumann(ledger); }));
  lines.push_back(timed(5, "commutation-class invariance", 30, commutation_invariance));
  lines.push_back(timed(6, "orbit decomposition", 60, [&] { return orbit_decomposition(qs); }));
  lines.push_back(timed(7, "fibre count evenness", 120, [&] { return evenness(qs); }));
  lines.push_back(timed(8, "Mackey dominance", 60, [&] { return mackey(ledger); }));
  lines.push_back(timed(9, "reflection shadow", 120, [&] { return reflection(ledger); }));
  lines.push_back(calibration);

  bool all = true;
  for (const auto& l : lines) {
    std::cout << l.text() << "\n";
    all = all && l.passed();
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
