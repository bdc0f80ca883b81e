#include "kpq/cli.hpp"

#include "kpq/convex_order.hpp"
#include "kpq/error.hpp"
#include "kpq/flag_fibers.hpp"
#include "kpq/kostant.hpp"
#include "kpq/ledger.hpp"
#include "kpq/orders_geometry.hpp"
#include "kpq/pbw_braid.hpp"
#include "kpq/quiver.hpp"
#include "kpq/quiver_rep.hpp"
#include "kpq/root_system.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>
#include <variant>

namespace kpq {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

Quiver load_quiver(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return Quiver::parse(buf.str());
  }
  // Shorthand such as A3linear, D4zigzag or plain A2 (linear).
  static const std::regex shorthand("^([ADEade][0-9]+)(linear|zigzag)?$");
  std::smatch match;
  if (std::regex_match(arg, match, shorthand)) {
    auto datum = CartanDatum::parse(match[1].str());
    return match[2].str() == "zigzag" ? Quiver::zigzag(datum) : Quiver::linear(datum);
  }
  throw UsageError("no quiver file '" + arg + "'");
}

OrientationLedger require_ledger(const std::string& path) {
  if (!std::filesystem::is_regular_file(path))
    throw UsageError("ledger file '" + path + "' not found; run `kpq calibrate <quiver>` first");
  return OrientationLedger::load(path);
}

RootVector parse_nu(const std::string& text, int rank) {
  auto nu = parse_root(text);
  if (static_cast<int>(nu.size()) != rank)
    throw UsageError("dimension vector '" + text + "' needs " + std::to_string(rank) + " entries");
  if (!nu.is_nonnegative()) throw UsageError("dimension vector '" + text + "' has a negative entry");
  return nu;
}

std::vector<int> parse_q_list(const std::string& text) {
  std::vector<int> out;
  for (auto c : parse_root(text).coords) {
    if (!prime_power(static_cast<int>(c))) throw UsageError(std::to_string(c) + " is not a prime power");
    out.push_back(static_cast<int>(c));
  }
  return out;
}

using AnyContext = std::variant<RepContext<RationalField>, RepContext<GaloisField>>;

AnyContext make_context(const FieldSpec& spec, const Quiver& q) {
  if (spec.q) return RepContext<GaloisField>(GaloisField(*spec.q), q);
  return RepContext<RationalField>(RationalField{}, q);
}

void print_order(std::ostream& out, const ConvexOrder& order) {
  out << "word\t" << format_word(order.word) << "\n";
  out << "k\tletter\tbeta\tgamma\n";
  for (std::size_t k = 0; k < order.size(); ++k)
    out << k + 1 << "\t" << order.word[k] + 1 << "\t" << format_vector(order.beta[k].coords) << "\t"
        << format_vector(order.gamma[k].coords) << "\n";
  out << "pairing\n" << format_pairing_tsv(order);
  out << "sign_violations\t" << pairing_sign_report(order).size() << "\n";
}

struct Options {
  std::string type;
  std::string word;
  std::string adapted;
  std::string quiver;
  std::string nu;
  std::string hasse_out;
  std::string ledger = "ledger.json";
  std::string what;
  std::string count_what;
  std::string q_list;
  std::string fields = "F2,F3,Q";
  std::string out_path = "ledger.json";
  int nu_max = 3;
  std::string seed;
};

int cmd_roots(const Options& o, std::ostream& out) {
  auto datum = CartanDatum::parse(o.type);
  for (const auto& r : positive_roots(datum)) out << format_vector(r.coords) << "\n";
  return 0;
}

int cmd_order(const Options& o, std::ostream& out) {
  auto datum = CartanDatum::parse(o.type);
  Word w;
  if (!o.adapted.empty()) {
    if (!o.word.empty()) throw UsageError("give either a word or --adapted, not both");
    auto q = load_quiver(o.adapted);
    if (!(q.datum() == datum)) throw UsageError("quiver type differs from " + datum.label());
    w = adapted_word_of_w0(q);
  } else {
    if (o.word.empty()) throw UsageError("order needs a word or --adapted <quiver>");
    w = parse_word(o.word);
    for (auto letter : w)
      if (!datum.valid_vertex(letter)) throw UsageError("letter out of range in '" + o.word + "'");
  }
  auto order = build_order(datum, w);
  print_order(out, order);
  return pairing_sign_report(order).empty() ? 0 : 1;
}

int cmd_kp(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.quiver);
  auto order = build_order(q.datum(), adapted_word_of_w0(q));
  auto nu = parse_nu(o.nu, q.rank());
  auto kps = enumerate_kp(order, nu);
  out << "# word " << format_word(order.word) << ", kpf " << kps.size() << "\n";
  out << "multiplicities\tparts\n";
  for (const auto& p : kps) out << format_kp(p) << "\t" << format_parts(p, order) << "\n";
  if (!o.hasse_out.empty()) {
    auto ledger = require_ledger(o.ledger);
    auto h = hasse(order, nu, ledger);
    std::ofstream dot(o.hasse_out);
    if (!dot) throw UsageError("cannot write '" + o.hasse_out + "'");
    dot << h.to_dot();
  }
  return 0;
}

int verify_ringel(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.quiver);
  RepContext<RationalField> ctx(RationalField{}, q);
  auto report = ringel_check(ctx);
  out << "word\t" << format_word(ctx.order().word) << "\n" << report.to_tsv();
  out << "as-printed\t" << (report.matches_as_printed ? "match" : "mismatch") << "\n";
  out << "transposed\t" << (report.matches_transposed ? "match" : "mismatch") << "\n";
  if (std::filesystem::is_regular_file(o.ledger)) {
    auto ledger = OrientationLedger::load(o.ledger);
    bool agrees = ledger.hom_formula_direction == HomDirection::Transposed ? report.matches_transposed
                                                                           : report.matches_as_printed;
    out << "ledger\t" << to_string(ledger.hom_formula_direction) << "\t" << (agrees ? "confirmed" : "contradicted")
        << "\n";
    if (!agrees) return 1;
  }
  return report.matches_as_printed != report.matches_transposed ? 0 : 1;
}

int verify_baumann(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.quiver);
  auto ledger = require_ledger(o.ledger);
  RepContext<RationalField> ctx(RationalField{}, q);
  bool all = true;
  out << "nu\tkpf\tbaumann\n";
  for (const auto& nu : dimension_vectors_up_to(q.rank(), o.nu_max)) {
    bool ok = baumann_check(ctx, nu, ledger);
    all = all && ok;
    out << format_vector(nu.coords) << "\t" << enumerate_kp(ctx.order(), nu).size() << "\t" << (ok ? "pass" : "FAIL")
        << "\n";
  }
  return all ? 0 : 1;
}

int verify_mackey(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.quiver);
  auto ledger = require_ledger(o.ledger);
  auto order = build_order(q.datum(), adapted_word_of_w0(q));
  std::size_t violations = 0;
  out << "m\tn\tachievable_per_k\tdominated\n";
  for (const auto& nu : dimension_vectors_up_to(q.rank(), o.nu_max))
    for (const auto& m : enumerate_kp(order, nu)) {
      auto report = mackey_dominance_check(m, order, ledger);
      for (const auto& row : report.rows) {
        if (!row.achievable) continue;
        std::string flags;
        for (bool f : row.prefix_achievable) flags += f ? '1' : '0';
        out << format_kp(m) << "\t" << format_kp(row.n) << "\t" << flags << "\t" << (row.dominated ? "yes" : "NO")
            << "\n";
      }
      violations += report.violations().size();
    }
  out << "violations\t" << violations << "\n";
  return violations == 0 ? 0 : 1;
}

std::vector<FieldSpec> parse_fields(const std::string& text) {
  std::vector<FieldSpec> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(FieldSpec::parse(tok));
  if (out.empty()) throw UsageError("empty field list");
  return out;
}

int verify_reflection(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.quiver);
  auto ledger = require_ledger(o.ledger);
  bool all = true;
  out << "field\tsink\tnu\tin_locus\tverified\torder_compat\n";
  for (const auto& spec : parse_fields(o.fields))
    for (auto i : q.sinks()) {
      auto ctx = make_context(spec, q);
      auto reflected = make_context(spec, reflect_quiver(i, q));
      std::visit(
          [&](const auto& c) {
            using Ctx = std::decay_t<decltype(c)>;
            const auto& r = std::get<Ctx>(reflected);
            for (const auto& nu : dimension_vectors_up_to(q.rank(), o.nu_max)) {
              std::size_t locus = 0;
              std::size_t verified = 0;
              for (const auto& lambda : enumerate_kp(c.order(), nu)) {
                if (!in_ker_locus(c, lambda, i)) continue;
                ++locus;
                if (verify_reflection(c, r, i, lambda)) ++verified;
              }
              bool compat = order_compat(i, nu, c.order(), r.order(), ledger);
              all = all && compat && verified == locus;
              out << spec.to_string() << "\t" << i + 1 << "\t" << format_vector(nu.coords) << "\t" << locus << "\t"
                  << verified << "\t" << (compat ? "pass" : "FAIL") << "\n";
            }
          },
          ctx);
    }
  return all ? 0 : 1;
}

int verify_evenness(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.quiver);
  auto qs = o.q_list.empty() ? default_q_list() : parse_q_list(o.q_list);
  bool all = true;
  out << "nu\tlambda\tpolynomial\tcoefficients\tverdict\tfitted\theld_out\tcounts\n";
  for (const auto& row : fiber_sweep(q, o.nu_max, qs)) {
    all = all && row.fit.verdict == EvenVerdict::ConsistentWithEven;
    out << format_vector(row.nu.coords) << "\t" << row.parts << "\t" << row.fit.report_line() << "\n";
  }
  return all ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.what == "ringel") return verify_ringel(o, out);
  if (o.what == "baumann") return verify_baumann(o, out);
  if (o.what == "mackey") return verify_mackey(o, out);
  if (o.what == "reflection") return verify_reflection(o, out);
  if (o.what == "evenness") return verify_evenness(o, out);
  throw UsageError("unknown check '" + o.what + "'");
}

int cmd_calibrate(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.quiver);
  RepContext<RationalField> ctx(RationalField{}, q);
  auto result = calibrate(ctx, dimension_vectors_up_to(q.rank(), o.nu_max));
  std::ofstream file(o.out_path);
  if (!file) throw UsageError("cannot write '" + o.out_path + "'");
  file << result.to_json().dump(2) << "\n";
  out << result.evidence_tsv();
  out << "ledger\t" << o.out_path << "\n" << result.ledger.serialize();
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  auto q = load_quiver(o.quiver);
  auto nu = parse_nu(o.nu, q.rank());
  if (o.q_list.empty()) throw UsageError("count needs --q");
  auto qs = parse_q_list(o.q_list);
  if (o.count_what == "fibers") {
    out << "lambda\tq\tfiber_count\n";
    for (int fq : qs) {
      RepContext<GaloisField> ctx(GaloisField(fq), q);
      FiberCounter<GaloisField> fibers(ctx);
      for (const auto& lambda : enumerate_kp(ctx.order(), nu))
        out << format_parts(lambda, ctx.order()) << "\t" << fq << "\t" << fibers.count(lambda) << "\n";
    }
    return 0;
  }
  if (o.count_what == "z") {
    out << "q\tz_count\n";
    std::vector<std::pair<int, BigInt>> data;
    for (int fq : qs) {
      auto z = z_point_count(q, nu, fq);
      data.emplace_back(fq, z);
      out << fq << "\t" << z << "\n";
    }
    int bound = static_cast<int>(rep_space_dim(q, nu)) + 2 * fiber_degree_bound(nu);
    if (data.size() >= static_cast<std::size_t>(bound) + 2) {
      auto fit = fit_point_counts(data, bound);
      out << "polynomial\t" << fit.report_line() << "\n";
    } else {
      out << "polynomial\tinsufficient-q\tneed " << bound + 2 << " values\n";
    }
    return 0;
  }
  throw UsageError("unknown count '" + o.count_what + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kostant partitions, convex orders and Dynkin quiver representations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Accepted for harness compatibility; nothing is random");

  auto* roots = app.add_subcommand("roots", "List the positive roots of a Dynkin type");
  roots->add_option("type", o.type, "Dynkin type, e.g. A3, D4, E8")->required();

  auto* order = app.add_subcommand("order", "Convex order of a reduced word of w0");
  order->add_option("type", o.type, "Dynkin type")->required();
  order->add_option("word", o.word, "Reduced word, 1-based and comma separated");
  order->add_option("--adapted", o.adapted, "Use the adapted word of this quiver");

  auto* kp = app.add_subcommand("kp", "Kostant partitions of a dimension vector");
  kp->add_option("quiver", o.quiver, "Quiver file or shorthand like A3linear")->required();
  kp->add_option("nu", o.nu, "Dimension vector, comma separated")->required();
  kp->add_option("--hasse", o.hasse_out, "Write the Hasse diagram as DOT");
  kp->add_option("--ledger", o.ledger, "Ledger file")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Cross-check a statement on a desk-scale sweep");
  verify->add_option("what", o.what, "ringel | baumann | mackey | reflection | evenness")
      ->required()
      ->check(CLI::IsMember({"ringel", "baumann", "mackey", "reflection", "evenness"}));
  verify->add_option("quiver", o.quiver, "Quiver file or shorthand")->required();
  verify->add_option("--nu-max", o.nu_max, "Largest |nu| in the sweep")->capture_default_str();
  verify->add_option("--q-list", o.q_list, "Field sizes for evenness, comma separated");
  verify->add_option("--ledger", o.ledger, "Ledger file")->capture_default_str();
  verify->add_option("--fields", o.fields, "Fields for the reflection check")->capture_default_str();

  auto* cal = app.add_subcommand("calibrate", "Fix the convention ledger against the oracles");
  cal->add_option("quiver", o.quiver, "Quiver file or shorthand")->required();
  cal->add_option("--out", o.out_path, "Ledger file to write")->capture_default_str();
  cal->add_option("--nu-max", o.nu_max, "Largest |nu| used as evidence")->capture_default_str();

  auto* count = app.add_subcommand("count", "Point counts over finite fields");
  count->add_option("what", o.count_what, "fibers | z")->required()->check(CLI::IsMember({"fibers", "z"}));
  count->add_option("quiver", o.quiver, "Quiver file or shorthand")->required();
  count->add_option("nu", o.nu, "Dimension vector")->required();
  count->add_option("--q", o.q_list, "Field sizes, comma separated")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*roots) return cmd_roots(o, out);
    if (*order) return cmd_order(o, out);
    if (*kp) return cmd_kp(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*cal) return cmd_calibrate(o, out);
    if (*count) return cmd_count(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace kpq
