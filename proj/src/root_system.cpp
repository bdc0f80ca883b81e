#include "kpq/root_system.hpp"

#include "kpq/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace kpq {

CartanDatum::CartanDatum(DynkinType type, int rank) : type_(type), rank_(rank) {
  switch (type) {
    case DynkinType::A:
      if (rank < 1) throw Error("A_n needs n >= 1");
      for (int i = 0; i + 1 < rank; ++i) edges_.emplace_back(i, i + 1);
      break;
    case DynkinType::D:
      if (rank < 4) throw Error("D_n needs n >= 4");
      for (int i = 0; i + 3 < rank; ++i) edges_.emplace_back(i, i + 1);
      edges_.emplace_back(rank - 3, rank - 2);
      edges_.emplace_back(rank - 3, rank - 1);
      break;
    case DynkinType::E:
      if (rank < 6 || rank > 8) throw Error("E_n needs 6 <= n <= 8");
      edges_ = {{0, 2}, {1, 3}, {2, 3}};
      for (int i = 3; i + 1 < rank; ++i) edges_.emplace_back(i, i + 1);
      break;
  }
  std::sort(edges_.begin(), edges_.end());
  matrix_.assign(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i) matrix_[static_cast<std::size_t>(i * rank + i)] = 2;
  for (auto [i, j] : edges_) {
    matrix_[static_cast<std::size_t>(i * rank + j)] = -1;
    matrix_[static_cast<std::size_t>(j * rank + i)] = -1;
  }
}

CartanDatum CartanDatum::parse(std::string_view label) {
  std::string s;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s.push_back(c);
  if (s.rfind("type", 0) == 0) s = s.substr(4);
  if (s.size() < 2) throw Error("bad Dynkin label '" + std::string(label) + "'");
  DynkinType type;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': type = DynkinType::A; break;
    case 'D': type = DynkinType::D; break;
    case 'E': type = DynkinType::E; break;
    default: throw Error("unsupported Dynkin type '" + std::string(label) + "'");
  }
  auto digits = s.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error("bad Dynkin label '" + std::string(label) + "'");
  return CartanDatum(type, std::stoi(digits));
}

std::string CartanDatum::label() const {
  const char* letter = type_ == DynkinType::A ? "A" : type_ == DynkinType::D ? "D" : "E";
  return letter + std::to_string(rank_);
}

RootVector RootVector::simple(int rank, Vertex i) {
  auto v = zero(rank);
  v.coords[static_cast<std::size_t>(i)] = 1;
  return v;
}

Coord RootVector::height() const {
  Coord h = 0;
  for (auto c : coords) h += c;
  return h;
}

bool RootVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Coord c) { return c == 0; });
}

bool RootVector::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](Coord c) { return c >= 0; });
}

RootVector& RootVector::operator+=(const RootVector& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

CoweightVector CoweightVector::fundamental(int rank, Vertex i) {
  CoweightVector x(std::vector<Coord>(static_cast<std::size_t>(rank), 0));
  x.coords[static_cast<std::size_t>(i)] = 1;
  return x;
}

CoweightVector& CoweightVector::operator+=(const CoweightVector& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

CoweightVector& CoweightVector::operator-=(const CoweightVector& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

CoweightVector CoweightVector::operator-() const {
  CoweightVector x = *this;
  for (auto& c : x.coords) c = -c;
  return x;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_integer(const std::string& token, std::string_view context) {
  if (token.empty()) throw Error("empty entry in '" + std::string(context) + "'");
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw Error("bad integer '" + token + "' in '" + std::string(context) + "'");
  }
  if (used != token.size()) throw Error("bad integer '" + token + "' in '" + std::string(context) + "'");
  return v;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  auto trimmed = std::string(text);
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), [](char c) { return c == '(' || c == ')'; }),
                trimmed.end());
  if (std::all_of(trimmed.begin(), trimmed.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    return w;
  for (const auto& tok : split(trimmed, ',')) {
    auto v = parse_integer(tok, text);
    if (v < 1) throw Error("word letters are 1-based vertices: '" + std::string(text) + "'");
    w.push_back(static_cast<Vertex>(v - 1));
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k] + 1);
  }
  return out;
}

std::string format_vector(const std::vector<Coord>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out;
}

RootVector parse_root(std::string_view text) {
  RootVector v;
  for (const auto& tok : split(text, ',')) v.coords.push_back(parse_integer(tok, text));
  return v;
}

bool root_less(const RootVector& a, const RootVector& b) {
  auto ha = a.height();
  auto hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coords < b.coords;
}

CoweightVector coroot(const CartanDatum& datum, Vertex i) {
  CoweightVector x(std::vector<Coord>(static_cast<std::size_t>(datum.rank()), 0));
  for (Vertex j = 0; j < datum.rank(); ++j) x.coords[static_cast<std::size_t>(j)] = datum.entry(i, j);
  return x;
}

Coord pairing(const CoweightVector& x, const RootVector& v) {
  if (x.size() != v.size()) throw Error("pairing of vectors of different rank");
  Coord s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += x.coords[j] * v.coords[j];
  return s;
}

RootVector reflect_root(const CartanDatum& datum, Vertex i, const RootVector& v) {
  if (!datum.valid_vertex(i)) throw Error("vertex out of range");
  auto out = v;
  out.coords[static_cast<std::size_t>(i)] -= pairing(coroot(datum, i), v);
  return out;
}

CoweightVector reflect_coweight(const CartanDatum& datum, Vertex i, const CoweightVector& x) {
  if (!datum.valid_vertex(i)) throw Error("vertex out of range");
  auto k = x.coords[static_cast<std::size_t>(i)];
  auto out = x;
  for (Vertex j = 0; j < datum.rank(); ++j) out.coords[static_cast<std::size_t>(j)] -= k * datum.entry(i, j);
  return out;
}

RootVector apply_word(const CartanDatum& datum, const Word& w, const RootVector& v) {
  auto out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect_root(datum, *it, out);
  return out;
}

CoweightVector apply_word(const CartanDatum& datum, const Word& w, const CoweightVector& x) {
  auto out = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect_coweight(datum, *it, out);
  return out;
}

std::vector<RootVector> positive_roots(const CartanDatum& datum) {
  const int n = datum.rank();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (Vertex i = 0; i < n; ++i) {
    auto a = RootVector::simple(n, i);
    seen.insert(a);
    queue.push_back(a);
  }
  // In a simply-laced system, beta + alpha_i is a root exactly when
  // <alpha_i^vee, beta> = -1.
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (Vertex i = 0; i < n; ++i) {
      if (pairing(coroot(datum, i), beta) != -1) continue;
      auto next = beta + RootVector::simple(n, i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

bool is_root(const CartanDatum& datum, const RootVector& v) {
  if (static_cast<int>(v.size()) != datum.rank()) return false;
  auto roots = positive_roots(datum);
  auto probe = v.is_nonnegative() ? v : -v;
  return std::find(roots.begin(), roots.end(), probe) != roots.end();
}

std::size_t number_of_positive_roots(const CartanDatum& datum) {
  const auto n = static_cast<std::size_t>(datum.rank());
  switch (datum.type()) {
    case DynkinType::A: return n * (n + 1) / 2;
    case DynkinType::D: return n * (n - 1);
    case DynkinType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

bool is_reduced(const CartanDatum& datum, const Word& w) {
  for (auto letter : w)
    if (!datum.valid_vertex(letter)) return false;
  if (w.size() > number_of_positive_roots(datum)) return false;
  Word prefix;
  for (auto letter : w) {
    if (!apply_word(datum, prefix, RootVector::simple(datum.rank(), letter)).is_positive()) return false;
    prefix.push_back(letter);
  }
  return true;
}

namespace {

// Images of the simple roots under the current Weyl group element.
using Images = std::vector<RootVector>;

void extend(const CartanDatum& datum, const Images& images, Word& prefix, std::size_t target,
            std::size_t cap, std::vector<Word>& out) {
  if (prefix.size() == target) {
    if (out.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " reduced words of w0");
    out.push_back(prefix);
    return;
  }
  const int n = datum.rank();
  for (Vertex i = 0; i < n; ++i) {
    if (!images[static_cast<std::size_t>(i)].is_positive()) continue;
    // (w s_i)(alpha_j) = w(alpha_j) - a_ij w(alpha_i)
    Images next = images;
    for (Vertex j = 0; j < n; ++j) {
      if (datum.entry(i, j) == 0) continue;
      next[static_cast<std::size_t>(j)] = images[static_cast<std::size_t>(j)] -
                                          Coord{datum.entry(i, j)} * images[static_cast<std::size_t>(i)];
    }
    prefix.push_back(i);
    extend(datum, next, prefix, target, cap, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> reduced_words_of_w0(const CartanDatum& datum, std::size_t cap) {
  Images start;
  for (Vertex i = 0; i < datum.rank(); ++i) start.push_back(RootVector::simple(datum.rank(), i));
  std::vector<Word> out;
  Word prefix;
  extend(datum, start, prefix, number_of_positive_roots(datum), cap, out);
  return out;
}

}  // namespace kpq
