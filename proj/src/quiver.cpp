#include "kpq/quiver.hpp"

#include "kpq/convex_order.hpp"
#include "kpq/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

namespace kpq {

Quiver::Quiver(CartanDatum datum, const std::vector<Arrow>& arrows) : datum_(std::move(datum)) {
  const auto& edges = datum_.edges();
  if (arrows.size() != edges.size())
    throw Error("quiver over " + datum_.label() + " needs " + std::to_string(edges.size()) + " arrows, got " +
                std::to_string(arrows.size()));
  arrows_.resize(edges.size());
  std::vector<bool> used(edges.size(), false);
  for (const auto& a : arrows) {
    if (!datum_.valid_vertex(a.tail) || !datum_.valid_vertex(a.head))
      throw Error("arrow endpoint out of range");
    if (a.tail == a.head) throw Error("loops are not allowed");
    auto key = std::minmax(a.tail, a.head);
    auto it = std::find(edges.begin(), edges.end(), std::pair<Vertex, Vertex>(key.first, key.second));
    if (it == edges.end())
      throw Error("arrow " + std::to_string(a.tail + 1) + " -> " + std::to_string(a.head + 1) +
                  " is not an edge of " + datum_.label());
    auto k = static_cast<std::size_t>(it - edges.begin());
    if (used[k]) throw Error("edge oriented twice");
    used[k] = true;
    arrows_[k] = a;
  }
}

Quiver Quiver::linear(const CartanDatum& datum) {
  std::vector<Arrow> arrows;
  for (auto [i, j] : datum.edges()) arrows.push_back({i, j});
  return Quiver(datum, arrows);
}

Quiver Quiver::zigzag(const CartanDatum& datum) {
  // Diagrams are trees, hence bipartite.
  std::vector<int> colour(static_cast<std::size_t>(datum.rank()), -1);
  colour[0] = 0;
  std::deque<Vertex> queue{0};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (Vertex u = 0; u < datum.rank(); ++u)
      if (datum.adjacent(u, v) && colour[static_cast<std::size_t>(u)] < 0) {
        colour[static_cast<std::size_t>(u)] = 1 - colour[static_cast<std::size_t>(v)];
        queue.push_back(u);
      }
  }
  std::vector<Arrow> arrows;
  for (auto [i, j] : datum.edges()) {
    if (colour[static_cast<std::size_t>(i)] == 0) arrows.push_back({i, j});
    else arrows.push_back({j, i});
  }
  return Quiver(datum, arrows);
}

Quiver Quiver::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<CartanDatum> datum;
  std::vector<Arrow> arrows;
  std::string orientation;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.rfind("type", 0) == 0) {
      datum = CartanDatum::parse(line.substr(4));
      continue;
    }
    if (line.rfind("orientation", 0) == 0) {
      auto rest = line.substr(11);
      rest.erase(0, rest.find_first_not_of(" \t"));
      orientation = rest;
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw Error("quiver line " + std::to_string(lineno) + ": expected 'i -> j', got '" + line + "'");
    try {
      int tail = std::stoi(line.substr(0, arrow));
      int head = std::stoi(line.substr(arrow + 2));
      arrows.push_back({tail - 1, head - 1});
    } catch (const std::exception&) {
      throw Error("quiver line " + std::to_string(lineno) + ": bad vertex in '" + line + "'");
    }
  }
  if (!datum) throw Error("quiver file has no 'type' line");
  if (!orientation.empty()) {
    if (!arrows.empty()) throw Error("quiver file gives both an orientation keyword and arrows");
    if (orientation == "linear") return linear(*datum);
    if (orientation == "zigzag") return zigzag(*datum);
    throw Error("unknown orientation '" + orientation + "'");
  }
  return Quiver(*datum, arrows);
}

std::string Quiver::to_text() const {
  std::string out = "type " + datum_.label() + "\n";
  for (const auto& a : arrows_) out += std::to_string(a.tail + 1) + " -> " + std::to_string(a.head + 1) + "\n";
  return out;
}

bool Quiver::is_sink(Vertex i) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& a) { return a.tail == i; });
}

bool Quiver::is_source(Vertex i) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& a) { return a.head == i; });
}

std::set<Vertex> Quiver::sinks() const {
  std::set<Vertex> out;
  for (Vertex i = 0; i < rank(); ++i)
    if (is_sink(i)) out.insert(i);
  return out;
}

std::set<Vertex> Quiver::sources() const {
  std::set<Vertex> out;
  for (Vertex i = 0; i < rank(); ++i)
    if (is_source(i)) out.insert(i);
  return out;
}

Quiver reflect_quiver(Vertex i, const Quiver& q) {
  if (!q.datum().valid_vertex(i)) throw Error("vertex out of range");
  auto arrows = q.arrows();
  for (auto& a : arrows)
    if (a.tail == i || a.head == i) std::swap(a.tail, a.head);
  return Quiver(q.datum(), arrows);
}

bool is_adapted(const Word& w, const Quiver& q) {
  Quiver cur = q;
  for (auto letter : w) {
    if (!q.datum().valid_vertex(letter) || !cur.is_sink(letter)) return false;
    cur = reflect_quiver(letter, cur);
  }
  return true;
}

Word adapted_word_of_w0(const Quiver& q) {
  const auto n = number_of_positive_roots(q.datum());
  Word w;
  Quiver cur = q;
  while (w.size() < n) {
    // Least-index sink whose simple root w(alpha_i) is still positive.
    std::optional<Vertex> pick;
    for (auto i : cur.sinks())
      if (apply_word(q.datum(), w, RootVector::simple(q.rank(), i)).is_positive()) {
        pick = i;
        break;
      }
    if (!pick) throw InternalError("no sink extends the adapted word " + format_word(w));
    w.push_back(*pick);
    cur = reflect_quiver(*pick, cur);
  }
  if (!is_reduced(q.datum(), w) || !is_adapted(w, q))
    throw InternalError("greedy adapted word " + format_word(w) + " failed verification");
  auto order = build_order(q.datum(), w);
  auto sorted = order.beta;
  std::sort(sorted.begin(), sorted.end(), root_less);
  if (sorted != positive_roots(q.datum()))
    throw InternalError("beta-sequence of " + format_word(w) + " is not a permutation of the positive roots");
  return w;
}

std::vector<Word> commutation_class(const CartanDatum& datum, const Word& w, std::size_t cap) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (cur[k] == cur[k + 1] || datum.entry(cur[k], cur[k + 1]) != 0) continue;
      auto next = cur;
      std::swap(next[k], next[k + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("commutation class larger than " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Word>> commutation_classes(const CartanDatum& datum, const std::vector<Word>& words,
                                                   std::size_t cap) {
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  std::set<Word> assigned;
  std::vector<std::vector<Word>> out;
  for (const auto& w : sorted) {
    if (assigned.count(w)) continue;
    auto cls = commutation_class(datum, w, cap);
    assigned.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace kpq
