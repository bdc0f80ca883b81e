#pragma once

// Orientations of a Dynkin diagram, sink/source reflections, adapted words
// and commutation classes of reduced words.

#include "kpq/root_system.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kpq {

struct Arrow {
  Vertex tail;
  Vertex head;
  auto operator<=>(const Arrow&) const = default;
};

class Quiver {
 public:
  /// Arrows must orient each diagram edge exactly once. They are stored in
  /// the order of CartanDatum::edges(), so arrow k always lies over edge k.
  Quiver(CartanDatum datum, const std::vector<Arrow>& arrows);

  /// 1 -> 2 -> ... -> n for type A; for other types every edge (i, j) with
  /// i < j is oriented i -> j.
  static Quiver linear(const CartanDatum& datum);
  /// Alternating orientation: vertices at even distance from vertex 1 are sources.
  static Quiver zigzag(const CartanDatum& datum);

  /// Text format:
  ///   type A3
  ///   1 -> 2
  ///   2 -> 3
  /// or "orientation linear" / "orientation zigzag" instead of arrow lines.
  /// Blank lines and lines starting with '#' are ignored.
  static Quiver parse(std::string_view text);
  std::string to_text() const;

  const CartanDatum& datum() const { return datum_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int rank() const { return datum_.rank(); }

  bool is_sink(Vertex i) const;
  bool is_source(Vertex i) const;
  std::set<Vertex> sinks() const;
  std::set<Vertex> sources() const;

  bool operator==(const Quiver&) const = default;
  auto operator<=>(const Quiver& other) const { return arrows_ <=> other.arrows_; }

 private:
  CartanDatum datum_;
  std::vector<Arrow> arrows_;
};

/// Reverses every arrow incident to i.
Quiver reflect_quiver(Vertex i, const Quiver& q);

/// True iff i_k is a sink of sigma_{i_{k-1}} ... sigma_{i_1} Q for every k.
bool is_adapted(const Word& w, const Quiver& q);

/// A reduced word of w0 adapted to q: repeatedly take the least-index sink
/// that keeps the word reduced, and reflect. The result is checked (reduced, adapted, beta-sequence is a
/// permutation of the positive roots); failure throws InternalError.
Word adapted_word_of_w0(const Quiver& q);

/// Closure of {w} under swapping adjacent commuting letters. Sorted.
std::vector<Word> commutation_class(const CartanDatum& datum, const Word& w, std::size_t cap);

/// Partition of a set of words into commutation classes, each sorted, in
/// order of their least element.
std::vector<std::vector<Word>> commutation_classes(const CartanDatum& datum, const std::vector<Word>& words,
                                                   std::size_t cap);

}  // namespace kpq
