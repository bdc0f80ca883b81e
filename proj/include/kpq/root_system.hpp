#pragma once

// Simply-laced Cartan data, root and coweight lattices, simple reflections,
// and reduced words.
//
// Vertex numbering (1-based in text, 0-based in code):
//
//   A_n  1 - 2 - ... - n
//   D_n  1 - 2 - ... - (n-2), with n-1 and n both joined to n-2
//   E_n  1 - 3 - 4 - 5 - ... - n, with 2 joined to 4   (Bourbaki)
//
// Roots are integer vectors in the simple-root basis. Coweights are integer
// vectors in the fundamental-coweight basis, so <x, alpha_j> = x[j] and the
// coroot alpha_i^vee has coordinates equal to row i of the Cartan matrix.

#include "kpq/linalg.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpq {

using Vertex = int;
using Coord = std::int64_t;

enum class DynkinType { A, D, E };

class CartanDatum {
 public:
  /// Throws kpq::Error for ranks outside A_n (n>=1), D_n (n>=4), E_6..E_8.
  CartanDatum(DynkinType type, int rank);
  /// Parses labels like "A3", "D4", "E8" (also "type A3").
  static CartanDatum parse(std::string_view label);

  DynkinType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;
  int entry(Vertex i, Vertex j) const { return matrix_[static_cast<std::size_t>(i * rank_ + j)]; }
  bool adjacent(Vertex i, Vertex j) const { return i != j && entry(i, j) != 0; }
  /// Diagram edges (i, j) with i < j, in lexicographic order.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool valid_vertex(Vertex i) const { return i >= 0 && i < rank_; }

  bool operator==(const CartanDatum& other) const { return type_ == other.type_ && rank_ == other.rank_; }

 private:
  DynkinType type_;
  int rank_;
  std::vector<int> matrix_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

struct RootVector {
  std::vector<Coord> coords;

  RootVector() = default;
  explicit RootVector(std::vector<Coord> c) : coords(std::move(c)) {}
  static RootVector zero(int rank) { return RootVector(std::vector<Coord>(static_cast<std::size_t>(rank), 0)); }
  static RootVector simple(int rank, Vertex i);

  std::size_t size() const { return coords.size(); }
  Coord operator[](std::size_t i) const { return coords[i]; }
  Coord height() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_positive() const { return is_nonnegative() && !is_zero(); }

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(Coord k, RootVector a) {
    for (auto& c : a.coords) c *= k;
    return a;
  }
  RootVector operator-() const { return Coord{-1} * *this; }
  auto operator<=>(const RootVector&) const = default;
};

struct CoweightVector {
  std::vector<Coord> coords;

  CoweightVector() = default;
  explicit CoweightVector(std::vector<Coord> c) : coords(std::move(c)) {}
  static CoweightVector fundamental(int rank, Vertex i);

  std::size_t size() const { return coords.size(); }
  CoweightVector& operator+=(const CoweightVector& o);
  CoweightVector& operator-=(const CoweightVector& o);
  friend CoweightVector operator+(CoweightVector a, const CoweightVector& b) { return a += b; }
  friend CoweightVector operator-(CoweightVector a, const CoweightVector& b) { return a -= b; }
  CoweightVector operator-() const;
  auto operator<=>(const CoweightVector&) const = default;
};

/// Sequence of 0-based vertices. Text form is 1-based, comma separated.
using Word = std::vector<Vertex>;

Word parse_word(std::string_view text);
std::string format_word(const Word& w);
std::string format_vector(const std::vector<Coord>& v);
RootVector parse_root(std::string_view text);

/// Height-then-lexicographic order used for every returned enumeration.
bool root_less(const RootVector& a, const RootVector& b);

/// All positive roots, each once, sorted by root_less.
std::vector<RootVector> positive_roots(const CartanDatum& datum);
bool is_root(const CartanDatum& datum, const RootVector& v);

CoweightVector coroot(const CartanDatum& datum, Vertex i);
RootVector reflect_root(const CartanDatum& datum, Vertex i, const RootVector& v);
CoweightVector reflect_coweight(const CartanDatum& datum, Vertex i, const CoweightVector& x);
Coord pairing(const CoweightVector& x, const RootVector& v);

/// s_{w_1} ... s_{w_m} applied to v (rightmost letter first).
RootVector apply_word(const CartanDatum& datum, const Word& w, const RootVector& v);
CoweightVector apply_word(const CartanDatum& datum, const Word& w, const CoweightVector& x);

/// True iff every letter is a vertex and s_{i_1}...s_{i_{k-1}} alpha_{i_k}
/// is positive for every k.
bool is_reduced(const CartanDatum& datum, const Word& w);

std::size_t number_of_positive_roots(const CartanDatum& datum);

/// Every reduced word of the longest element, in lexicographic order.
/// Throws CapExceeded once more than `cap` words would be produced.
std::vector<Word> reduced_words_of_w0(const CartanDatum& datum, std::size_t cap);

}  // namespace kpq
