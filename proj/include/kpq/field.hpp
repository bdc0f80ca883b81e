#pragma once

// Exact scalar fields: the rationals and the finite fields F_q, q = p^r.
//
// A field object is a small value carrying whatever tables it needs; all
// arithmetic goes through it, so generic code is written against the
// interface below:
//
//   using Elem;
//   Elem zero(), one(), from_int(long long);
//   Elem add(a,b), sub(a,b), mul(a,b), neg(a), inv(a);
//   bool is_zero(a);

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kpq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class RationalField {
 public:
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a == 0; }

  std::string name() const { return "rationals"; }
  std::optional<int> order() const { return std::nullopt; }
  bool operator==(const RationalField&) const = default;
};

/// F_q for q = p^r. Elements are encoded as integers 0..q-1 whose base-p
/// digits are the coefficients of a polynomial modulo a fixed irreducible
/// polynomial of degree r (the lexicographically least monic one).
class GaloisField {
 public:
  using Elem = std::uint16_t;

  /// Throws kpq::Error unless q is a prime power with 2 <= q <= 256.
  explicit GaloisField(int q);

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem add(Elem a, Elem b) const { return tables_->add[index(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return tables_->mul[index(a, b)]; }
  Elem neg(Elem a) const { return tables_->neg[a]; }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }

  int characteristic() const { return tables_->p; }
  int degree() const { return tables_->r; }
  int size() const { return tables_->q; }
  std::optional<int> order() const { return tables_->q; }
  std::string name() const;
  /// Coefficients (low degree first) of the defining polynomial, monic.
  const std::vector<int>& modulus() const { return tables_->modulus; }

  bool operator==(const GaloisField& other) const { return size() == other.size(); }

 private:
  struct Tables {
    int p = 0;
    int r = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::vector<Elem> inv;
  };

  std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(tables_->q) + b;
  }

  std::shared_ptr<const Tables> tables_;
};

/// Runtime description of a field, as read from files and the command line.
struct FieldSpec {
  /// Empty means the rationals.
  std::optional<int> q;

  static FieldSpec rationals() { return {}; }
  static FieldSpec finite(int q) { return FieldSpec{q}; }
  /// Accepts "rationals", "Q", "prime 3", "F3", "F_9", "q 4".
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

/// Factors q as p^r; nullopt if q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

}  // namespace kpq
