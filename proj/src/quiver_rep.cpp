#include "kpq/quiver_rep.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>

namespace kpq {

namespace {

BigInt power(long long base, long long exp) {
  if (exp < 0) throw InternalError("negative exponent");
  BigInt out = 1;
  for (long long k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

BigInt gl_order(int n, long long q) {
  BigInt out = 1;
  auto qn = power(q, n);
  for (int k = 0; k < n; ++k) out *= qn - power(q, k);
  return out;
}

long long rep_space_dim(const Quiver& q, const RootVector& nu) {
  long long d = 0;
  for (const auto& a : q.arrows())
    d += nu[static_cast<std::size_t>(a.tail)] * nu[static_cast<std::size_t>(a.head)];
  return d;
}

BigInt orbit_point_count(const IntMatrix& hom_table, const KostantPartition& lambda, long long q) {
  if (q < 2) throw Error("q must be a prime power");
  const auto n = lambda.mult.size();
  long long end_dim = 0;
  long long squares = 0;
  for (std::size_t k = 0; k < n; ++k) {
    squares += lambda.mult[k] * lambda.mult[k];
    for (std::size_t l = 0; l < n; ++l) end_dim += lambda.mult[k] * lambda.mult[l] * hom_table(k, l);
  }
  BigInt group = 1;
  for (auto d : lambda.nu.coords) group *= gl_order(static_cast<int>(d), q);
  BigInt aut = power(q, end_dim - squares);
  for (auto m : lambda.mult) aut *= gl_order(static_cast<int>(m), q);
  if (group % aut != 0) throw InternalError("orbit size is not an integer");
  return group / aut;
}

nlohmann::json elem_to_json(const RationalField&, const Rational& v) {
  if (denominator(v) == 1) {
    auto num = numerator(v);
    if (num <= std::numeric_limits<long long>::max() && num >= std::numeric_limits<long long>::min())
      return static_cast<long long>(num);
  }
  return v.str();
}

nlohmann::json elem_to_json(const GaloisField&, GaloisField::Elem v) { return static_cast<int>(v); }

Rational elem_from_json(const RationalField&, const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error("bad rational '" + j.get<std::string>() + "'");
    }
  }
  throw Error("matrix entries over the rationals must be integers or \"p/q\" strings");
}

GaloisField::Elem elem_from_json(const GaloisField& field, const nlohmann::json& j) {
  if (!j.is_number_integer()) throw Error("finite field entries must be integers");
  auto v = j.get<long long>();
  if (field.degree() == 1) return field.from_int(v);
  if (v < 0 || v >= field.size()) throw Error("finite field entry out of range");
  return static_cast<GaloisField::Elem>(v);
}

}  // namespace kpq
