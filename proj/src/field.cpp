#include "kpq/field.hpp"

#include "kpq/error.hpp"

#include <cctype>
#include <sstream>

namespace kpq {

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a == 0) throw Error("division by zero in the rationals");
  return Elem(1) / a;
}

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int r = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, r);
}

namespace {

std::vector<int> digits(int code, int p, int r) {
  std::vector<int> out(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    out[static_cast<std::size_t>(k)] = code % p;
    code /= p;
  }
  return out;
}

int encode(const std::vector<int>& coeffs, int p) {
  int code = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) code = code * p + *it;
  return code;
}

// Product of two residues modulo a monic polynomial of degree r.
int poly_mul_mod(int a, int b, int p, int r, const std::vector<int>& modulus) {
  auto da = digits(a, p, r);
  auto db = digits(b, p, r);
  std::vector<int> prod(static_cast<std::size_t>(2 * r), 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
  for (int deg = 2 * r - 1; deg >= r; --deg) {
    int c = prod[static_cast<std::size_t>(deg)];
    if (c == 0) continue;
    // x^deg = x^(deg-r) * x^r, and x^r = -(modulus without leading term).
    for (int k = 0; k < r; ++k) {
      auto& slot = prod[static_cast<std::size_t>(deg - r + k)];
      slot = ((slot - c * modulus[static_cast<std::size_t>(k)]) % p + p) % p;
    }
    prod[static_cast<std::size_t>(deg)] = 0;
  }
  prod.resize(static_cast<std::size_t>(r));
  return encode(prod, p);
}

}  // namespace

GaloisField::GaloisField(int q) {
  auto pr = prime_power(q);
  if (!pr || q > 256) throw Error("unsupported field order " + std::to_string(q));
  auto tables = std::make_shared<Tables>();
  tables->p = pr->first;
  tables->r = pr->second;
  tables->q = q;
  const int p = tables->p;
  const int r = tables->r;
  const auto n = static_cast<std::size_t>(q);

  tables->add.resize(n * n);
  tables->neg.resize(n);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, r);
    std::vector<int> dn(da.size());
    for (std::size_t k = 0; k < da.size(); ++k) dn[k] = (p - da[k]) % p;
    tables->neg[static_cast<std::size_t>(a)] = static_cast<Elem>(encode(dn, p));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, r);
      std::vector<int> ds(da.size());
      for (std::size_t k = 0; k < da.size(); ++k) ds[k] = (da[k] + db[k]) % p;
      tables->add[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = static_cast<Elem>(encode(ds, p));
    }
  }

  // Lexicographically least monic modulus whose quotient ring is a field.
  for (int candidate = 0; candidate < q; ++candidate) {
    auto low = digits(candidate, p, r);
    if (r > 1 && low[0] == 0) continue;
    std::vector<Elem> mul(n * n);
    std::vector<Elem> inv(n, 0);
    bool field = true;
    for (int a = 0; a < q && field; ++a) {
      bool has_inverse = (a == 0);
      for (int b = 0; b < q; ++b) {
        int c = poly_mul_mod(a, b, p, r, low);
        mul[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = static_cast<Elem>(c);
        if (c == 1) {
          has_inverse = true;
          inv[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
        }
      }
      field = has_inverse;
    }
    if (!field) continue;
    tables->mul = std::move(mul);
    tables->inv = std::move(inv);
    tables->modulus = low;
    tables->modulus.push_back(1);
    tables_ = std::move(tables);
    return;
  }
  throw InternalError("no irreducible polynomial found for q = " + std::to_string(q));
}

GaloisField::Elem GaloisField::from_int(long long v) const {
  long long p = tables_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in " + name());
  return tables_->inv[a];
}

std::string GaloisField::name() const {
  if (degree() == 1) return "prime " + std::to_string(size());
  return "q " + std::to_string(size());
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "rationals" || t == "q" || t == "qq" || t == "rational") return rationals();
  std::string digits_part;
  if (t.rfind("prime", 0) == 0) digits_part = t.substr(5);
  else if (t.rfind("f", 0) == 0) digits_part = t.substr(1);
  else if (t.rfind("q", 0) == 0) digits_part = t.substr(1);
  else digits_part = t;
  if (digits_part.empty() || digits_part.size() > 4) throw Error("bad field spec '" + text + "'");
  for (char c : digits_part)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad field spec '" + text + "'");
  int q = std::stoi(digits_part);
  auto pr = prime_power(q);
  if (!pr) throw Error("field order " + std::to_string(q) + " is not a prime power");
  if (t.rfind("prime", 0) == 0 && pr->second != 1) throw Error(std::to_string(q) + " is not prime");
  return finite(q);
}

std::string FieldSpec::to_string() const {
  if (!q) return "rationals";
  auto pr = prime_power(*q);
  if (pr && pr->second == 1) return "prime " + std::to_string(*q);
  return "q " + std::to_string(*q);
}

}  // namespace kpq
