#pragma once

// Representations of a Dynkin quiver over an exact field: Hom dimensions by
// Gaussian elimination, BGP reflection functors, the indecomposables M(beta)
// and the modules M(lambda) attached to Kostant partitions.

#include "kpq/convex_order.hpp"
#include "kpq/error.hpp"
#include "kpq/field.hpp"
#include "kpq/kostant.hpp"
#include "kpq/linalg.hpp"
#include "kpq/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace kpq {

template <class F>
struct QuiverRep {
  using Elem = typename F::Elem;

  F field;
  Quiver quiver;
  std::vector<int> dims;
  std::vector<Matrix<Elem>> maps;  // maps[k] : dims[tail_k] -> dims[head_k], shape head x tail

  RootVector dim_vector() const {
    std::vector<Coord> c(dims.begin(), dims.end());
    return RootVector(std::move(c));
  }

  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }

  /// Throws kpq::Error if a matrix shape disagrees with dims.
  void validate() const {
    if (static_cast<int>(dims.size()) != quiver.rank()) throw Error("dimension vector has the wrong rank");
    if (maps.size() != quiver.arrows().size()) throw Error("one matrix per arrow is required");
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const auto& a = quiver.arrows()[k];
      if (maps[k].rows() != static_cast<std::size_t>(dims[static_cast<std::size_t>(a.head)]) ||
          maps[k].cols() != static_cast<std::size_t>(dims[static_cast<std::size_t>(a.tail)]))
        throw Error("matrix for arrow " + std::to_string(a.tail + 1) + " -> " + std::to_string(a.head + 1) +
                    " has the wrong shape");
    }
  }
};

template <class F>
QuiverRep<F> zero_rep(const F& field, const Quiver& q, const RootVector& dim) {
  QuiverRep<F> m{field, q, {}, {}};
  for (auto c : dim.coords) {
    if (c < 0) throw Error("negative dimension");
    m.dims.push_back(static_cast<int>(c));
  }
  for (const auto& a : q.arrows())
    m.maps.push_back(zero_matrix(field, static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.head)]),
                                 static_cast<std::size_t>(m.dims[static_cast<std::size_t>(a.tail)])));
  m.validate();
  return m;
}

template <class F>
QuiverRep<F> simple_rep(const F& field, const Quiver& q, Vertex i) {
  return zero_rep(field, q, RootVector::simple(q.rank(), i));
}

template <class F>
QuiverRep<F> direct_sum(const QuiverRep<F>& a, const QuiverRep<F>& b) {
  if (!(a.quiver == b.quiver)) throw Error("direct sum of representations of different quivers");
  QuiverRep<F> out{a.field, a.quiver, {}, {}};
  for (std::size_t v = 0; v < a.dims.size(); ++v) out.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const auto& x = a.maps[k];
    const auto& y = b.maps[k];
    auto m = zero_matrix(a.field, x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) m(x.rows() + r, x.cols() + c) = y(r, c);
    out.maps.push_back(std::move(m));
  }
  return out;
}

/// The matrix of (f_v) |-> (f_head x_a - y_a f_tail)_a whose kernel is Hom(m, n).
template <class F>
Matrix<typename F::Elem> hom_system(const QuiverRep<F>& m, const QuiverRep<F>& n) {
  const auto& field = m.field;
  const auto nv = m.dims.size();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dims[v] * m.dims[v]);
  std::size_t equations = 0;
  for (const auto& a : m.quiver.arrows())
    equations += static_cast<std::size_t>(n.dims[static_cast<std::size_t>(a.head)] *
                                          m.dims[static_cast<std::size_t>(a.tail)]);
  auto sys = zero_matrix(field, equations, offset[nv]);
  // f_v is stored row-major: entry (r, c) at offset[v] + r * m.dims[v] + c.
  std::size_t row = 0;
  for (std::size_t k = 0; k < m.quiver.arrows().size(); ++k) {
    const auto t = static_cast<std::size_t>(m.quiver.arrows()[k].tail);
    const auto h = static_cast<std::size_t>(m.quiver.arrows()[k].head);
    const auto& x = m.maps[k];
    const auto& y = n.maps[k];
    const auto mt = static_cast<std::size_t>(m.dims[t]);
    const auto mh = static_cast<std::size_t>(m.dims[h]);
    const auto nh = static_cast<std::size_t>(n.dims[h]);
    const auto nt = static_cast<std::size_t>(n.dims[t]);
    for (std::size_t r = 0; r < nh; ++r)
      for (std::size_t c = 0; c < mt; ++c, ++row) {
        for (std::size_t s = 0; s < mh; ++s) {
          auto& slot = sys(row, offset[h] + r * mh + s);
          slot = field.add(slot, x(s, c));
        }
        for (std::size_t s = 0; s < nt; ++s) {
          auto& slot = sys(row, offset[t] + s * mt + c);
          slot = field.sub(slot, y(r, s));
        }
      }
  }
  return sys;
}

template <class F>
int hom_dim(const QuiverRep<F>& m, const QuiverRep<F>& n) {
  if (!(m.quiver == n.quiver)) throw Error("Hom between representations of different quivers");
  auto sys = hom_system(m, n);
  return static_cast<int>(sys.cols() - rank(m.field, sys));
}

/// Arrows with head i (for a sink) or tail i (for a source), in arrow order.
inline std::vector<std::size_t> incident_arrows(const Quiver& q, Vertex i) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < q.arrows().size(); ++k)
    if (q.arrows()[k].head == i || q.arrows()[k].tail == i) out.push_back(k);
  return out;
}

/// The map (+)_{j->i} M_j -> M_i at a sink i, blocks in arrow order.
template <class F>
Matrix<typename F::Elem> sink_map(const QuiverRep<F>& m, Vertex i) {
  auto arrows = incident_arrows(m.quiver, i);
  std::size_t cols = 0;
  for (auto k : arrows) cols += m.maps[k].cols();
  auto phi = zero_matrix(m.field, static_cast<std::size_t>(m.dims[static_cast<std::size_t>(i)]), cols);
  std::size_t at = 0;
  for (auto k : arrows) {
    for (std::size_t r = 0; r < phi.rows(); ++r)
      for (std::size_t c = 0; c < m.maps[k].cols(); ++c) phi(r, at + c) = m.maps[k](r, c);
    at += m.maps[k].cols();
  }
  return phi;
}

/// The map M_i -> (+)_{i->j} M_j at a source i, blocks in arrow order.
template <class F>
Matrix<typename F::Elem> source_map(const QuiverRep<F>& m, Vertex i) {
  auto arrows = incident_arrows(m.quiver, i);
  std::size_t rows = 0;
  for (auto k : arrows) rows += m.maps[k].rows();
  auto psi = zero_matrix(m.field, rows, static_cast<std::size_t>(m.dims[static_cast<std::size_t>(i)]));
  std::size_t at = 0;
  for (auto k : arrows) {
    for (std::size_t r = 0; r < m.maps[k].rows(); ++r)
      for (std::size_t c = 0; c < psi.cols(); ++c) psi(at + r, c) = m.maps[k](r, c);
    at += m.maps[k].rows();
  }
  return psi;
}

/// BGP reflection at a sink (kernel construction) or a source (cokernel
/// construction). The result lives on reflect_quiver(i, m.quiver).
template <class F>
QuiverRep<F> bgp_reflect_rep(Vertex i, const QuiverRep<F>& m) {
  const auto& q = m.quiver;
  if (!q.datum().valid_vertex(i)) throw Error("vertex out of range");
  const bool sink = q.is_sink(i);
  const bool source = q.is_source(i);
  if (!sink && !source)
    throw Error("vertex " + std::to_string(i + 1) + " is neither a sink nor a source");
  const auto& field = m.field;
  auto arrows = incident_arrows(q, i);
  QuiverRep<F> out{field, reflect_quiver(i, q), m.dims, m.maps};

  if (sink) {
    auto kernel = null_space(field, sink_map(m, i));
    out.dims[static_cast<std::size_t>(i)] = static_cast<int>(kernel.cols());
    std::size_t at = 0;
    for (auto k : arrows) {
      auto width = m.maps[k].cols();
      auto proj = zero_matrix(field, width, kernel.cols());
      for (std::size_t r = 0; r < width; ++r)
        for (std::size_t c = 0; c < kernel.cols(); ++c) proj(r, c) = kernel(at + r, c);
      out.maps[k] = std::move(proj);
      at += width;
    }
  } else {
    auto coker = left_null_space(field, source_map(m, i));
    out.dims[static_cast<std::size_t>(i)] = static_cast<int>(coker.rows());
    std::size_t at = 0;
    for (auto k : arrows) {
      auto height = m.maps[k].rows();
      auto inc = zero_matrix(field, coker.rows(), height);
      for (std::size_t r = 0; r < coker.rows(); ++r)
        for (std::size_t c = 0; c < height; ++c) inc(r, c) = coker(r, at + c);
      out.maps[k] = std::move(inc);
      at += height;
    }
  }
  out.validate();
  return out;
}

/// M(beta): the simple S_{i_k} on the k-th reflected quiver, carried back to
/// q by source reflections, where beta = beta_k in the adapted order of q.
template <class F>
QuiverRep<F> indecomposable(const Quiver& q, const RootVector& beta, const F& field) {
  auto word = adapted_word_of_w0(q);
  auto order = build_order(q.datum(), word);
  auto pos = order.position(beta);
  if (!pos) throw Error("(" + format_vector(beta.coords) + ") is not a positive root");
  std::vector<Quiver> chain{q};
  for (std::size_t s = 0; s < *pos; ++s) chain.push_back(reflect_quiver(word[s], chain.back()));
  auto m = simple_rep(field, chain.back(), word[*pos]);
  for (std::size_t s = *pos; s-- > 0;) m = bgp_reflect_rep(word[s], m);
  if (m.dim_vector() != beta || !(m.quiver == q))
    throw InternalError("BGP construction of M(" + format_vector(beta.coords) + ") went wrong");
  return m;
}

/// g . m with g_v acting at vertex v: maps become g_head x g_tail^{-1}.
template <class F>
QuiverRep<F> change_basis(const QuiverRep<F>& m, const std::vector<Matrix<typename F::Elem>>& g) {
  auto out = m;
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const auto& a = m.quiver.arrows()[k];
    Matrix<typename F::Elem> tail_inv;
    if (!invert(m.field, g[static_cast<std::size_t>(a.tail)], tail_inv)) throw Error("basis change is singular");
    out.maps[k] = multiply(m.field, multiply(m.field, g[static_cast<std::size_t>(a.head)], m.maps[k]), tail_inv);
  }
  return out;
}

/// Immutable per-(quiver, field) data: the adapted order, all M(beta_k) and
/// their brute-force Hom table. Safe to share between threads once built.
template <class F>
class RepContext {
 public:
  RepContext(F field, Quiver q)
      : field_(std::move(field)), quiver_(std::move(q)), order_(build_order(quiver_.datum(), adapted_word_of_w0(quiver_))) {
    for (const auto& beta : order_.beta) indecomposables_.push_back(indecomposable(quiver_, beta, field_));
    const auto n = order_.size();
    hom_table_ = IntMatrix(n, n, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) hom_table_(k, l) = hom_dim(indecomposables_[k], indecomposables_[l]);
    for (std::size_t k = 0; k < n; ++k)
      if (hom_table_(k, k) != 1)
        throw InternalError("End(M(" + format_vector(order_.beta[k].coords) + ")) is not one-dimensional");
    // The table is unitriangular up to reordering, so its inverse is integral.
    RationalField rat;
    auto h = zero_matrix(rat, n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) h(k, l) = Rational(hom_table_(k, l));
    Matrix<Rational> inv;
    if (!invert(rat, h, inv)) throw InternalError("Hom table is singular");
    hom_inverse_ = IntMatrix(n, n, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        if (denominator(inv(k, l)) != 1) throw InternalError("Hom table has a non-integral inverse");
        hom_inverse_(k, l) = static_cast<int>(numerator(inv(k, l)));
      }
  }

  const F& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const ConvexOrder& order() const { return order_; }
  const QuiverRep<F>& indecomposable_at(std::size_t k) const { return indecomposables_.at(k); }
  const QuiverRep<F>& indecomposable_of(const RootVector& beta) const {
    auto pos = order_.position(beta);
    if (!pos) throw Error("(" + format_vector(beta.coords) + ") is not a positive root");
    return indecomposables_[*pos];
  }
  /// hom_table()(k, l) = dim Hom(M(beta_k), M(beta_l)).
  const IntMatrix& hom_table() const { return hom_table_; }

  QuiverRep<F> rep_of_kp(const KostantPartition& lambda) const {
    if (lambda.mult.size() != order_.size()) throw Error("Kostant partition has the wrong length");
    auto out = zero_rep(field_, quiver_, RootVector::zero(quiver_.rank()));
    for (std::size_t k = 0; k < order_.size(); ++k)
      for (Coord c = 0; c < lambda.mult[k]; ++c) out = direct_sum(out, indecomposables_[k]);
    return out;
  }

  /// dim Hom(m, M(beta_l)) for l = 1..N.
  std::vector<Coord> hom_profile(const QuiverRep<F>& m) const {
    std::vector<Coord> out;
    for (const auto& x : indecomposables_) out.push_back(hom_dim(m, x));
    return out;
  }

  /// The lambda with m isomorphic to M(lambda), read off from the Hom profile.
  KostantPartition iso_class(const QuiverRep<F>& m) const {
    return kp_from_profile(hom_profile(m), m.dim_vector());
  }

  KostantPartition kp_from_profile(const std::vector<Coord>& profile, const RootVector& dim) const {
    // profile[l] = sum_k n_k H[k][l], so n = profile H^-1.
    const auto n = order_.size();
    std::vector<Coord> mult(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) mult[k] += profile[l] * hom_inverse_(l, k);
      if (mult[k] < 0) throw InternalError("Hom profile has no nonnegative solution");
    }
    auto kp = make_kp(order_, std::move(mult));
    if (kp.nu != dim) throw InternalError("Hom profile disagrees with the dimension vector");
    return kp;
  }

 private:
  F field_;
  Quiver quiver_;
  ConvexOrder order_;
  std::vector<QuiverRep<F>> indecomposables_;
  IntMatrix hom_table_;
  IntMatrix hom_inverse_;
};

/// |GL_n(F_q)|
BigInt gl_order(int n, long long q);
/// Number of F_q-points of the representation space of dimension nu.
long long rep_space_dim(const Quiver& q, const RootVector& nu);
/// |G_nu(F_q)| / |Aut M(lambda)(F_q)| where
/// |Aut| = q^(e - sum n_k^2) prod_k |GL_{n_k}(F_q)|, e = dim End M(lambda),
/// with e taken from the Hom table of the context.
BigInt orbit_point_count(const IntMatrix& hom_table, const KostantPartition& lambda, long long q);

template <class F>
BigInt orbit_point_count(const RepContext<F>& ctx, const KostantPartition& lambda, long long q) {
  return orbit_point_count(ctx.hom_table(), lambda, q);
}

nlohmann::json elem_to_json(const RationalField& field, const Rational& v);
nlohmann::json elem_to_json(const GaloisField& field, GaloisField::Elem v);
Rational elem_from_json(const RationalField& field, const nlohmann::json& j);
GaloisField::Elem elem_from_json(const GaloisField& field, const nlohmann::json& j);

/// {"quiver": "...", "field": "...", "dims": [...], "maps": [[[..row..], ...], ...]}
template <class F>
nlohmann::json rep_to_json(const QuiverRep<F>& m) {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& x : m.maps) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(elem_to_json(m.field, x(r, c)));
      rows.push_back(std::move(row));
    }
    maps.push_back(std::move(rows));
  }
  return {{"quiver", m.quiver.to_text()}, {"field", m.field.name()}, {"dims", m.dims}, {"maps", maps}};
}

template <class F>
QuiverRep<F> rep_from_json(const F& field, const nlohmann::json& j) {
  try {
    QuiverRep<F> m{field, Quiver::parse(j.at("quiver").get<std::string>()), j.at("dims").get<std::vector<int>>(), {}};
    const auto& maps = j.at("maps");
    if (maps.size() != m.quiver.arrows().size()) throw Error("one matrix per arrow is required");
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const auto& a = m.quiver.arrows()[k];
      auto rows = static_cast<std::size_t>(m.dims.at(static_cast<std::size_t>(a.head)));
      auto cols = static_cast<std::size_t>(m.dims.at(static_cast<std::size_t>(a.tail)));
      auto x = zero_matrix(field, rows, cols);
      if (maps[k].size() != rows) throw Error("matrix has the wrong number of rows");
      for (std::size_t r = 0; r < rows; ++r) {
        if (maps[k][r].size() != cols) throw Error("matrix has the wrong number of columns");
        for (std::size_t c = 0; c < cols; ++c) x(r, c) = elem_from_json(field, maps[k][r][c]);
      }
      m.maps.push_back(std::move(x));
    }
    m.validate();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed representation JSON: ") + e.what());
  }
}

}  // namespace kpq
