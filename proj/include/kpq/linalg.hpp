#pragma once

// Dense matrices and exact Gaussian elimination over any field type from
// field.hpp. Zero-sized matrices are valid everywhere.

#include <cstddef>
#include <vector>

namespace kpq {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long long>;

template <class F>
Matrix<typename F::Elem> zero_matrix(const F& field, std::size_t rows, std::size_t cols) {
  return Matrix<typename F::Elem>(rows, cols, field.zero());
}

template <class F>
Matrix<typename F::Elem> identity_matrix(const F& field, std::size_t n) {
  auto m = zero_matrix(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class F>
Matrix<typename F::Elem> multiply(const F& field, const Matrix<typename F::Elem>& a,
                                  const Matrix<typename F::Elem>& b) {
  auto out = zero_matrix(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
    }
  return out;
}

template <class F>
Matrix<typename F::Elem> transpose(const F& field, const Matrix<typename F::Elem>& a) {
  auto out = zero_matrix(field, a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <class F>
bool is_zero_matrix(const F& field, const Matrix<typename F::Elem>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!field.is_zero(a(i, j))) return false;
  return true;
}

template <class F>
struct Echelon {
  Matrix<typename F::Elem> reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form.
template <class F>
Echelon<F> rref(const F& field, Matrix<typename F::Elem> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && field.is_zero(m(pick, col))) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));
    auto scale = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& field, const Matrix<typename F::Elem>& m) {
  return rref(field, m).pivot_cols.size();
}

/// Basis of {v : m v = 0}, one basis vector per column.
template <class F>
Matrix<typename F::Elem> null_space(const F& field, const Matrix<typename F::Elem>& m) {
  auto ech = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  auto basis = zero_matrix(field, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = field.one();
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      basis(ech.pivot_cols[r], k) = field.neg(ech.reduced(r, free_cols[k]));
  }
  return basis;
}

/// Basis of {y : y m = 0}, one basis vector per row. Its kernel is im(m).
template <class F>
Matrix<typename F::Elem> left_null_space(const F& field, const Matrix<typename F::Elem>& m) {
  return transpose(field, null_space(field, transpose(field, m)));
}

/// Solves a x = b for x, or returns false when the system is inconsistent.
/// b and x are column blocks; any particular solution is returned.
template <class F>
bool solve(const F& field, const Matrix<typename F::Elem>& a, const Matrix<typename F::Elem>& b,
           Matrix<typename F::Elem>& x) {
  auto aug = zero_matrix(field, a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  auto ech = rref(field, std::move(aug));
  x = zero_matrix(field, a.cols(), b.cols());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    auto pc = ech.pivot_cols[r];
    if (pc >= a.cols()) return false;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pc, c) = ech.reduced(r, a.cols() + c);
  }
  return true;
}

}  // namespace kpq

namespace kpq {

/// Inverse of a square matrix, or false if it is singular.
template <class F>
bool invert(const F& field, const Matrix<typename F::Elem>& m, Matrix<typename F::Elem>& out) {
  if (m.rows() != m.cols()) return false;
  if (rank(field, m) != m.rows()) return false;
  return solve(field, m, identity_matrix(field, m.rows()), out);
}

}  // namespace kpq
