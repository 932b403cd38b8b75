#pragma once

// Dense exact linear algebra over GMP integers and rationals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quograph/errors.hpp"

namespace quograph {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix ones(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (auto& x : m.data_) x = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  // Row-major flattening, i.e. vec() of the matrix read row by row.
  std::span<const T> flat() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw InputError("exact-linalg", "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

IntegerMatrix mat_mul(const IntegerMatrix& a, const IntegerMatrix& b);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix to_rational(const IntegerMatrix& m);
// Present only when every entry is an integer.
std::optional<IntegerMatrix> to_integer(const RationalMatrix& m);

template <typename T>
T trace(const Matrix<T>& m) {
  T t = 0;
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) t += m(i, i);
  return t;
}

// Exact rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntegerMatrix& m);

// Solves a X = b. Returns nullopt when the system is inconsistent. Free
// variables are set to zero, so underdetermined systems have a canonical
// answer. Every returned X is re-substituted and checked.
std::optional<RationalMatrix> solve(const RationalMatrix& a,
                                    const RationalMatrix& b);

// Matrix whose k-th column is the row-major vectorization of mats[k].
RationalMatrix vectorized_columns(std::span<const IntegerMatrix> mats);

// Growing row space over Q. Rows are kept primitive and in echelon form so
// membership tests are exact.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  // Adds the row; returns true when it enlarged the span.
  bool add(std::span<const Integer> row);
  bool contains(std::span<const Integer> row) const;
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::size_t width() const noexcept { return width_; }

 private:
  std::vector<Integer> reduce(std::span<const Integer> row) const;

  std::size_t width_;
  std::vector<std::vector<Integer>> basis_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

// Univariate polynomial with exact rational coefficients, stored in
// ascending degree order with trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial x();

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  Rational operator()(const Rational& x) const;
  long double operator()(long double x) const;
  // Same polynomial with every coefficient replaced by its absolute value,
  // evaluated at |x|. Bounds the rounding error of a Horner evaluation.
  long double abs_bound(long double x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

  // "1/26 (3x^4 - 10x^3 - 10x^2 + 75x - 36)"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RationalMatrix eval_poly(const Polynomial& p, const IntegerMatrix& a);

// "num/den", den omitted when 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

}  // namespace quograph
