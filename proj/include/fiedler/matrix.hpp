#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fiedler/errors.hpp"
#include "fiedler/polynomial.hpp"
#include "fiedler/rational.hpp"
#include "fiedler/rational_function.hpp"

namespace fiedler {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("matrix data length does not match its shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> data() const noexcept { return data_; }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<Polynomial>;
using RationalFunctionMatrix = Matrix<RationalFunction>;
using RationalVector = std::vector<Rational>;

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, const RationalMatrix& a);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RationalMatrix outer(std::span<const Rational> u, std::span<const Rational> v);
Rational trace(const RationalMatrix& a);

/// det(lambda I - M) together with the coefficient matrices of the adjugate,
/// adj(lambda I - M) = sum_j lambda^j * adjugate[j].
struct CharpolyAdjugate {
  Polynomial charpoly;
  std::vector<RationalMatrix> adjugate;
};

/// Faddeev-LeVerrier iteration. Entries are scaled to integers first so the
/// recurrence runs on GMP integers; the result is rescaled exactly.
/// Throws ShapeError on non-square input.
CharpolyAdjugate charpoly_and_adjugate(const RationalMatrix& m);

/// Convenience: det(lambda I - M).
Polynomial charpoly(const RationalMatrix& m);

/// Exact determinant by fraction-free Gaussian elimination.
Rational det(const RationalMatrix& m);

/// Bareiss elimination over Q[lambda].
Polynomial poly_matrix_det(const PolynomialMatrix& m);

/// Determinant over Q(lambda): every row is cleared of denominators, the
/// polynomial determinant is taken by Bareiss, and the row factors are
/// divided back out.
RationalFunction polymat_det(const RationalFunctionMatrix& m);

/// Laplace expansion along the first row; exponential cost, used as a
/// reference for small k.
template <class T>
T cofactor_det(const Matrix<T>& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc{};
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    T term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace fiedler
