#pragma once

#include "brauer/exact_linalg.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace brauer {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Rational> d);
  /// Columns of the result are the given integer vectors.
  static QMatrix from_columns(std::size_t rows, std::span<const IntVector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Rational> entries() const { return data_; }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  QMatrix transpose() const;
  QMatrix column(std::size_t c) const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool is_identity() const;
  Rational trace() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& s);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
  friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix block_diagonal(const QMatrix& a, const QMatrix& b);

/// Reduced row echelon form plus pivot columns, obtained by fraction-free
/// forward elimination followed by rational back-substitution.
struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon reduced_row_echelon(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Exact determinant by Bareiss elimination. Rejects non-square input.
Rational determinant(const QMatrix& m);

/// Right kernel basis. One vector per free column of the reduced echelon form
/// (free entry 1, other free entries 0), scaled to content 1 with the first
/// nonzero entry positive. Full column rank gives an empty list.
std::vector<IntVector> kernel_basis(const QMatrix& m);

/// Canonical basis of the column space: the rows of the reduced echelon form of
/// the transpose, scaled to primitive integer vectors, returned as columns.
QMatrix column_space_basis(const QMatrix& m);

QMatrix inverse(const QMatrix& m);

/// Scale a rational vector to a primitive integer vector whose first nonzero
/// entry is positive.
IntVector primitive_integer(std::span<const Rational> v);

}  // namespace brauer
