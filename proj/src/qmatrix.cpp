#include "brauer/qmatrix.hpp"

#include "brauer/error.hpp"

#include <ostream>
#include <utility>

namespace brauer {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MathError("QMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Rational> d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, std::span<const IntVector> cols) {
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw MathError("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                       std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw MathError("block out of range");
  QMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Rational QMatrix::trace() const {
  if (!is_square()) throw MathError("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw MathError("shape mismatch in *");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj != 0) c(i, j) += aik * bkj;
      }
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw MathError("hstack: row count mismatch");
  QMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

QMatrix block_diagonal(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

namespace {

// Row-major integer matrix used by the fraction-free passes.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;
  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

// Multiplies each row by the lcm of its denominators. Returns the multipliers.
IntMatrix integer_rows(const QMatrix& m, std::vector<Integer>* scales) {
  IntMatrix out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols())};
  if (scales) scales->assign(m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      out.at(r, c) = x.get_num() * (l / x.get_den());
    }
    if (scales) (*scales)[r] = l;
  }
  return out;
}

// Bareiss forward elimination to row echelon form. Every intermediate entry is
// a minor of the input, so each division below is exact.
struct ForwardResult {
  std::vector<std::size_t> pivots;
  int sign = 1;
};

ForwardResult bareiss_forward(IntMatrix& m) {
  ForwardResult res;
  Integer prev = 1;
  Integer t1, t2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      res.sign = -res.sign;
    }
    const Integer& piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      Integer& lead = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), m.at(i, j).get_mpz_t());
        mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), m.at(r, j).get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(m.at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    // Rows below the pivot row were already reduced against earlier pivots;
    // the current pivot becomes the divisor for the next step.
    prev = piv;
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

}  // namespace

Echelon reduced_row_echelon(const QMatrix& m) {
  IntMatrix im = integer_rows(m, nullptr);
  ForwardResult fr = bareiss_forward(im);
  const std::size_t rk = fr.pivots.size();
  QMatrix red(rk, m.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) red(r, c) = Rational(im.at(r, c));
  for (std::size_t k = rk; k-- > 0;) {
    const std::size_t pc = fr.pivots[k];
    const Rational inv = 1 / red(k, pc);
    for (std::size_t c = pc; c < m.cols(); ++c) red(k, c) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = red(i, pc);
      if (f == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) red(i, c) -= f * red(k, c);
    }
  }
  return {std::move(red), std::move(fr.pivots)};
}

std::size_t rank(const QMatrix& m) {
  IntMatrix im = integer_rows(m, nullptr);
  return bareiss_forward(im).pivots.size();
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw MathError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<Integer> scales;
  IntMatrix im = integer_rows(m, &scales);
  ForwardResult fr = bareiss_forward(im);
  if (fr.pivots.size() < n) return 0;
  Rational det(im.at(n - 1, n - 1) * fr.sign);
  Integer denom = 1;
  for (const auto& s : scales) denom *= s;
  det /= denom;
  det.canonicalize();
  return det;
}

IntVector primitive_integer(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) return out;
  int lead = 0;
  for (const auto& x : out)
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  if (lead < 0) g = -g;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::vector<IntVector> kernel_basis(const QMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto pc : e.pivots) is_pivot[pc] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

QMatrix column_space_basis(const QMatrix& m) {
  Echelon e = reduced_row_echelon(m.transpose());
  std::vector<IntVector> cols;
  cols.reserve(e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    cols.push_back(primitive_integer(e.reduced.row(k)));
  return QMatrix::from_columns(m.rows(), cols);
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw MathError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Echelon e = reduced_row_echelon(hstack(m, QMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw MathError("inverse: matrix is singular");
  return e.reduced.block(0, n, n, n);
}

}  // namespace brauer
