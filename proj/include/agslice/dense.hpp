#pragma once

// Dense matrices over exact scalars and the handful of exact algorithms the
// library needs. Everything is templated on the scalar; the scalar type must
// provide ring operators and an ADL-visible is_zero(). Bareiss elimination
// additionally needs exact_div(a, b) for a divisible by b.

#include "agslice/rational.hpp"

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace agslice {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;
using IMatrix = Eigen::MatrixXi;
using IVector = Eigen::VectorXi;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class DerivedA, class DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
  return m;
}

template <class Scalar>
Matrix<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  Matrix<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Scalar(0);
  return m;
}

inline QMatrix to_rational(const IMatrix& m) { return m.cast<Rational>(); }

// Plain triple loop; keeps the product independent of Eigen's blocking
// kernels, which only matters for exotic scalars.
template <class Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
  Matrix<Scalar> c = zeros<Scalar>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class Scalar>
Matrix<Scalar> power(const Matrix<Scalar>& x, int p) {
  if (x.rows() != x.cols()) throw std::invalid_argument("power of a non-square matrix");
  Matrix<Scalar> r = identity<Scalar>(x.rows());
  for (int i = 0; i < p; ++i) r = multiply(r, x);
  return r;
}

/// Laplace expansion along the first row. Works over any commutative ring.
template <class Scalar>
Scalar determinant_cofactor(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar det(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<Scalar> sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    Scalar term = m(0, j) * determinant_cofactor(sub);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// Fraction-free Bareiss elimination with row pivoting.
template <class Scalar>
Scalar determinant_bareiss(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index piv = k + 1;
      while (piv < n && is_zero(m(piv, k))) ++piv;
      if (piv == n) return Scalar(0);
      m.row(k).swap(m.row(piv));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return negate ? Scalar(0) - m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Cofactor expansion up to size 4, Bareiss above.
template <class Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  return m.rows() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

/// Rank over a field, by Gaussian elimination on a copy.
template <class Scalar>
Eigen::Index rank(Matrix<Scalar> m) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) m.row(r).swap(m.row(piv));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const Scalar f = m(i, c) / m(r, c);
      for (Eigen::Index j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Gauss-Jordan inverse over a field; throws std::domain_error if singular.
template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<Scalar> m = a;
  Matrix<Scalar> inv = identity<Scalar>(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    m.row(c).swap(m.row(piv));
    inv.row(c).swap(inv.row(piv));
    const Scalar p = m(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// -- index sets -------------------------------------------------------------

/// A set of row or column labels, 1-based and strictly increasing, as in the
/// usual minor notation.
using IndexSet = std::vector<int>;

inline std::uint32_t to_mask(const IndexSet& s) {
  std::uint32_t m = 0;
  for (int i : s) m |= 1u << (i - 1);
  return m;
}

inline IndexSet from_mask(std::uint32_t m) {
  IndexSet s;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) s.push_back(i + 1);
  return s;
}

/// All k-element subsets of {1..n} in lexicographic order.
std::vector<IndexSet> subsets(int n, int k);

/// Throws std::invalid_argument unless s is strictly increasing within 1..n.
void validate_index_set(const IndexSet& s, int n, const char* what);

template <class Scalar>
Matrix<Scalar> submatrix(const Matrix<Scalar>& m, const IndexSet& rows, const IndexSet& cols) {
  Matrix<Scalar> sub(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i] - 1, cols[j] - 1);
  return sub;
}

/// Every square minor of an N x N matrix (N <= 10), computed bottom-up by
/// Laplace expansion along the last column of each minor. Zero entries are
/// skipped, so block-sparse inputs are cheap.
template <class Scalar>
class MinorTable {
 public:
  explicit MinorTable(const Matrix<Scalar>& m) : n_(static_cast<int>(m.rows())) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minor table of a non-square matrix");
    if (n_ > 10) throw std::invalid_argument("minor table limited to 10 x 10");
    values_.assign(std::size_t{1} << (2 * n_), Scalar(0));
    values_[0] = Scalar(1);
    // Column sets in increasing popcount order guarantee the smaller minors exist.
    std::vector<std::vector<std::uint32_t>> by_size(n_ + 1);
    for (std::uint32_t s = 0; s < (1u << n_); ++s) by_size[std::popcount(s)].push_back(s);
    for (int k = 1; k <= n_; ++k) {
      for (std::uint32_t cols : by_size[k]) {
        const int last = 31 - std::countl_zero(cols);
        const std::uint32_t rest = cols & ~(1u << last);
        for (std::uint32_t rows : by_size[k]) {
          Scalar acc(0);
          int pos = 0;
          for (int r = 0; r < n_; ++r) {
            if (!(rows & (1u << r))) continue;
            ++pos;
            const Scalar& entry = m(r, last);
            if (is_zero(entry)) continue;
            const Scalar& sub = at(rows & ~(1u << r), rest);
            if (is_zero(sub)) continue;
            // sign (-1)^(pos + k) with 1-based position of r inside rows
            if ((pos + k) % 2 == 0)
              acc += entry * sub;
            else
              acc -= entry * sub;
          }
          values_[key(rows, cols)] = std::move(acc);
        }
      }
    }
  }

  int size() const { return n_; }
  const Scalar& at(std::uint32_t rows, std::uint32_t cols) const { return values_[key(rows, cols)]; }
  const Scalar& at(const IndexSet& rows, const IndexSet& cols) const {
    return at(to_mask(rows), to_mask(cols));
  }

 private:
  std::size_t key(std::uint32_t rows, std::uint32_t cols) const {
    return (static_cast<std::size_t>(rows) << n_) | cols;
  }
  int n_;
  std::vector<Scalar> values_;
};

}  // namespace agslice
