#include "agslice/tpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace agslice {

TPoly::TPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

TPoly TPoly::monomial(const Rational& c, int exponent) {
  TPoly p;
  if (c.is_zero()) return p;
  p.shift_ = std::max(0, exponent);
  p.terms_.emplace(p.shift_ - exponent, c);
  return p;
}

TPoly TPoly::from_coeffs(int shift, std::map<int, Rational> coeffs) {
  TPoly p;
  for (const auto& [s, c] : coeffs)
    if (s < 0) throw std::invalid_argument("TPoly coefficient keys must be non-negative");
  p.shift_ = shift;
  p.terms_ = std::move(coeffs);
  p.canonicalize();
  return p;
}

void TPoly::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  if (terms_.empty()) {
    shift_ = 0;
    return;
  }
  const int top = shift_ - terms_.begin()->first;
  const int target = std::max(0, top);
  if (target == shift_) return;
  const int delta = target - shift_;
  std::map<int, Rational> moved;
  for (auto& [s, c] : terms_) moved.emplace_hint(moved.end(), s + delta, std::move(c));
  terms_ = std::move(moved);
  shift_ = target;
}

Rational TPoly::coeff(int s) const {
  const auto it = terms_.find(shift_ + s);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> TPoly::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return shift_ - terms_.rbegin()->first;
}

std::optional<int> TPoly::top_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return shift_ - terms_.begin()->first;
}

TPoly TPoly::times_t_power(int e) const {
  TPoly p = *this;
  p.shift_ += e;
  p.canonicalize();
  return p;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.terms_.empty()) return *this;
  const int s = std::max(shift_, o.shift_);
  if (s != shift_) {
    std::map<int, Rational> moved;
    for (auto& [k, c] : terms_) moved.emplace_hint(moved.end(), k + (s - shift_), std::move(c));
    terms_ = std::move(moved);
    shift_ = s;
  }
  const int d = s - o.shift_;
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k + d, c);
    if (!inserted) it->second += c;
  }
  canonicalize();
  return *this;
}

TPoly operator-(const TPoly& a) {
  TPoly r = a;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TPoly& TPoly::operator-=(const TPoly& o) { return *this += -o; }

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.shift_ = a.shift_ + b.shift_;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(ka + kb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  r.canonicalize();
  return r;
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly scale(const TPoly& p, const Rational& c) { return p * TPoly(c); }

TPoly exact_div(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw std::domain_error("TPoly division by zero");
  if (a.is_zero()) return TPoly();
  // Work with u = t^{-1}: a = t^{sa} A(u), b = t^{sb} B(u). Strip the lowest
  // u-powers so both constant terms are nonzero, then divide from the bottom.
  const int alo = a.coeffs().begin()->first;
  const int blo = b.coeffs().begin()->first;
  const int ahi = a.coeffs().rbegin()->first;
  const int bhi = b.coeffs().rbegin()->first;
  std::vector<Rational> num(ahi - alo + 1, Rational(0));
  std::vector<Rational> den(bhi - blo + 1, Rational(0));
  for (const auto& [s, c] : a.coeffs()) num[s - alo] = c;
  for (const auto& [s, c] : b.coeffs()) den[s - blo] = c;
  if (den.size() > num.size()) throw std::domain_error("TPoly division is not exact");
  std::vector<Rational> q(num.size() - den.size() + 1, Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (num[i].is_zero()) continue;
    const Rational f = num[i] / den[0];
    q[i] = f;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  for (const Rational& r : num)
    if (!r.is_zero()) throw std::domain_error("TPoly division is not exact");
  std::map<int, Rational> qc;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (!q[i].is_zero()) qc.emplace(static_cast<int>(i), q[i]);
  // quotient = t^{sa - sb} u^{alo - blo} Q(u)
  return TPoly::from_coeffs(0, std::move(qc)).times_t_power(a.shift() - b.shift() - (alo - blo));
}

bool valuation_at_least(const TPoly& p, long bound) {
  const auto v = p.valuation();
  return !v || *v >= bound;
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [s, c] : p.coeffs()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*t^" << (p.shift() - s);
  }
  return os;
}

TPoly minor(const TMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minor of a non-square matrix");
  if (rows.size() != cols.size() || rows.empty())
    throw std::invalid_argument("minor needs row and column sets of equal positive size");
  const int n = static_cast<int>(m.rows());
  validate_index_set(rows, n, "row");
  validate_index_set(cols, n, "column");
  return determinant(submatrix(m, rows, cols));
}

TMatrix g_from_nilpotent(const QMatrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("g_from_nilpotent needs a square matrix");
  const Eigen::Index n = x.rows();
  TMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = TPoly(Rational(i == j ? 1 : 0)) + TPoly::monomial(x(i, j), -1);
  return g;
}

TMatrix block_embed(const TMatrix& g, int k) {
  if (k < 1) throw std::invalid_argument("block_embed needs k >= 1");
  if (g.rows() != g.cols()) throw std::invalid_argument("block_embed needs a square matrix");
  const Eigen::Index n = g.rows();
  const Eigen::Index off = (k - 1) * n;
  TMatrix out = zeros<TPoly>(k * n, k * n);
  for (Eigen::Index i = 0; i < off; ++i) out(i, i) = TPoly::monomial(Rational(1), -1);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(off + i, off + j) = g(i, j).times_t_power(k - 1);
  return out;
}

QMatrix coefficient_matrix(const TMatrix& m, int s) {
  QMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).coeff(s);
  return out;
}

TMatrix constant_matrix(const QMatrix& x) {
  TMatrix out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) out(i, j) = TPoly(x(i, j));
  return out;
}

}  // namespace agslice
