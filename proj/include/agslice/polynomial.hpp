#pragma once

// Sparse multivariate polynomials with rational coefficients over an ordered
// variable type, and dense univariate polynomials over an arbitrary ring.

#include "agslice/rational.hpp"

#include <algorithm>
#include <concepts>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace agslice {

template <class Var>
class SparsePoly {
 public:
  /// Sorted by variable, exponents strictly positive.
  using Monomial = std::vector<std::pair<Var, int>>;
  using Terms = std::map<Monomial, Rational>;

  SparsePoly() = default;
  SparsePoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  template <std::integral I>
  SparsePoly(I c) : SparsePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static SparsePoly variable(const Var& v, int exponent = 1) {
    SparsePoly p;
    p.terms_.emplace(Monomial{{v, exponent}}, Rational(1));
    return p;
  }

  static SparsePoly from_terms(Terms terms) {
    SparsePoly p;
    for (auto& [m, c] : terms)
      if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  static int degree_of(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
  }

  /// -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
    return d;
  }

  bool homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree_of(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& kv) { return degree_of(kv.first) == d; });
  }

  std::set<Var> variables() const {
    std::set<Var> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) out.insert(v);
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb), ca * cb);
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

  SparsePoly scaled(const Rational& c) const {
    if (c.is_zero()) return SparsePoly();
    SparsePoly r = *this;
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
  }

  /// Partial derivative with respect to v.
  SparsePoly derivative(const Var& v) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!(m[i].first == v)) continue;
        Monomial dm = m;
        const int e = dm[i].second;
        if (e == 1)
          dm.erase(dm.begin() + static_cast<std::ptrdiff_t>(i));
        else
          --dm[i].second;
        r.add_term(dm, c * Rational(e));
      }
    }
    return r;
  }

  /// Exact value with every variable replaced by value_of(var).
  template <class F>
  Rational evaluate(F&& value_of) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (const auto& [v, e] : m) {
        const Rational x = value_of(v);
        if (x.is_zero()) {
          term = Rational(0);
          break;
        }
        for (int k = 0; k < e; ++k) term *= x;
      }
      total += term;
    }
    return total;
  }

  /// Replace each variable by the polynomial image(var).
  template <class F>
  SparsePoly substitute(F&& image) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
      SparsePoly term(c);
      for (const auto& [v, e] : m) {
        const SparsePoly x = image(v);
        for (int k = 0; k < e; ++k) term *= x;
      }
      r += term;
    }
    return r;
  }

  static Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
      if (j == b.end() || (i != a.end() && i->first < j->first)) {
        out.push_back(*i++);
      } else if (i == a.end() || j->first < i->first) {
        out.push_back(*j++);
      } else {
        out.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

template <class Var>
bool is_zero(const SparsePoly<Var>& p) {
  return p.is_zero();
}

/// Dense polynomial in one formal variable over a commutative ring R.
/// Used for symbolic t^{-1}-expansions where R is itself a polynomial ring.
template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const R& c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(c)) coeffs_.push_back(c);
  }
  template <std::integral I>
  UniPoly(I c) : UniPoly(R(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * u^d.
  static UniPoly monomial(const R& c, int d) {
    UniPoly p;
    if (is_zero(c)) return p;
    p.coeffs_.assign(d + 1, R(0));
    p.coeffs_[d] = c;
    return p;
  }

  R coeff(int d) const { return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : R(0); }
  bool is_zero_poly() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (!is_zero(b.coeffs_[j])) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const UniPoly<R>& p) {
  return p.is_zero_poly();
}

}  // namespace agslice
