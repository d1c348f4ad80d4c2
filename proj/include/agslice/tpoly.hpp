#pragma once

// Laurent polynomials in t with rational coefficients, stored as
//   t^shift * sum_{s >= 0} c_s t^{-s}.
// Every object in play is a power of t times a polynomial in t^{-1}, so one
// integer shift per polynomial replaces negative map keys.
//
// Canonical form: shift = max(0, largest t-exponent present), no stored zero
// coefficients, and the zero polynomial has shift 0 and empty support. Two
// TPoly values are equal iff their canonical forms agree.
//
// Valuation convention: valuation(p) is the most negative t-exponent present,
// i.e. -(largest s with a nonzero t^{-s} coefficient). Hence
//   valuation(p) >= -m   <=>   coeff(p, s) == 0 for every s > m,
// and valuation(0) = +infinity (std::nullopt). Every other module consults
// this one definition.

#include "agslice/dense.hpp"
#include "agslice/rational.hpp"

#include <Eigen/Core>

#include <concepts>
#include <map>
#include <optional>
#include <ostream>

namespace agslice {

class TPoly {
 public:
  TPoly() = default;

  template <std::integral I>
  TPoly(I c) : TPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  TPoly(const Rational& c);           // NOLINT(google-explicit-constructor)

  /// c * t^exponent.
  static TPoly monomial(const Rational& c, int exponent);
  /// t^shift * sum_s coeffs[s] t^{-s}; keys must be >= 0. Canonicalizes.
  static TPoly from_coeffs(int shift, std::map<int, Rational> coeffs);

  int shift() const { return shift_; }
  const std::map<int, Rational>& coeffs() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of t^{-s}, for any integer s.
  Rational coeff(int s) const;
  /// Most negative t-exponent present; nullopt encodes +infinity.
  std::optional<int> valuation() const;
  /// Largest t-exponent present; nullopt for zero.
  std::optional<int> top_exponent() const;

  /// this * t^e.
  TPoly times_t_power(int e) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a);
  friend bool operator==(const TPoly& a, const TPoly& b) = default;

 private:
  void canonicalize();

  int shift_ = 0;
  std::map<int, Rational> terms_;
};

inline bool is_zero(const TPoly& p) { return p.is_zero(); }

/// Scalar multiple.
TPoly scale(const TPoly& p, const Rational& c);

/// Exact quotient a / b as Laurent polynomials; throws std::domain_error
/// when b is zero or does not divide a.
TPoly exact_div(const TPoly& a, const TPoly& b);

/// valuation(p) >= bound, with +infinity passing everything.
bool valuation_at_least(const TPoly& p, long bound);

std::ostream& operator<<(std::ostream& os, const TPoly& p);

using TMatrix = Matrix<TPoly>;

/// Determinant of the (rows, cols) submatrix; index sets are 1-based and
/// strictly increasing, of equal size >= 1.
TPoly minor(const TMatrix& m, const IndexSet& rows, const IndexSet& cols);

/// I + t^{-1} X.
TMatrix g_from_nilpotent(const QMatrix& x);

/// Block diagonal diag(t^{-1} I_{(k-1)n}, t^{k-1} g), k >= 1.
TMatrix block_embed(const TMatrix& g, int k);

/// Matrix of t^{-s} coefficients.
QMatrix coefficient_matrix(const TMatrix& m, int s);

/// Constant (t^0) matrix embedded as a TMatrix.
TMatrix constant_matrix(const QMatrix& x);

}  // namespace agslice

namespace Eigen {

template <>
struct NumTraits<agslice::TPoly> : GenericNumTraits<agslice::TPoly> {
  using Real = agslice::TPoly;
  using NonInteger = agslice::TPoly;
  using Literal = agslice::TPoly;
  using Nested = agslice::TPoly;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
