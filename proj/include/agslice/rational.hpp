#pragma once

// Exact rational scalar used throughout the library.
//
// A thin value wrapper around GMP's mpq_class. The wrapper exists so that
// every arithmetic operator returns a concrete Rational instead of a gmpxx
// expression template, which is what Eigen needs from a custom scalar.

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace agslice {

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  explicit Rational(const mpz_class& integer) : v_(integer) {}
  explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Accepts "p", "p/q" or "-p/q"; denominators are normalized.
  static Rational parse(std::string_view text);

  /// Canonical "p/q" string with q > 0 and gcd(p, q) = 1 ("0/1" for zero).
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// Integer value; throws std::domain_error if not integral or out of range.
  long to_long() const;
  /// Smallest integer >= this value (throws if out of range).
  long ceil() const;

  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact quotient; for a field this is ordinary division.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace agslice

template <>
struct std::hash<agslice::Rational> {
  std::size_t operator()(const agslice::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};

namespace Eigen {

template <>
struct NumTraits<agslice::Rational> : GenericNumTraits<agslice::Rational> {
  using Real = agslice::Rational;
  using NonInteger = agslice::Rational;
  using Literal = agslice::Rational;
  using Nested = agslice::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
