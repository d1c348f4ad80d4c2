#include "agslice/rational.hpp"

#include <limits>
#include <stdexcept>

namespace agslice {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto trim = [](std::string& x) {
    const auto b = x.find_first_not_of(" \t");
    const auto e = x.find_last_not_of(" \t");
    x = (b == std::string::npos) ? std::string() : x.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational literal with zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
  const mpz_class& n = v_.get_num();
  if (!n.fits_slong_p()) throw std::domain_error("integer " + n.get_str() + " out of range");
  return n.get_si();
}

long Rational::ceil() const {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!c.fits_slong_p()) throw std::domain_error("ceiling out of range");
  return c.get_si();
}

}  // namespace agslice
