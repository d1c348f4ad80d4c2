#include "agslice/coweight.hpp"

#include <string>

namespace agslice {

namespace {

void require_rank(int n) {
  if (n < 2) throw std::invalid_argument("SL_n requires n >= 2, got n = " + std::to_string(n));
}

void require_same_rank(const Coweight& a, const Coweight& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("rank mismatch: SL_" + std::to_string(a.n()) + " vs SL_" +
                                std::to_string(b.n()));
}

}  // namespace

Coweight::Coweight(int n, IVector fund) : n_(n), fund_(std::move(fund)) {
  require_rank(n);
  if (fund_.size() != n - 1)
    throw std::invalid_argument("coweight of SL_" + std::to_string(n) + " needs " +
                                std::to_string(n - 1) + " fundamental coefficients, got " +
                                std::to_string(fund_.size()));
}

Coweight::Coweight(int n, const std::vector<int>& fund)
    : Coweight(n, IVector(Eigen::Map<const IVector>(fund.data(), static_cast<Eigen::Index>(fund.size())))) {}

Coweight Coweight::zero(int n) {
  require_rank(n);
  return Coweight(n, IVector(IVector::Zero(n - 1)));
}

Coweight Coweight::fundamental(int n, int i, int c) {
  require_rank(n);
  if (i < 1 || i >= n) throw std::invalid_argument("fundamental coweight index out of range");
  IVector f = IVector::Zero(n - 1);
  f(i - 1) = c;
  return Coweight(n, f);
}

Coweight operator+(const Coweight& a, const Coweight& b) {
  require_same_rank(a, b);
  return Coweight(a.n_, IVector(a.fund_ + b.fund_));
}

Coweight operator-(const Coweight& a, const Coweight& b) {
  require_same_rank(a, b);
  return Coweight(a.n_, IVector(a.fund_ - b.fund_));
}

Coweight operator*(int c, const Coweight& a) { return Coweight(a.n_, IVector(c * a.fund_)); }

std::ostream& operator<<(std::ostream& os, const Coweight& c) {
  os << "SL" << c.n() << "[";
  for (Eigen::Index i = 0; i < c.fund().size(); ++i) os << (i ? "," : "") << c.fund()(i);
  return os << "]";
}

bool CorootVector::integral() const {
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (!coeffs(i).is_integer()) return false;
  return true;
}

bool CorootVector::nonnegative() const {
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (coeffs(i).sign() < 0) return false;
  return true;
}

std::vector<long> CorootVector::as_integers() const {
  std::vector<long> out;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    if (!coeffs(i).is_integer())
      throw PreconditionError("coroot coefficient " + coeffs(i).str() + " at index " +
                              std::to_string(i + 1) + " is not integral (not in the coroot lattice)");
    out.push_back(coeffs(i).to_long());
  }
  return out;
}

IMatrix cartan_matrix(int n) {
  require_rank(n);
  const int r = n - 1;
  IMatrix a = IMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    a(i, i) = 2;
    if (i + 1 < r) a(i, i + 1) = a(i + 1, i) = -1;
  }
  return a;
}

QMatrix cartan_inverse(int n) { return inverse(to_rational(cartan_matrix(n))); }

CorootVector simple_coroot_coords(const Coweight& lambda) {
  const QMatrix inv = cartan_inverse(lambda.n());
  const QVector f = lambda.fund().cast<Rational>();
  QVector c(f.size());
  // The Cartan matrix is symmetric, so lambda = sum_i c_i alpha_i reads fund = A c.
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    Rational acc(0);
    for (Eigen::Index j = 0; j < f.size(); ++j) acc += inv(i, j) * f(j);
    c(i) = acc;
  }
  return CorootVector{lambda.n(), c};
}

CorootVector fund_to_coroot(const Coweight& lambda) {
  const CorootVector c = simple_coroot_coords(lambda);
  const Eigen::Index r = c.coeffs.size();
  QVector m(r);
  for (Eigen::Index i = 0; i < r; ++i) m(i) = c.coeffs(r - 1 - i);
  return CorootVector{lambda.n(), m};
}

QVector coroot_to_fund(int n, const QVector& c) {
  const IMatrix a = cartan_matrix(n);
  if (c.size() != a.rows()) throw std::invalid_argument("coroot vector length mismatch");
  QVector f(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    Rational acc(0);
    for (Eigen::Index j = 0; j < c.size(); ++j)
      if (a(j, i) != 0) acc += Rational(a(j, i)) * c(j);
    f(i) = acc;
  }
  return f;
}

bool dominance_leq(const Coweight& mu, const Coweight& lambda) {
  require_same_rank(mu, lambda);
  const CorootVector d = fund_to_coroot(lambda - mu);
  return d.integral() && d.nonnegative();
}

void require_below_minuscule_cone(const Coweight& lambda) {
  const int n = lambda.n();
  if (!lambda.dominant()) throw PreconditionError("lambda is not dominant (some fund coefficient < 0)");
  if (lambda.is_zero()) throw PreconditionError("violated 0 < lambda: lambda is zero");
  if (!dominance_leq(Coweight::zero(n), lambda))
    throw PreconditionError("violated 0 <= lambda: lambda is not a non-negative coroot combination");
  if (!dominance_leq(lambda, Coweight::fundamental(n, 1, n)))
    throw PreconditionError("violated lambda <= n w_1: n w_1 - lambda is not a non-negative coroot combination");
}

Partition coweight_to_partition(const Coweight& lambda) {
  require_below_minuscule_cone(lambda);
  std::vector<int> mult(lambda.fund().data(), lambda.fund().data() + lambda.fund().size());
  Partition v = Partition::from_multiplicities(mult);
  if (v.size() != lambda.n())
    throw PreconditionError("sum_j j * lambda_{n-j} = " + std::to_string(v.size()) + " differs from n = " +
                            std::to_string(lambda.n()));
  return v;
}

Coweight coweight_from_partition(const Partition& v, int n) {
  require_rank(n);
  if (v.size() != n)
    throw std::invalid_argument("partition of " + std::to_string(v.size()) + " given for n = " + std::to_string(n));
  if (v.length() == 1) return Coweight::zero(n);
  IVector f = IVector::Zero(n - 1);
  for (int j = 1; j < n; ++j) f(j - 1) = v.multiplicity(j);
  return Coweight(n, f);
}

CorootVector m_from_partition(const Partition& u, int n) {
  require_rank(n);
  if (u.size() != n)
    throw std::invalid_argument("m_from_partition: |u| = " + std::to_string(u.size()) + " but n = " +
                                std::to_string(n));
  QVector m(n - 1);
  int partial = 0;
  for (int i = 1; i <= n - 1; ++i) {
    partial += u.part(i);
    m(n - i - 1) = Rational(partial - i);
  }
  return CorootVector{n, m};
}

int embedding_factor(const Coweight& lambda) {
  const Rational m1 = fund_to_coroot(lambda)(1);
  if (!m1.is_integer()) throw PreconditionError("m_1 = " + m1.str() + " is not integral");
  const long k = m1.to_long();
  if (k < 1) throw PreconditionError("k = m_1 = " + std::to_string(k) + " must be at least 1");
  return static_cast<int>(k);
}

Coweight tau_embed(const Coweight& lambda, int k) {
  if (k < 1) throw std::invalid_argument("tau_embed needs k >= 1");
  const int big = k * lambda.n();
  IVector f = IVector::Zero(big - 1);
  f.head(lambda.n() - 1) = lambda.fund();
  return Coweight(big, f);
}

TauIdentityReport tau_coroot_identity(const Coweight& lambda) {
  if (!lambda.dominant()) throw PreconditionError("lambda is not dominant");
  if (!dominance_leq(Coweight::zero(lambda.n()), lambda)) throw PreconditionError("violated lambda >= 0");
  const int n = lambda.n();
  const int k = embedding_factor(lambda);
  const int big = k * n;

  TauIdentityReport rep;
  rep.k = k;
  rep.lhs = tau_embed(lambda, k).fund().cast<Rational>();

  // sum_{i=1}^{n-1} m_{n-i} alpha_i in SL_{kn}.
  const CorootVector m = fund_to_coroot(lambda);
  QVector c = QVector::Constant(big - 1, Rational(0));
  for (int i = 1; i <= n - 1; ++i) c(i - 1) = m(n - i);
  QVector rhs = coroot_to_fund(big, c);
  if (n <= big - 1) rhs(n - 1) += Rational(k);  // k w_n; w_{kn} is zero when k = 1
  rep.rhs = rhs;
  rep.identity_holds = exactly_equal(rep.lhs, rep.rhs);

  rep.k_wn_computed = QVector::Constant(big - 1, Rational(0));
  if (n <= big - 1) rep.k_wn_computed = simple_coroot_coords(Coweight::fundamental(big, n, k)).coeffs;
  rep.k_wn_closed_form = QVector(big - 1);
  for (int j = 1; j <= big - 1; ++j)
    rep.k_wn_closed_form(j - 1) = j < n ? Rational(j * (k - 1)) : Rational(big - j);
  rep.expansion_holds = exactly_equal(rep.k_wn_computed, rep.k_wn_closed_form);
  return rep;
}

bool tau_bound_check(const Coweight& lambda) {
  const int k = embedding_factor(lambda);
  const int big = k * lambda.n();
  return dominance_leq(tau_embed(lambda, k), Coweight::fundamental(big, 1, big));
}

PairingReport shift_pairing_check(const Coweight& mu, const Coweight& lambda, int k) {
  require_same_rank(mu, lambda);
  if (k < 1) throw std::invalid_argument("shift_pairing_check needs k >= 1");
  if (!mu.dominant() || !lambda.dominant()) throw PreconditionError("mu and lambda must be dominant");
  if (!dominance_leq(mu, lambda)) throw PreconditionError("violated mu <= lambda");
  const int n = lambda.n();
  const int big = k * n;

  const std::vector<long> c = simple_coroot_coords(lambda - mu).as_integers();
  const IMatrix a_big = cartan_matrix(big);
  IVector mt = tau_embed(lambda, k).fund();
  for (int i = 0; i < n - 1; ++i) mt -= static_cast<int>(c[i]) * IVector(a_big.row(i).transpose());

  PairingReport rep;
  rep.k = k;
  rep.mu_tilde = mt;
  rep.holds = true;
  for (int l = 1; l <= n - 1; ++l) {
    rep.lhs.push_back(mt(l - 1));
    rep.rhs.push_back(mu.coeff(l));
    if (rep.lhs.back() != rep.rhs.back()) rep.holds = false;
  }
  return rep;
}

std::vector<Coweight> dominant_coweights(int n, int bound) {
  require_rank(n);
  std::vector<Coweight> out;
  IVector f = IVector::Zero(n - 1);
  while (true) {
    out.emplace_back(n, f);
    int i = 0;
    while (i < n - 1 && f(i) == bound) f(i++) = 0;
    if (i == n - 1) break;
    ++f(i);
  }
  return out;
}

}  // namespace agslice
