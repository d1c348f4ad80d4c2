#pragma once

// Type A_{n-1} coweight and coroot lattice combinatorics.
//
// Coweights of SL_n are stored only in the fundamental basis: entry i-1 of
// fund() is the coefficient of w_i (the i-th fundamental coweight). The star
// involution i -> n - i is never stored; it is applied inside the conversions
// below. In type A the two common readings of the labels agree:
//   lambda = sum_j lambda_j w_{j*}   and   lambda_j = <lambda*, alpha_j^vee>
// both give lambda_j = fund(n - j).
//
// Likewise m_i denotes the coefficient of alpha_{i*} = alpha_{n-i} in
// lambda - mu, so m_1 is the coefficient of the last simple coroot.

#include "agslice/dense.hpp"
#include "agslice/partition.hpp"
#include "agslice/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace agslice {

/// Raised when an operation's documented precondition does not hold. The
/// message names the violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Coweight {
 public:
  /// n >= 2; fund has length n - 1.
  Coweight(int n, IVector fund);
  Coweight(int n, const std::vector<int>& fund);

  static Coweight zero(int n);
  /// c * w_i.
  static Coweight fundamental(int n, int i, int c = 1);

  int n() const { return n_; }
  const IVector& fund() const { return fund_; }
  /// Coefficient of w_i, 1-based; zero outside 1..n-1.
  int coeff(int i) const { return i >= 1 && i < n_ ? fund_(i - 1) : 0; }
  bool dominant() const { return (fund_.array() >= 0).all(); }
  bool is_zero() const { return (fund_.array() == 0).all(); }

  friend Coweight operator+(const Coweight& a, const Coweight& b);
  friend Coweight operator-(const Coweight& a, const Coweight& b);
  friend Coweight operator*(int c, const Coweight& a);
  friend bool operator==(const Coweight& a, const Coweight& b) {
    return a.n_ == b.n_ && a.fund_ == b.fund_;
  }

 private:
  int n_;
  IVector fund_;
};

std::ostream& operator<<(std::ostream& os, const Coweight& c);

/// Rational vector in a simple coroot basis of SL_n. coeffs(i-1) is the
/// coefficient attached to label i; which basis (alpha_i or alpha_{i*}) is
/// fixed by the function that produced it.
struct CorootVector {
  int n = 0;
  QVector coeffs;

  /// Coefficient of label i, 1-based; 0 for i = 0 or i = n.
  Rational operator()(int i) const { return i >= 1 && i < n ? coeffs(i - 1) : Rational(0); }
  bool integral() const;
  bool nonnegative() const;
  /// Integer coefficients; throws PreconditionError if some entry is not integral.
  std::vector<long> as_integers() const;

  friend bool operator==(const CorootVector& a, const CorootVector& b) {
    return a.n == b.n && exactly_equal(a.coeffs, b.coeffs);
  }
};

/// Type A_{n-1} Cartan matrix: 2 on the diagonal, -1 on the off-diagonals.
IMatrix cartan_matrix(int n);

/// Exact inverse via Gauss-Jordan elimination.
QMatrix cartan_inverse(int n);

/// c with lambda = sum_i c_i alpha_i (no star twist).
CorootVector simple_coroot_coords(const Coweight& lambda);

/// m with lambda = sum_i m_i alpha_{i*}.
CorootVector fund_to_coroot(const Coweight& lambda);

/// Fundamental coordinates of sum_i c_i alpha_i.
QVector coroot_to_fund(int n, const QVector& c);

/// mu <= lambda: lambda - mu is a non-negative integral combination of
/// simple coroots. Throws std::invalid_argument on rank mismatch.
bool dominance_leq(const Coweight& mu, const Coweight& lambda);

/// Throws PreconditionError unless lambda is dominant and 0 < lambda <= n w_1.
void require_below_minuscule_cone(const Coweight& lambda);

/// The partition with part j repeated fund(j) times; a partition of n when
/// 0 < lambda <= n w_1 (checked).
Partition coweight_to_partition(const Coweight& lambda);

/// Inverse dictionary: v |- n with parts < n gives the coweight with fund(j)
/// equal to the multiplicity of j. The one-part partition (n) maps to zero.
Coweight coweight_from_partition(const Partition& v, int n);

/// m_{n-i} = u_1 + ... + u_i - i, u padded with zeros.
CorootVector m_from_partition(const Partition& u, int n);

/// k = m_1 as an integer; throws PreconditionError if lambda is not in the
/// coroot lattice or m_1 < 1.
int embedding_factor(const Coweight& lambda);

/// Coweight of SL_{kn} obtained by padding fund with zeros (w_i -> w_i).
Coweight tau_embed(const Coweight& lambda, int k);

struct TauIdentityReport {
  int k = 0;
  /// tau(lambda) in SL_{kn} fundamental coordinates.
  QVector lhs;
  /// sum_i m_{n-i} alpha_i + k w_n in SL_{kn} fundamental coordinates.
  QVector rhs;
  /// k w_n in SL_{kn} simple coroot coordinates, by inverse Cartan matrix.
  QVector k_wn_computed;
  /// The closed form j(k-1) for j < n and kn - j for j >= n.
  QVector k_wn_closed_form;
  bool identity_holds = false;
  bool expansion_holds = false;
  bool ok() const { return identity_holds && expansion_holds; }
};

/// Checks tau(lambda) = sum_i m_{n-i} alpha_i + k w_n with k = m_1, together
/// with the coroot expansion of k w_n. For k = 1, w_{kn} is read as zero.
TauIdentityReport tau_coroot_identity(const Coweight& lambda);

/// tau(lambda) <= k n w_1 in SL_{kn}, with k = m_1.
bool tau_bound_check(const Coweight& lambda);

struct PairingReport {
  int k = 0;
  /// mu~ = tau(lambda) - sum_i c_i alpha_{tau(i)} in SL_{kn} fundamental coordinates.
  IVector mu_tilde;
  /// <mu~, alpha_{tau(l)}> for l = 1..n-1.
  std::vector<long> lhs;
  /// <mu, alpha_l> for l = 1..n-1.
  std::vector<long> rhs;
  bool holds = false;
};

/// Compares the SL_{kn} pairing of mu~ with alpha_{tau(l)} against the SL_n
/// pairing of mu with alpha_l. Requires mu <= lambda, both dominant; k >= 1
/// is the size factor of the target group.
PairingReport shift_pairing_check(const Coweight& mu, const Coweight& lambda, int k);

/// All dominant coweights of SL_n with every fund coefficient in 0..bound.
std::vector<Coweight> dominant_coweights(int n, int bound);

}  // namespace agslice
