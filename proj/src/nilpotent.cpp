#include "agslice/nilpotent.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace agslice {

namespace {

void require_square(const QMatrix& x) {
  if (x.rows() != x.cols() || x.rows() == 0) throw std::invalid_argument("expected a non-empty square matrix");
}

}  // namespace

bool is_nilpotent(const QMatrix& x) {
  require_square(x);
  return all_zero(power(x, static_cast<int>(x.rows())));
}

Partition jordan_type(const QMatrix& x) {
  require_square(x);
  const int n = static_cast<int>(x.rows());
  std::vector<long> ranks{n};
  QMatrix p = identity<Rational>(n);
  for (int k = 1; k <= n; ++k) {
    p = multiply(p, x);
    ranks.push_back(static_cast<long>(rank(p)));
  }
  if (ranks.back() != 0) throw std::invalid_argument("matrix is not nilpotent");
  std::vector<int> dual;
  for (int k = 1; k <= n; ++k)
    if (ranks[k - 1] > ranks[k]) dual.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
  return conjugate(Partition(dual));
}

bool closure_leq(const Partition& a, const Partition& b) { return dominance_leq(a, b); }

bool rank_membership(const QMatrix& x, const Partition& u) {
  require_square(x);
  const int n = static_cast<int>(x.rows());
  if (u.size() != n)
    throw std::invalid_argument("partition of " + std::to_string(u.size()) + " for a " + std::to_string(n) +
                                " x " + std::to_string(n) + " matrix");
  QMatrix p = identity<Rational>(n);
  for (int k = 1; k <= n; ++k) {
    p = multiply(p, x);
    long bound = 0;
    for (int part : u.parts()) bound += std::max(part - k, 0);
    if (static_cast<long>(rank(p)) > bound) return false;
  }
  return all_zero(p);
}

QMatrix jordan_matrix(const Partition& u) {
  const int n = u.size();
  QMatrix j = zeros<Rational>(n, n);
  int start = 0;
  for (int part : u.parts()) {
    for (int i = 0; i + 1 < part; ++i) j(start + i, start + i + 1) = Rational(1);
    start += part;
  }
  return j;
}

QMatrix sample_nilpotent(const Partition& u, std::uint64_t seed) {
  const int n = u.size();
  if (n < 1) throw std::invalid_argument("empty partition");
  QMatrix g = identity<Rational>(n);
  QMatrix g_inv = identity<Rational>(n);
  if (n > 1) {
    std::mt19937_64 rng(seed);
    for (int step = 0; step < 3 * n; ++step) {
      const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      if (b >= a) ++b;
      const long c = static_cast<long>(rng() % 5) - 2;
      if (c == 0) continue;
      // g <- g (I + c E_ab), g^{-1} <- (I - c E_ab) g^{-1}
      g.col(b) += Rational(c) * g.col(a);
      g_inv.row(a) -= Rational(c) * g_inv.row(b);
    }
  }
  return multiply(multiply(g, jordan_matrix(u)), g_inv);
}

}  // namespace agslice
