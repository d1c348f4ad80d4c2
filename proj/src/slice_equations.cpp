#include "agslice/slice_equations.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace agslice {

std::ostream& operator<<(std::ostream& os, const SymbolicPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    os << (first ? "" : " + ") << c;
    first = false;
    for (const auto& [v, e] : m) {
      os << "*x" << v.row << v.col;
      if (e > 1) os << "^" << e;
    }
  }
  return os;
}

namespace {

void check_sets(int n, const IndexSet& rows, const IndexSet& cols) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  if (rows.size() != cols.size() || rows.empty())
    throw std::invalid_argument("row and column sets must have equal positive size");
  validate_index_set(rows, n, "row");
  validate_index_set(cols, n, "column");
}

int position(const IndexSet& s, int v) {
  return static_cast<int>(std::find(s.begin(), s.end(), v) - s.begin()) + 1;
}

IndexSet without(const IndexSet& s, const IndexSet& r) {
  IndexSet out;
  for (int v : s)
    if (std::find(r.begin(), r.end(), v) == r.end()) out.push_back(v);
  return out;
}

IndexSet full_set(int n) {
  IndexSet s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

std::vector<long> m_integers(const Coweight& lambda) {
  return fund_to_coroot(lambda).as_integers();
}

}  // namespace

SymbolicPoly minor_poly(int n, const IndexSet& rows, const IndexSet& cols) {
  check_sets(n, rows, cols);
  const auto k = static_cast<Eigen::Index>(rows.size());
  Matrix<SymbolicPoly> sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = SymbolicPoly::variable(Entry{rows[a], cols[b]});
  return determinant_cofactor(sub);
}

SymbolicPoly f_poly(int n, const IndexSet& rows, const IndexSet& cols, int s) {
  check_sets(n, rows, cols);
  using U = UniPoly<SymbolicPoly>;
  const auto k = static_cast<Eigen::Index>(rows.size());
  Matrix<U> sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) {
      U entry = U::monomial(SymbolicPoly::variable(Entry{rows[a], cols[b]}), 1);
      if (rows[a] == cols[b]) entry += U(SymbolicPoly(1));
      sub(a, b) = entry;
    }
  return determinant_cofactor(sub).coeff(s);
}

SymbolicPoly f_poly_minor_sum(int n, const IndexSet& rows, const IndexSet& cols, int s) {
  check_sets(n, rows, cols);
  const int k = static_cast<int>(rows.size());
  if (s < 0 || s > k) return SymbolicPoly();
  IndexSet common;
  std::set_intersection(rows.begin(), rows.end(), cols.begin(), cols.end(), std::back_inserter(common));
  const int drop = k - s;
  if (drop > static_cast<int>(common.size())) return SymbolicPoly();
  SymbolicPoly total;
  for (const IndexSet& pick : subsets(static_cast<int>(common.size()), drop)) {
    IndexSet r;
    int sign_exp = 0;
    for (int idx : pick) {
      const int v = common[idx - 1];
      r.push_back(v);
      sign_exp += position(rows, v) + position(cols, v);
    }
    SymbolicPoly term = s == 0 ? SymbolicPoly(1) : minor_poly(n, without(rows, r), without(cols, r));
    total += sign_exp % 2 == 0 ? term : -term;
  }
  return total;
}

Rational evaluate(const SymbolicPoly& f, const QMatrix& x) {
  return f.evaluate([&x](const Entry& e) -> Rational {
    if (e.row < 1 || e.col < 1 || e.row > x.rows() || e.col > x.cols())
      throw std::invalid_argument("polynomial variable outside the matrix");
    return x(e.row - 1, e.col - 1);
  });
}

SymbolicPoly GeneratorSet::w_poly(const MinorCondition& c) const {
  if (c.trivial()) return SymbolicPoly();
  return f_poly(n, c.rows, c.cols, c.order);
}

SymbolicPoly GeneratorSet::u0_poly(int p) const {
  const IndexSet all = full_set(n);
  return f_poly(n, all, all, p);
}

GeneratorSet ideal_generators(int n, const Coweight& lambda) {
  if (lambda.n() != n)
    throw std::invalid_argument("rank mismatch: n = " + std::to_string(n) + " but lambda is for SL_" +
                                std::to_string(lambda.n()));
  require_below_minuscule_cone(lambda);
  GeneratorSet gs{n, lambda, m_integers(lambda), {}, {}};
  for (int k = 1; k < n; ++k) {
    const long mk = gs.m[k - 1];
    const auto sets = subsets(n, k);
    for (const IndexSet& c : sets)
      for (const IndexSet& d : sets)
        for (long s = mk + 1; s <= n; ++s) gs.w_part.push_back(MinorCondition{c, d, static_cast<int>(s)});
  }
  for (int p = 1; p <= n; ++p) gs.u0_orders.push_back(p);
  return gs;
}

MembershipResult membership(const QMatrix& x, const Coweight& lambda) {
  const int n = lambda.n();
  if (x.rows() != n || x.cols() != n)
    throw std::invalid_argument("matrix must be " + std::to_string(n) + " x " + std::to_string(n));
  require_below_minuscule_cone(lambda);
  const std::vector<long> m = m_integers(lambda);

  const MinorTable<TPoly> table(g_from_nilpotent(x));
  MembershipResult res;
  for (int k = 1; k < n; ++k) {
    const auto sets = subsets(n, k);
    for (const IndexSet& c : sets)
      for (const IndexSet& d : sets) {
        const TPoly& minor_value = table.at(c, d);
        for (long s = m[k - 1] + 1; s <= k; ++s) {
          const Rational v = minor_value.coeff(static_cast<int>(s));
          if (!v.is_zero()) res.violations.push_back({false, MinorCondition{c, d, static_cast<int>(s)}, v});
        }
      }
  }
  const IndexSet all = full_set(n);
  const TPoly& det = table.at(all, all);
  for (int p = 1; p <= n; ++p) {
    const Rational v = det.coeff(p);
    if (!v.is_zero()) res.violations.push_back({true, MinorCondition{all, all, p}, v});
  }
  res.member = res.violations.empty();
  return res;
}

SymbolicPoly highest_weight_vector(int n, int k, int p) {
  if (k < 0 || k >= n) throw std::invalid_argument("highest weight vector needs 0 <= k < n");
  IndexSet c0;
  IndexSet d0;
  for (int i = k + 1; i <= n; ++i) c0.push_back(i);
  for (int j = 1; j <= n - k; ++j) d0.push_back(j);
  return f_poly(n, c0, d0, p);
}

std::vector<WeymanGenerator> weyman_generators(int n, const Coweight& lambda) {
  if (lambda.n() != n) throw std::invalid_argument("rank mismatch between n and lambda");
  require_below_minuscule_cone(lambda);
  const std::vector<long> m = m_integers(lambda);
  std::vector<WeymanGenerator> out;
  for (int i = 1; i < n; ++i)
    for (int p = 1; p <= n; ++p) {
      if (i > std::min(p, n - p)) continue;
      if (p <= m[n - i - 1]) continue;
      IndexSet c0;
      IndexSet d0;
      for (int a = i + 1; a <= n; ++a) c0.push_back(a);
      for (int b = 1; b <= n - i; ++b) d0.push_back(b);
      out.push_back({i, p, MinorCondition{c0, d0, p}, f_poly(n, c0, d0, p)});
    }
  const IndexSet all = full_set(n);
  for (int p = 1; p <= n; ++p) out.push_back({0, p, MinorCondition{all, all, p}, f_poly(n, all, all, p)});
  return out;
}

IVector torus_weight(int n, const IndexSet& rows, const IndexSet& cols) {
  validate_index_set(rows, n, "row");
  validate_index_set(cols, n, "column");
  IVector w = IVector::Zero(n);
  for (int i : rows) w(i - 1) -= 1;
  for (int j : cols) w(j - 1) += 1;
  return w;
}

IVector monomial_weight(int n, const SymbolicPoly::Monomial& m) {
  IVector w = IVector::Zero(n);
  for (const auto& [v, e] : m) {
    w(v.row - 1) -= e;
    w(v.col - 1) += e;
  }
  return w;
}

SymbolicPoly raising_action(const SymbolicPoly& f, int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("raising operator index out of range");
  SymbolicPoly out;
  // (A x)_{a,i+1} = A_{a,i}  and  (x A)_{i,b} = A_{i+1,b}  for x = E_{i,i+1}.
  for (int a = 1; a <= n; ++a) {
    const SymbolicPoly d = f.derivative(Entry{a, i + 1});
    if (!d.is_zero()) out += d * SymbolicPoly::variable(Entry{a, i});
  }
  for (int b = 1; b <= n; ++b) {
    const SymbolicPoly d = f.derivative(Entry{i, b});
    if (!d.is_zero()) out -= d * SymbolicPoly::variable(Entry{i + 1, b});
  }
  return out;
}

bool raising_annihilation_check(const SymbolicPoly& f, int n) {
  for (int i = 1; i < n; ++i)
    if (!raising_action(f, n, i).is_zero()) return false;
  return true;
}

long weyl_dimension(const std::vector<int>& hw) {
  Rational d(1);
  const int n = static_cast<int>(hw.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) d *= Rational(hw[a] - hw[b] + b - a, b - a);
  return d.to_long();
}

std::vector<int> alpha_weight(int n, int k) {
  if (k < 0 || 2 * k > n) throw std::invalid_argument("alpha_k needs 0 <= 2k <= n");
  std::vector<int> w(n, 0);
  for (int i = 0; i < k; ++i) {
    w[i] = 1;
    w[n - 1 - i] = -1;
  }
  return w;
}

long span_dimension(const std::vector<SymbolicPoly>& polys) {
  std::map<SymbolicPoly::Monomial, Eigen::Index> column;
  for (const auto& f : polys)
    for (const auto& [m, c] : f.terms()) column.try_emplace(m, 0);
  Eigen::Index next = 0;
  for (auto& [m, idx] : column) idx = next++;
  QMatrix coeffs = zeros<Rational>(static_cast<Eigen::Index>(polys.size()), next);
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r].terms()) coeffs(static_cast<Eigen::Index>(r), column.at(m)) = c;
  return static_cast<long>(rank(coeffs));
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SpanDimensionReport span_dimension_report(int n, int k, int p) {
  if (n < 1 || k < 1 || k > n || p < 1 || p > n)
    throw std::invalid_argument("span_dimension_report needs 1 <= k, p <= n");
  SpanDimensionReport rep;
  rep.n = n;
  rep.k = k;
  rep.p = p;

  std::vector<SymbolicPoly> w;
  const auto sets_k = subsets(n, k);
  for (const IndexSet& c : sets_k)
    for (const IndexSet& d : sets_k) w.push_back(f_poly(n, c, d, p));
  rep.dim_w = span_dimension(w);

  std::vector<SymbolicPoly> mp;
  const auto sets_p = subsets(n, p);
  for (const IndexSet& c : sets_p)
    for (const IndexSet& d : sets_p) mp.push_back(minor_poly(n, c, d));
  rep.dim_mp = span_dimension(mp);

  long total = 0;
  for (int j = 0; j <= std::min(p, n - p); ++j) {
    rep.schur_dims.push_back(weyl_dimension(alpha_weight(n, j)));
    total += rep.schur_dims.back();
  }
  rep.mp_identity = rep.dim_mp == binomial(n, p) * binomial(n, p) && rep.dim_mp == total;

  // Subset sums of schur_dims (at most min(p, n-p) + 1 <= n/2 + 1 entries).
  const std::size_t count = rep.schur_dims.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << count) && !rep.partial_sum; ++mask) {
    long s = 0;
    for (std::size_t j = 0; j < count; ++j)
      if (mask & (std::size_t{1} << j)) s += rep.schur_dims[j];
    rep.partial_sum = s == rep.dim_w;
  }
  const int j = n - k;
  rep.inclusion_consistent =
      j > std::min(p, n - p) || rep.dim_w >= rep.schur_dims[static_cast<std::size_t>(j)];
  return rep;
}

}  // namespace agslice
