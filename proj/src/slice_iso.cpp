#include "agslice/slice_iso.hpp"

#include "agslice/nilpotent.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace agslice {

namespace {

std::string entry_name(Eigen::Index i, Eigen::Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string set_name(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string describe(const ValuationCondition& c) {
  std::ostringstream os;
  os << c.j << "x" << c.j << " minor rows " << set_name(c.rows) << " cols " << set_name(c.cols)
     << " has valuation " << (c.achieved ? std::to_string(*c.achieved) : "inf") << " < " << c.required;
  return os.str();
}

void require_size(const TMatrix& m, int n, const char* what) {
  if (m.rows() != m.cols() || m.rows() != n)
    throw std::invalid_argument(std::string(what) + " must be " + std::to_string(n) + " x " + std::to_string(n));
}

void require_cap(int size, int max_rank) {
  if (size > max_rank)
    throw PreconditionError("matrix size " + std::to_string(size) + " exceeds the rank cap " +
                            std::to_string(max_rank) + " (raise it explicitly to proceed)");
  if (size > 10) throw PreconditionError("minor enumeration is limited to size 10");
}

ValuationReport evaluate_conditions(const MinorTable<TPoly>& table, const std::vector<long>& bounds) {
  const int n = table.size();
  ValuationReport rep;
  rep.member = true;
  for (int j = 1; j <= n; ++j) {
    const auto sets = subsets(n, j);
    for (const IndexSet& c : sets)
      for (const IndexSet& d : sets) {
        const TPoly& v = table.at(c, d);
        ValuationCondition cond{j, c, d, bounds[j - 1], v.valuation(), false};
        cond.pass = valuation_at_least(v, cond.required);
        rep.member = rep.member && cond.pass;
        rep.conditions.push_back(std::move(cond));
      }
  }
  return rep;
}

Coweight k_omega_n(int n, int k) {
  return k == 1 ? Coweight::zero(n) : Coweight::fundamental(k * n, n, k);
}

TMatrix unipotent_inverse(const QMatrix& x) {
  // (I + t^{-1} X)^{-1} = sum_p (-t^{-1} X)^p for nilpotent X.
  const Eigen::Index n = x.rows();
  TMatrix out = zeros<TPoly>(n, n);
  QMatrix p = identity<Rational>(n);
  for (Eigen::Index e = 0; e < n; ++e) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (!p(i, j).is_zero()) out(i, j) += TPoly::monomial(p(i, j), -static_cast<int>(e));
    p = multiply(p, QMatrix(-x));
  }
  return out;
}

}  // namespace

IVector w0_cocharacter(const Coweight& mu) {
  if (!mu.dominant()) throw PreconditionError("coweight is not dominant");
  const int n = mu.n();
  long weighted = 0;
  for (int a = 1; a < n; ++a) weighted += static_cast<long>(a) * mu.coeff(a);
  if (weighted % n != 0) throw PreconditionError("coweight is not in the coroot lattice");
  std::vector<long> p(n);
  p[n - 1] = -weighted / n;
  for (int a = n - 1; a >= 1; --a) p[a - 1] = p[a] + mu.coeff(a);
  IVector out(n);
  for (int j = 0; j < n; ++j) out(j) = static_cast<int>(p[n - 1 - j]);
  return out;
}

TMatrix t_power_diag(const IVector& a) {
  const Eigen::Index n = a.size();
  TMatrix out = zeros<TPoly>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = TPoly::monomial(Rational(1), a(i));
  return out;
}

ShapeReport w_mu_shape_check(const TMatrix& m, const Coweight& mu) {
  const int n = mu.n();
  require_size(m, n, "matrix");
  const IVector a = w0_cocharacter(mu);
  ShapeReport rep;
  rep.entries_ok = true;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      TPoly g = m(i, j).times_t_power(-a(j));
      if (i == j) g -= TPoly(1);
      const int bound = std::min(-1, a(i) - a(j) - 1);
      const auto top = g.top_exponent();
      if (top && *top > bound) {
        rep.entries_ok = false;
        rep.diagnostics.push_back("entry " + entry_name(i, j) + " has a t^" + std::to_string(*top + a(j)) +
                                  " term; allowed up to t^" + std::to_string(bound + a(j)) +
                                  (i == j ? " beyond the leading t^" + std::to_string(a(j)) : ""));
      }
    }
  const TPoly det = determinant(m);
  rep.det_ok = det == TPoly(1);
  if (!rep.det_ok) {
    std::ostringstream os;
    os << "determinant is " << det << ", not 1";
    rep.diagnostics.push_back(os.str());
  }
  return rep;
}

std::vector<ValuationCondition> ValuationReport::failures() const {
  std::vector<ValuationCondition> out;
  for (const auto& c : conditions)
    if (!c.pass) out.push_back(c);
  return out;
}

std::vector<long> minor_bounds(const Coweight& lambda) {
  const int n = lambda.n();
  const CorootVector c = simple_coroot_coords(lambda);
  if (!c.integral()) throw PreconditionError("lambda is not in the coroot lattice");
  std::vector<long> out(n);
  for (int j = 1; j <= n; ++j) out[j - 1] = -c(n - j).to_long();
  return out;
}

ValuationReport slice_conditions(const TMatrix& m, const Coweight& lambda, const Coweight& mu, int max_rank) {
  const int n = lambda.n();
  if (mu.n() != n) throw std::invalid_argument("lambda and mu have different ranks");
  require_size(m, n, "matrix");
  require_cap(n, max_rank);
  if (!lambda.dominant() || !mu.dominant()) throw PreconditionError("lambda and mu must be dominant");
  if (!dominance_leq(mu, lambda)) throw PreconditionError("mu <= lambda fails");
  const ShapeReport shape = w_mu_shape_check(m, mu);
  if (!shape.entries_ok) throw PreconditionError("matrix is not of the required shape: " + shape.diagnostics.front());
  return evaluate_conditions(MinorTable<TPoly>(m), minor_bounds(lambda));
}

RigidityReport rigidity_check(const TMatrix& m, int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("rigidity_check needs k, n >= 1");
  require_size(m, k * n, "matrix");
  const Eigen::Index a_size = static_cast<Eigen::Index>(k - 1) * n;
  const Eigen::Index size = m.rows();
  const TPoly t_inv = TPoly::monomial(Rational(1), -1);
  RigidityReport rep;
  rep.one_by_one_ok = true;
  rep.forced_form = true;
  auto block = [a_size](Eigen::Index i, Eigen::Index j) {
    return i < a_size ? (j < a_size ? "a" : "b") : (j < a_size ? "c" : "d");
  };
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) {
      const TPoly& e = m(i, j);
      if (!valuation_at_least(e, -1)) {
        rep.one_by_one_ok = false;
        rep.diagnostics.push_back("entry " + entry_name(i, j) + " in block " + block(i, j) + " has valuation " +
                                  std::to_string(*e.valuation()) + " < -1");
      }
      if (i >= a_size && j >= a_size) continue;
      const bool expected = i < a_size && j < a_size && i == j ? e == t_inv : e.is_zero();
      if (!expected) {
        rep.forced_form = false;
        rep.diagnostics.push_back("entry " + entry_name(i, j) + " in block " + block(i, j) +
                                  (i == j && i < a_size ? " differs from t^-1" : " is nonzero"));
      }
    }
  return rep;
}

EmbeddingReport verify_embedding(const TMatrix& g, const Coweight& lambda, int max_rank) {
  const int n = lambda.n();
  require_size(g, n, "g");
  const int k = embedding_factor(lambda);
  require_cap(k * n, max_rank);
  const ValuationReport source = slice_conditions(g, lambda, Coweight::zero(n), max_rank);
  if (!source.member) throw PreconditionError("g is not a slice point: " + describe(source.failures().front()));

  EmbeddingReport rep;
  rep.k = k;
  rep.image = block_embed(g, k);
  const Coweight mu = k_omega_n(n, k);
  const Coweight target_lambda = tau_embed(lambda, k);
  rep.shape = w_mu_shape_check(rep.image, mu);
  rep.rigidity = rigidity_check(rep.image, k, n);

  const MinorTable<TPoly> image_minors(rep.image);
  rep.target = evaluate_conditions(image_minors, minor_bounds(target_lambda));

  const MinorTable<TPoly> g_minors(g);
  const int size = k * n;
  const int offset = (k - 1) * n;
  const std::uint32_t low = (1u << offset) - 1u;
  rep.identity_holds = true;
  for (int j = 1; j <= size; ++j) {
    const auto sets = subsets(size, j);
    for (const IndexSet& cs : sets)
      for (const IndexSet& ds : sets) {
        const std::uint32_t c = to_mask(cs);
        const std::uint32_t d = to_mask(ds);
        const TPoly& value = image_minors.at(c, d);
        TPoly expected;
        if ((c & low) == (d & low)) {
          const int i = std::popcount(c >> offset);
          expected = g_minors.at(c >> offset, d >> offset).times_t_power(k * i - j);
        }
        if (!(value == expected)) {
          rep.identity_holds = false;
          if (rep.identity_failures.size() < 20)
            rep.identity_failures.push_back("minor rows " + set_name(cs) + " cols " + set_name(ds));
        }
      }
  }
  return rep;
}

ConverseReport converse_check(const TMatrix& m, const Coweight& lambda, int max_rank) {
  const int n = lambda.n();
  const int k = embedding_factor(lambda);
  require_size(m, k * n, "matrix");
  ConverseReport rep;
  rep.target = slice_conditions(m, tau_embed(lambda, k), k_omega_n(n, k), max_rank);
  rep.rigidity = rigidity_check(m, k, n);
  if (rep.target.member && rep.rigidity.forced_form) {
    const Eigen::Index off = static_cast<Eigen::Index>(k - 1) * n;
    TMatrix d(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) d(i, j) = m(off + i, off + j).times_t_power(1 - k);
    rep.source = slice_conditions(d, lambda, Coweight::zero(n), max_rank);
  }
  rep.holds = !rep.target.member || (rep.rigidity.forced_form && rep.source && rep.source->member);
  return rep;
}

InequalityReport proof_inequalities(const Coweight& lambda) {
  if (!lambda.dominant()) throw PreconditionError("lambda is not dominant");
  const int n = lambda.n();
  InequalityReport rep;
  rep.k = embedding_factor(lambda);
  rep.m = fund_to_coroot(lambda).as_integers();
  auto m = [&rep, n](int i) -> long { return i <= 0 || i >= n ? 0 : rep.m[i - 1]; };
  const long k = rep.k;
  rep.m_bounded = rep.increments_bounded = rep.telescoped = true;
  for (int i = 1; i < n; ++i)
    if (m(i) > k * i) {
      rep.m_bounded = false;
      rep.failures.push_back("m_" + std::to_string(i) + " > k*" + std::to_string(i));
    }
  for (int l = 0; l < n; ++l)
    if (m(l + 1) - m(l) > m(1)) {
      rep.increments_bounded = false;
      rep.failures.push_back("m_" + std::to_string(l + 1) + " - m_" + std::to_string(l) + " > m_1");
    }
  for (int i = 0; i <= n; ++i)
    for (int l = 0; l <= i; ++l)
      if (m(i) - m(l) > k * (i - l)) {
        rep.telescoped = false;
        rep.failures.push_back("m_" + std::to_string(i) + " - m_" + std::to_string(l) + " > k*(" +
                               std::to_string(i) + "-" + std::to_string(l) + ")");
      }
  return rep;
}

std::optional<std::vector<SlicePiece>> slice_pieces(const Coweight& lambda) {
  const int n = lambda.n();
  if (!lambda.dominant()) throw PreconditionError("lambda is not dominant");
  std::vector<SlicePiece> candidates;
  for (const Partition& v : partitions_of(n)) {
    if (v.length() == 1) continue;
    const Coweight w = coweight_from_partition(v, n);
    candidates.push_back({w, false});
  }
  const std::size_t plain = candidates.size();
  for (std::size_t i = 0; i < plain; ++i) {
    const IVector& f = candidates[i].weight.fund();
    const Coweight star(n, IVector(f.reverse()));
    const bool duplicate = std::any_of(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(plain),
                                       [&star](const SlicePiece& p) { return p.weight == star; });
    if (!duplicate) candidates.push_back({star, true});
  }

  std::map<std::vector<int>, bool> dead;
  std::vector<SlicePiece> chosen;
  auto key = [](const Coweight& c) { return std::vector<int>(c.fund().begin(), c.fund().end()); };
  std::function<bool(const Coweight&, std::size_t)> search = [&](const Coweight& rest, std::size_t first) {
    if (rest.is_zero()) return true;
    std::vector<int> kk = key(rest);
    kk.push_back(static_cast<int>(first));
    if (dead.count(kk)) return false;
    for (std::size_t c = first; c < candidates.size(); ++c) {
      const Coweight next = rest - candidates[c].weight;
      if (!next.dominant()) continue;
      chosen.push_back(candidates[c]);
      if (search(next, c)) return true;
      chosen.pop_back();
    }
    dead[kk] = true;
    return false;
  };
  if (!search(lambda, 0)) return std::nullopt;
  return chosen;
}

TMatrix sample_slice_point(const Coweight& lambda, std::uint64_t seed) {
  const int n = lambda.n();
  const auto pieces = slice_pieces(lambda);
  if (!pieces) throw PreconditionError("no factorization of lambda into pieces below n w_1 or their stars");
  std::mt19937_64 rng(seed);
  TMatrix g = identity<TPoly>(n);
  const auto all = partitions_of(n);
  for (const SlicePiece& piece : *pieces) {
    const Coweight base = piece.starred ? Coweight(n, IVector(piece.weight.fund().reverse())) : piece.weight;
    const Partition u = conjugate(coweight_to_partition(base));
    std::vector<Partition> below;
    for (const Partition& p : all)
      if (dominance_leq(p, u)) below.push_back(p);
    // The top orbit is drawn half of the time, smaller ones share the rest.
    const Partition& pick = rng() % 2 == 0 ? u : below[rng() % below.size()];
    const QMatrix x = sample_nilpotent(pick, rng());
    g = multiply(g, piece.starred ? unipotent_inverse(x) : g_from_nilpotent(x));
  }
  return g;
}

}  // namespace agslice
