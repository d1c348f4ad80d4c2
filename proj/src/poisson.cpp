#include "agslice/poisson.hpp"

#include "agslice/nilpotent.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace agslice {

std::ostream& operator<<(std::ostream& os, const PoissonPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    os << (first ? "" : " + ") << c;
    first = false;
    for (const auto& [v, e] : m) {
      os << "*d_" << v.i << "_" << v.j << "_" << v.r;
      if (e > 1) os << "^" << e;
    }
  }
  return os;
}

PoissonPoly coord(int i, int j, int r) {
  if (r < 0) throw std::invalid_argument("coordinate order must be non-negative");
  if (r == 0) return PoissonPoly(i == j ? 1 : 0);
  return PoissonPoly::variable(CoordFn{i, j, r});
}

Rational evaluate_at(const PoissonPoly& f, const std::vector<QMatrix>& xs) {
  return f.evaluate([&xs](const CoordFn& c) -> Rational {
    if (c.r < 1 || c.r > static_cast<int>(xs.size())) return Rational(0);
    const QMatrix& x = xs[c.r - 1];
    if (c.i < 1 || c.j < 1 || c.i > x.rows() || c.j > x.cols())
      throw std::invalid_argument("coordinate outside the matrix");
    return x(c.i - 1, c.j - 1);
  });
}

Rational evaluate_at(const PoissonPoly& f, const QMatrix& x) { return evaluate_at(f, std::vector<QMatrix>{x}); }

std::string to_string(InvariantForm f) { return f == InvariantForm::trace ? "trace" : "killing"; }

InvariantForm parse_form(const std::string& s) {
  if (s == "trace") return InvariantForm::trace;
  if (s == "killing") return InvariantForm::killing;
  throw std::invalid_argument("unknown invariant form '" + s + "' (expected trace or killing)");
}

Rational DualBases::pairing(const QMatrix& x, const QMatrix& y) const {
  Rational tr(0);
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index k = 0; k < x.cols(); ++k)
      if (!x(i, k).is_zero() && !y(k, i).is_zero()) tr += x(i, k) * y(k, i);
  return scale * tr;
}

DualBases dual_bases(int n, InvariantForm form) {
  if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
  DualBases db;
  db.n = n;
  db.form = form;
  db.scale = form == InvariantForm::trace ? Rational(1) : Rational(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        QMatrix e = zeros<Rational>(n, n);
        e(i, j) = Rational(1);
        db.basis.push_back(e);
      }
  for (int i = 0; i + 1 < n; ++i) {
    QMatrix h = zeros<Rational>(n, n);
    h(i, i) = Rational(1);
    h(i + 1, i + 1) = Rational(-1);
    db.basis.push_back(h);
  }
  const auto dim = static_cast<Eigen::Index>(db.basis.size());
  QMatrix gram(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) gram(a, b) = db.pairing(db.basis[a], db.basis[b]);
  const QMatrix inv = inverse(gram);
  for (Eigen::Index a = 0; a < dim; ++a) {
    QMatrix d = zeros<Rational>(n, n);
    for (Eigen::Index c = 0; c < dim; ++c)
      if (!inv(a, c).is_zero()) d += inv(a, c) * db.basis[c];
    db.dual.push_back(d);
  }
  return db;
}

PoissonBracket::PoissonBracket(int n, InvariantForm form) : n_(n), bases_(dual_bases(n, form)) {}

PoissonPoly PoissonBracket::rhs(const CoordFn& a, const CoordFn& b) const {
  PoissonPoly total;
  for (std::size_t x = 0; x < bases_.basis.size(); ++x) {
    const QMatrix& j = bases_.basis[x];
    const QMatrix& jd = bases_.dual[x];
    PoissonPoly l1, l2, r1, r2;
    for (int q = 1; q <= n_; ++q) {
      // J e_i^* = -sum_q J_{iq} e_q^*,  J e_j = sum_q J_{qj} e_q
      if (!j(a.i - 1, q - 1).is_zero()) l1 -= coord(q, a.j, a.r).scaled(j(a.i - 1, q - 1));
      if (!jd(b.i - 1, q - 1).is_zero()) l2 -= coord(q, b.j, b.r).scaled(jd(b.i - 1, q - 1));
      if (!j(q - 1, a.j - 1).is_zero()) r1 += coord(a.i, q, a.r).scaled(j(q - 1, a.j - 1));
      if (!jd(q - 1, b.j - 1).is_zero()) r2 += coord(b.i, q, b.r).scaled(jd(q - 1, b.j - 1));
    }
    total += l1 * l2;
    total -= r1 * r2;
  }
  return total;
}

const PoissonPoly& PoissonBracket::bracket(const CoordFn& a, const CoordFn& b) {
  static const PoissonPoly zero;
  if (a.r == 0 || b.r == 0) return zero;
  const auto key = std::make_pair(a, b);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  PoissonPoly value = bracket(CoordFn{a.i, a.j, a.r + 1}, CoordFn{b.i, b.j, b.r - 1});
  value -= rhs(a, CoordFn{b.i, b.j, b.r - 1});
  return memo_.emplace(key, std::move(value)).first->second;
}

PoissonPoly PoissonBracket::bracket_other_path(const CoordFn& a, const CoordFn& b) const {
  PoissonPoly value;
  if (a.r == 0 || b.r == 0) return value;
  // Walk {A^{(r)}, B^{(s)}} down to {A^{(0)}, B^{(r+s)}} = 0.
  for (int t = a.r - 1; t >= 0; --t) value += rhs(CoordFn{a.i, a.j, t}, CoordFn{b.i, b.j, a.r + b.r - 1 - t});
  return value;
}

PoissonPoly PoissonBracket::bracket_poly(const PoissonPoly& f, const PoissonPoly& g) {
  PoissonPoly out;
  const auto fv = f.variables();
  const auto gv = g.variables();
  for (const CoordFn& u : fv) {
    const PoissonPoly du = f.derivative(u);
    for (const CoordFn& v : gv) {
      const PoissonPoly& uv = bracket(u, v);
      if (uv.is_zero()) continue;
      out += du * g.derivative(v) * uv;
    }
  }
  return out;
}

PoissonPoly minor_coefficient(int n, const IndexSet& rows, const IndexSet& cols, int s) {
  if (rows.size() != cols.size() || rows.empty()) throw std::invalid_argument("row and column sets differ in size");
  validate_index_set(rows, n, "row");
  validate_index_set(cols, n, "column");
  if (s < 0) return PoissonPoly();
  using U = UniPoly<PoissonPoly>;
  const auto k = static_cast<Eigen::Index>(rows.size());
  Matrix<U> sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) {
      U e(coord(rows[a], cols[b], 0));
      for (int r = 1; r <= s; ++r) e += U::monomial(coord(rows[a], cols[b], r), r);
      sub(a, b) = e;
    }
  return determinant_cofactor(sub).coeff(s);
}

IdealInCoordinates ideal_in_coordinates(const Coweight& lambda, int max_order) {
  require_below_minuscule_cone(lambda);
  IdealInCoordinates ideal;
  const int n = lambda.n();
  ideal.n = n;
  ideal.lambda = lambda;
  ideal.max_order = max_order > 0 ? max_order : n + 1;
  const std::vector<long> m = fund_to_coroot(lambda).as_integers();
  std::set<CoordFn> vars;
  for (int k = 1; k <= n; ++k) {
    const long mk = k < n ? m[k - 1] : 0;
    const auto sets = subsets(n, k);
    for (const IndexSet& c : sets)
      for (const IndexSet& d : sets)
        for (long s = mk + 1; s <= ideal.max_order; ++s) {
          PoissonPoly p = minor_coefficient(n, c, d, static_cast<int>(s));
          if (p.is_zero()) continue;
          for (const CoordFn& v : p.variables()) vars.insert(v);
          ideal.labels.push_back(MinorCondition{c, d, static_cast<int>(s)});
          ideal.polys.push_back(std::move(p));
        }
  }
  ideal.variables.assign(vars.begin(), vars.end());
  for (const PoissonPoly& p : ideal.polys) {
    std::vector<PoissonPoly> grad;
    grad.reserve(ideal.variables.size());
    for (const CoordFn& v : ideal.variables) grad.push_back(p.derivative(v));
    ideal.gradients.push_back(std::move(grad));
  }
  return ideal;
}

namespace {

std::string label_text(const MinorCondition& c) {
  std::ostringstream os;
  os << "D^(" << c.order << ")_{";
  for (std::size_t i = 0; i < c.rows.size(); ++i) os << (i ? "," : "") << c.rows[i];
  os << "},{";
  for (std::size_t i = 0; i < c.cols.size(); ++i) os << (i ? "," : "") << c.cols[i];
  os << "}";
  return os.str();
}

std::vector<std::vector<Rational>> gradient_values(const IdealInCoordinates& ideal, const QMatrix& x) {
  std::vector<std::vector<Rational>> out;
  out.reserve(ideal.polys.size());
  for (const auto& grad : ideal.gradients) {
    std::vector<Rational> row;
    row.reserve(grad.size());
    for (const PoissonPoly& d : grad) row.push_back(evaluate_at(d, x));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

VanishingReport ideal_vanishing_check(const IdealInCoordinates& ideal, PoissonBracket& pb, std::uint64_t seed,
                                      int samples) {
  if (pb.n() != ideal.n) throw std::invalid_argument("bracket and ideal have different ranks");
  if (samples < 1) throw std::invalid_argument("at least one sample is required");
  const int n = ideal.n;
  VanishingReport rep;
  rep.n = n;
  rep.lambda = ideal.lambda;
  rep.seed = seed;
  rep.samples = samples;
  rep.generators = static_cast<int>(ideal.polys.size());
  rep.all_zero = true;

  std::mt19937_64 rng(seed);
  const Partition u = conjugate(coweight_to_partition(ideal.lambda));
  std::vector<Partition> below;
  for (const Partition& p : partitions_of(n))
    if (dominance_leq(p, u)) below.push_back(p);
  const std::size_t nv = ideal.variables.size();

  for (int sample = 0; sample < samples; ++sample) {
    const Partition& pick = rng() % 2 == 0 ? u : below[rng() % below.size()];
    const QMatrix x = sample_nilpotent(pick, rng());
    const auto grads = gradient_values(ideal, x);
    std::vector<std::vector<Rational>> table(nv, std::vector<Rational>(nv));
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t w = 0; w < nv; ++w) table[v][w] = evaluate_at(pb.bracket(ideal.variables[v], ideal.variables[w]), x);
    for (std::size_t g2 = 0; g2 < grads.size(); ++g2) {
      std::vector<Rational> col(nv, Rational(0));
      for (std::size_t w = 0; w < nv; ++w) {
        if (grads[g2][w].is_zero()) continue;
        for (std::size_t v = 0; v < nv; ++v)
          if (!table[v][w].is_zero()) col[v] += table[v][w] * grads[g2][w];
      }
      for (std::size_t g1 = 0; g1 < grads.size(); ++g1) {
        Rational value(0);
        for (std::size_t v = 0; v < nv; ++v)
          if (!grads[g1][v].is_zero() && !col[v].is_zero()) value += grads[g1][v] * col[v];
        ++rep.pairs_checked;
        if (!value.is_zero() && rep.all_zero) {
          rep.all_zero = false;
          rep.first_nonzero = "{" + label_text(ideal.labels[g1]) + ", " + label_text(ideal.labels[g2]) +
                              "} = " + value.str() + " at sample " + std::to_string(sample);
        }
      }
    }
  }

  // Off the zero locus: a random point with all orders up to max_order where
  // some generator is nonzero. Degenerate draws (e.g. scalar higher
  // coefficients, where every bracket with D^{(1)} vanishes) are redrawn.
  std::vector<QMatrix> point;
  auto off_locus = [&]() {
    for (const PoissonPoly& p : ideal.polys)
      if (!evaluate_at(p, point).is_zero()) return true;
    return false;
  };
  for (int attempt = 1; attempt <= 64 && !rep.control.found; ++attempt) {
    point.assign(ideal.max_order, QMatrix(n, n));
    for (QMatrix& x : point)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
    if (!off_locus()) continue;
    for (std::size_t g = 0; g < ideal.polys.size() && !rep.control.found; ++g)
      for (int i = 1; i <= n && !rep.control.found; ++i)
        for (int j = 1; j <= n && !rep.control.found; ++j) {
          const Rational value = evaluate_at(pb.bracket_poly(ideal.polys[g], coord(i, j, 1)), point);
          if (!value.is_zero()) rep.control = NegativeControl{true, attempt, ideal.labels[g], CoordFn{i, j, 1}, value, point};
        }
  }
  return rep;
}

VanishingReport ideal_vanishing_check(const Coweight& lambda, std::uint64_t seed, int samples, InvariantForm form) {
  const IdealInCoordinates ideal = ideal_in_coordinates(lambda);
  PoissonBracket pb(lambda.n(), form);
  return ideal_vanishing_check(ideal, pb, seed, samples);
}

}  // namespace agslice
