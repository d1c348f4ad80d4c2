#pragma once

// Poisson bracket on the matrix-coefficient functions of G_1[[t^{-1}]],
// G = SL_n, given by
//   {D^{(r+1)}_{b1,v1}, D^{(s)}_{b2,v2}} - {D^{(r)}_{b1,v1}, D^{(s+1)}_{b2,v2}}
//     = sum_a ( D^{(r)}_{J_a b1, v1} D^{(s)}_{J^a b2, v2}
//             - D^{(r)}_{b1, J_a v1} D^{(s)}_{b2, J^a v2} ).
// The recursion alone does not fix the bracket. The missing base case comes
// from the normalization of G_1[[t^{-1}]]: D^{(0)}_{ij} is the constant
// delta_ij, so {., D^{(0)}} = 0. J_a acts on dual vectors by
// (J.b)(v) = -b(J v).

#include "agslice/coweight.hpp"
#include "agslice/dense.hpp"
#include "agslice/polynomial.hpp"
#include "agslice/slice_equations.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace agslice {

/// D^{(r)}_{ij}: the t^{-r} coefficient of the (i, j) matrix entry, 1-based.
struct CoordFn {
  int i = 0;
  int j = 0;
  int r = 0;
  friend auto operator<=>(const CoordFn&, const CoordFn&) = default;
};

/// Polynomial in the D^{(r)}_{ij} with r >= 1; order-0 coordinates are
/// always replaced by their constant values.
using PoissonPoly = SparsePoly<CoordFn>;

std::ostream& operator<<(std::ostream& os, const PoissonPoly& p);

/// D^{(r)}_{ij} as a polynomial (delta_ij for r = 0).
PoissonPoly coord(int i, int j, int r);

/// Value at I + t^{-1} X: D^{(1)} -> X, D^{(r >= 2)} -> 0.
Rational evaluate_at(const PoissonPoly& f, const QMatrix& x);
/// Value at I + sum_r t^{-r} xs[r-1]; orders beyond xs.size() are 0.
Rational evaluate_at(const PoissonPoly& f, const std::vector<QMatrix>& xs);

enum class InvariantForm { trace, killing };

std::string to_string(InvariantForm f);
/// "trace" or "killing"; throws std::invalid_argument otherwise.
InvariantForm parse_form(const std::string& s);

struct DualBases {
  int n = 0;
  InvariantForm form = InvariantForm::trace;
  /// (X, Y) = scale * tr(XY); 1 for trace, 2n for killing.
  Rational scale;
  /// E_ij (i != j) in row-major order, then H_i = E_ii - E_{i+1,i+1}.
  std::vector<QMatrix> basis;
  std::vector<QMatrix> dual;

  Rational pairing(const QMatrix& x, const QMatrix& y) const;
};

/// Dual basis by exact inversion of the Gram matrix.
DualBases dual_bases(int n, InvariantForm form);

/// Memoizing evaluator of the bracket. Not safe for concurrent use; give
/// each worker its own instance.
class PoissonBracket {
 public:
  explicit PoissonBracket(int n, InvariantForm form = InvariantForm::trace);

  int n() const { return n_; }
  const DualBases& bases() const { return bases_; }

  /// Right-hand side of the defining relation for the pair of entries
  /// (i1, j1), (i2, j2) at orders (r, s).
  PoissonPoly rhs(const CoordFn& a, const CoordFn& b) const;

  /// {a, b} by induction on the order of b:
  ///   {A^{(r)}, B^{(s+1)}} = {A^{(r+1)}, B^{(s)}} - RHS(r, s).
  const PoissonPoly& bracket(const CoordFn& a, const CoordFn& b);

  /// {a, b} by induction on the order of a instead:
  ///   {A^{(r+1)}, B^{(s)}} = {A^{(r)}, B^{(s+1)}} + RHS(r, s).
  PoissonPoly bracket_other_path(const CoordFn& a, const CoordFn& b) const;

  /// Bilinear, Leibniz extension of bracket().
  PoissonPoly bracket_poly(const PoissonPoly& f, const PoissonPoly& g);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  int n_;
  DualBases bases_;
  std::map<std::pair<CoordFn, CoordFn>, PoissonPoly> memo_;
};

/// D^{(s)}_{C,D} as a polynomial in the coordinates D^{(r)}_{ij}, r <= s.
PoissonPoly minor_coefficient(int n, const IndexSet& rows, const IndexSet& cols, int s);

/// Generators of the ideal for (lambda, 0) in the coordinates above: every
/// D^{(s)}_{C,D} with |C| = k, m_k < s <= max_order (m_n = 0), together with
/// their partial derivatives.
struct IdealInCoordinates {
  int n = 0;
  Coweight lambda = Coweight::zero(2);
  int max_order = 0;
  std::vector<MinorCondition> labels;
  std::vector<PoissonPoly> polys;
  /// Coordinates that occur in some generator, sorted.
  std::vector<CoordFn> variables;
  /// gradients[g][v] = d polys[g] / d variables[v].
  std::vector<std::vector<PoissonPoly>> gradients;
};

/// Requires 0 < lambda <= n w_1. max_order defaults to n + 1.
IdealInCoordinates ideal_in_coordinates(const Coweight& lambda, int max_order = 0);

struct NegativeControl {
  bool found = false;
  /// Points drawn until a nonzero value appeared.
  int attempts = 0;
  MinorCondition generator;
  CoordFn coordinate;
  Rational value;
  /// t^{-1}, t^{-2}, ... coefficients of the point.
  std::vector<QMatrix> point;
};

struct VanishingReport {
  int n = 0;
  Coweight lambda = Coweight::zero(2);
  std::uint64_t seed = 0;
  int samples = 0;
  int generators = 0;
  long pairs_checked = 0;
  bool all_zero = false;
  /// Description of the first nonzero bracket value, if any.
  std::optional<std::string> first_nonzero;
  /// {generator, D^{(1)}_{ij}} at a point where some generator is nonzero.
  NegativeControl control;
};

/// Brackets of all generator pairs evaluated at sampled points I + t^{-1} X,
/// X in the orbit closure for lambda.
VanishingReport ideal_vanishing_check(const IdealInCoordinates& ideal, PoissonBracket& pb, std::uint64_t seed,
                                      int samples);
VanishingReport ideal_vanishing_check(const Coweight& lambda, std::uint64_t seed, int samples,
                                      InvariantForm form = InvariantForm::trace);

}  // namespace agslice
