#pragma once

// Defining equations of the slice through the identity, written as
// polynomials in the entries x_ij of an n x n matrix X via the embedding
// X -> I + t^{-1} X.
//
// f_{C,D}^{(s)}(X) is the t^{-s} coefficient of the (C, D) minor of
// I + t^{-1} X. The direct symbolic expansion (f_poly) is the definition; the
// signed sum of s x s minors (f_poly_minor_sum) is a faster closed form that
// is checked against it.

#include "agslice/coweight.hpp"
#include "agslice/dense.hpp"
#include "agslice/polynomial.hpp"
#include "agslice/tpoly.hpp"

#include <compare>
#include <ostream>
#include <vector>

namespace agslice {

/// The matrix-entry indeterminate x_{row,col}, 1-based.
struct Entry {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

using SymbolicPoly = SparsePoly<Entry>;

std::ostream& operator<<(std::ostream& os, const SymbolicPoly& p);

/// One generator index (rows C, columns D, order s); k = |C| = |D|.
struct MinorCondition {
  IndexSet rows;
  IndexSet cols;
  int order = 0;

  int size() const { return static_cast<int>(rows.size()); }
  /// f^{(s)} vanishes identically once s exceeds the minor size.
  bool trivial() const { return order > size(); }
  friend bool operator==(const MinorCondition&, const MinorCondition&) = default;
};

/// Symbolic determinant of X[C, D].
SymbolicPoly minor_poly(int n, const IndexSet& rows, const IndexSet& cols);

/// t^{-s} coefficient of det((I + t^{-1} X)[C, D]), by direct symbolic expansion.
SymbolicPoly f_poly(int n, const IndexSet& rows, const IndexSet& cols, int s);

/// Same polynomial as f_poly via
///   sum over R in C cap D with |R| = k - s of
///   (-1)^{sum_{r in R} (pos_C(r) + pos_D(r))} det X[C \ R, D \ R].
SymbolicPoly f_poly_minor_sum(int n, const IndexSet& rows, const IndexSet& cols, int s);

/// Exact value at a rational matrix.
Rational evaluate(const SymbolicPoly& f, const QMatrix& x);

struct GeneratorSet {
  int n = 0;
  Coweight lambda = Coweight::zero(2);
  /// m_1 .. m_{n-1} as integers (index i-1 holds m_i).
  std::vector<long> m;
  /// All (C, D, s) with 1 <= |C| = k < n and m_k < s <= n. Entries with
  /// s > k are kept but flagged trivial().
  std::vector<MinorCondition> w_part;
  /// Orders p = 1..n of the principal-minor sums (char-poly coefficients).
  std::vector<int> u0_orders;

  /// Polynomial of a W-part entry (zero when trivial).
  SymbolicPoly w_poly(const MinorCondition& c) const;
  /// Sum of all principal p x p minors.
  SymbolicPoly u0_poly(int p) const;
};

/// Generators for 0 < lambda <= n w_1 (PreconditionError otherwise).
GeneratorSet ideal_generators(int n, const Coweight& lambda);

struct Violation {
  /// True for a principal-minor-sum (U_0) generator.
  bool u0 = false;
  MinorCondition condition;
  Rational value;
};

struct MembershipResult {
  bool member = false;
  std::vector<Violation> violations;
};

/// Evaluates every nontrivial generator at X; violations are listed in
/// generator order with their exact nonzero values.
MembershipResult membership(const QMatrix& x, const Coweight& lambda);

struct WeymanGenerator {
  /// Index i of U_{i,p}; 0 for the U_0 part.
  int i = 0;
  int p = 0;
  MinorCondition condition;
  SymbolicPoly poly;
};

/// f^{(p)}_{C0,D0} with C0 = {k+1..n}, D0 = {1..n-k}.
SymbolicPoly highest_weight_vector(int n, int k, int p);

/// Highest weight vectors of U_{i,p} for 1 <= i <= min(p, n-p) and
/// p > m_{n-i}, followed by the U_0 generators for p = 1..n.
std::vector<WeymanGenerator> weyman_generators(int n, const Coweight& lambda);

/// -sum_{i in C} e_i + sum_{j in D} e_j.
IVector torus_weight(int n, const IndexSet& rows, const IndexSet& cols);

/// Weight of a monomial under (g.f)(A) = f(g^{-1} A g) for diagonal g.
IVector monomial_weight(int n, const SymbolicPoly::Monomial& m);

/// First-order term in eps of f((I - eps x) A (I + eps x)) for x = E_{i,i+1},
/// i.e. the derivative of f along [A, x].
SymbolicPoly raising_action(const SymbolicPoly& f, int n, int i);

/// True when every simple raising operator annihilates f.
bool raising_annihilation_check(const SymbolicPoly& f, int n);

/// Weyl dimension of the GL_n irreducible with the given highest weight.
long weyl_dimension(const std::vector<int>& highest_weight);

/// (1^k, 0^{n-2k}, (-1)^k).
std::vector<int> alpha_weight(int n, int k);

/// Dimension of the span of the given polynomials (exact rank).
long span_dimension(const std::vector<SymbolicPoly>& polys);

struct SpanDimensionReport {
  int n = 0;
  int k = 0;
  int p = 0;
  /// dim span{f^{(p)}_{C,D} : |C| = |D| = k}.
  long dim_w = 0;
  /// dim of the span of all p x p minors.
  long dim_mp = 0;
  /// dim S_{alpha_j} for j = 0..min(p, n-p).
  std::vector<long> schur_dims;
  /// dim_w is a sum of a sub-multiset of schur_dims.
  bool partial_sum = false;
  /// dim_mp equals C(n,p)^2 and the sum of schur_dims.
  bool mp_identity = false;
  /// When 0 <= n-k <= min(p, n-p): dim_w >= dim S_{alpha_{n-k}}, matching
  /// U_{n-k,p} inside W_{k,p}. Vacuously true otherwise.
  bool inclusion_consistent = false;
};

SpanDimensionReport span_dimension_report(int n, int k, int p);

long binomial(int n, int k);

}  // namespace agslice
