#pragma once

// Coset representatives for slices in the affine Grassmannian of SL_N, their
// valuation conditions, and the block embedding SL_n -> SL_{kn}
//   g -> diag(t^{-1} I_{(k-1)n}, t^{k-1} g)
// with its bookkeeping checks.
//
// Torus convention: a dominant coweight mu of SL_N is the cocharacter
// diag(p_1 >= ... >= p_N), sum p = 0, p_a - p_{a+1} = fund_a. Then w0 mu is
// the reversed vector a = (p_N, ..., p_1), weakly increasing, and t^{w0 mu}
// is diag(t^{a_1}, ..., t^{a_N}). For mu = k w_n in SL_{kn} this is
// diag(t^{-1} I, t^{k-1} I).

#include "agslice/coweight.hpp"
#include "agslice/tpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agslice {

/// Matrices up to this size are accepted unless the caller raises the cap.
inline constexpr int kDefaultMaxRank = 8;

/// a = w0 mu for dominant mu in the coroot lattice (PreconditionError otherwise).
IVector w0_cocharacter(const Coweight& mu);

/// diag(t^{a_1}, ..., t^{a_N}).
TMatrix t_power_diag(const IVector& a);

struct ShapeReport {
  /// Every entry of M t^{-a} and of t^{-a} M lies in delta + t^{-1} C[[t^{-1}]].
  bool entries_ok = false;
  bool det_ok = false;
  /// One line per offending entry or for the determinant.
  std::vector<std::string> diagnostics;
  bool ok() const { return entries_ok && det_ok; }
};

/// M in G_mu t^{w0 mu}: with g = M t^{-a}, g and t^{-a} g t^{a} both lie in
/// G_1[[t^{-1}]], and det M = 1.
ShapeReport w_mu_shape_check(const TMatrix& m, const Coweight& mu);

struct ValuationCondition {
  int j = 0;
  IndexSet rows;
  IndexSet cols;
  long required = 0;
  /// nullopt for a zero minor (valuation +infinity).
  std::optional<int> achieved;
  bool pass = false;
};

struct ValuationReport {
  std::vector<ValuationCondition> conditions;
  bool member = false;
  std::vector<ValuationCondition> failures() const;
};

/// <lambda, w0 w_j^vee> = -(coefficient of alpha_{N-j} in lambda), j = 1..N.
std::vector<long> minor_bounds(const Coweight& lambda);

/// Every j x j minor of M (j = 1..N, index order) against minor_bounds(lambda).
/// Requires mu <= lambda dominant and w_mu_shape_check(M, mu).entries_ok.
ValuationReport slice_conditions(const TMatrix& m, const Coweight& lambda, const Coweight& mu,
                                 int max_rank = kDefaultMaxRank);

struct RigidityReport {
  bool one_by_one_ok = false;
  /// a = t^{-1} I and b = c = 0.
  bool forced_form = false;
  std::vector<std::string> diagnostics;
  /// one_by_one_ok implies forced_form.
  bool holds() const { return !one_by_one_ok || forced_form; }
};

/// For M of size kn in the k w_n shape: every entry has valuation >= -1 only
/// if the a, b, c blocks take the forced form. Diagnostics name entries.
RigidityReport rigidity_check(const TMatrix& m, int k, int n);

struct EmbeddingReport {
  int k = 0;
  TMatrix image;
  /// SL_{kn} conditions for (tau(lambda), k w_n).
  ValuationReport target;
  ShapeReport shape;
  RigidityReport rigidity;
  /// Each image minor equals t^{ki - j} times the matching i x i minor of g,
  /// and minors with unmatched t^{-1} I rows and columns vanish.
  bool identity_holds = false;
  std::vector<std::string> identity_failures;
  bool ok() const { return target.member && shape.ok() && rigidity.holds() && identity_holds; }
};

/// Embeds g, a point of the SL_n slice for (lambda, 0), with k = m_1.
/// Throws PreconditionError when g fails its own conditions (the message
/// names the first failed minor) or when kn exceeds max_rank.
EmbeddingReport verify_embedding(const TMatrix& g, const Coweight& lambda, int max_rank = kDefaultMaxRank);

struct ConverseReport {
  ValuationReport target;
  RigidityReport rigidity;
  /// d t^{1-k} checked against the SL_n conditions for (lambda, 0).
  std::optional<ValuationReport> source;
  /// target.member implies forced form and source membership.
  bool holds = false;
};

/// The reverse direction on one SL_{kn} point M of the k w_n shape.
ConverseReport converse_check(const TMatrix& m, const Coweight& lambda, int max_rank = kDefaultMaxRank);

struct InequalityReport {
  int k = 0;
  std::vector<long> m;
  /// m_i <= k i, i = 1..n-1.
  bool m_bounded = false;
  /// m_{l+1} - m_l <= m_1, l = 0..n-1, with m_0 = m_n = 0.
  bool increments_bounded = false;
  /// m_i - m_l <= k (i - l) for 0 <= l <= i <= n.
  bool telescoped = false;
  std::vector<std::string> failures;
  bool ok() const { return m_bounded && increments_bounded && telescoped; }
};

/// Requires lambda dominant, nonzero, in the coroot lattice.
InequalityReport proof_inequalities(const Coweight& lambda);

/// One summand of a slice-point factorization: a coweight below n w_1, or the
/// star of one (the factor is then inverted).
struct SlicePiece {
  Coweight weight;
  bool starred = false;
};

/// lambda as a sum of pieces (nullopt when no decomposition exists).
std::optional<std::vector<SlicePiece>> slice_pieces(const Coweight& lambda);

/// A point of the SL_n slice for (lambda, 0): a product of factors
/// I + t^{-1} X (X in the orbit closure of the piece) and inverses of such
/// factors for starred pieces. Deterministic in (lambda, seed).
TMatrix sample_slice_point(const Coweight& lambda, std::uint64_t seed);

}  // namespace agslice
