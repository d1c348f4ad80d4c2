#include "agslice/nilpotent.hpp"
#include "agslice/slice_equations.hpp"
#include "agslice/slice_iso.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace agslice;
using testutil::qmat;

namespace {

TPoly t(int e, long c = 1) { return TPoly::monomial(Rational(c), e); }

}  // namespace

TEST(Cocharacter, Conventions) {
  EXPECT_TRUE(w0_cocharacter(Coweight::zero(3)).isZero());
  EXPECT_TRUE(w0_cocharacter(Coweight::fundamental(4, 2, 2)) == (IVector(4) << -1, -1, 1, 1).finished());
  EXPECT_TRUE(w0_cocharacter(Coweight::fundamental(6, 3, 2)) == (IVector(6) << -1, -1, -1, 1, 1, 1).finished());
  EXPECT_TRUE(w0_cocharacter(Coweight(3, std::vector<int>{1, 1})) == (IVector(3) << -1, 0, 1).finished());
  EXPECT_THROW(w0_cocharacter(Coweight::fundamental(3, 1)), PreconditionError);
}

TEST(Shape, Examples) {
  const Coweight mu = Coweight::fundamental(4, 2, 2);
  EXPECT_TRUE(w_mu_shape_check(t_power_diag(w0_cocharacter(mu)), mu).ok());
  EXPECT_TRUE(w_mu_shape_check(g_from_nilpotent(qmat({{0, 1}, {0, 0}})), Coweight::zero(2)).ok());

  TMatrix m = t_power_diag(w0_cocharacter(mu));
  m(0, 0) += t(-3, 2);   // a: t^{-2} and below allowed
  m(0, 1) = t(-2);
  m(2, 0) = t(-2, 5);    // c
  m(3, 3) += t(0, 4);    // d: t^{k-2} = t^0 allowed
  m(2, 3) = t(0, -1);
  EXPECT_TRUE(w_mu_shape_check(m, mu).entries_ok);
  EXPECT_FALSE(w_mu_shape_check(m, mu).det_ok);

  TMatrix bad = t_power_diag(w0_cocharacter(mu));
  bad(1, 2) = t(-1);     // b allows only t^{-2} and below
  const ShapeReport r = w_mu_shape_check(bad, mu);
  EXPECT_FALSE(r.entries_ok);
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_NE(r.diagnostics.front().find("(2,3)"), std::string::npos);

  TMatrix bad_a = t_power_diag(w0_cocharacter(mu));
  bad_a(0, 1) = t(-1);
  EXPECT_FALSE(w_mu_shape_check(bad_a, mu).entries_ok);
  TMatrix bad_d = t_power_diag(w0_cocharacter(mu));
  bad_d(2, 3) = t(1);
  EXPECT_FALSE(w_mu_shape_check(bad_d, mu).entries_ok);
}

TEST(Bounds, PresentationsReproduced) {
  // mu = 0: -m_i, and the determinant bound 0
  EXPECT_EQ(minor_bounds(Coweight::fundamental(4, 2, 2)), (std::vector<long>{-1, -2, -1, 0}));
  // k w_n presentation for lambda = 2w_1 + 2w_2 (n = 3, m = (2,2), k = 2)
  const Coweight lam(3, std::vector<int>{2, 2});
  const auto m = fund_to_coroot(lam).as_integers();
  const int k = 2, n = 3, kn = 6;
  const auto b = minor_bounds(tau_embed(lam, k));
  for (int j = 1; j <= kn; ++j) {
    const long expected = j <= kn - n ? -j : -(j - kn + n < n ? m[j - kn + n - 1] : 0) - (kn - j) * (k - 1);
    EXPECT_EQ(b[j - 1], expected) << "j=" << j;
  }
}

TEST(SliceConditions, NilpotentConeAndDetFailure) {
  const Coweight l3 = Coweight::fundamental(3, 1, 3);
  for (std::uint64_t s = 0; s < 10; ++s)
    EXPECT_TRUE(slice_conditions(g_from_nilpotent(sample_nilpotent(Partition({3}), s)), l3, Coweight::zero(3)).member);
  const ValuationReport r =
      slice_conditions(g_from_nilpotent(qmat({{1, 0}, {0, -1}})), Coweight::fundamental(2, 1, 2), Coweight::zero(2));
  EXPECT_FALSE(r.member);
  ASSERT_EQ(r.failures().size(), 1u);
  EXPECT_EQ(r.failures()[0].j, 2);
  EXPECT_EQ(r.failures()[0].achieved, -2);
  EXPECT_THROW(slice_conditions(g_from_nilpotent(QMatrix::Zero(2, 2)), Coweight::zero(2), Coweight::fundamental(2, 1, 2)),
               PreconditionError);
}

TEST(SliceConditions, AgreeWithGeneratorMembership) {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 4; ++n)
    for (const Partition& v : partitions_of(n)) {
      if (v.length() == 1) continue;
      const Coweight lam = coweight_from_partition(v, n);
      for (const Partition& u : partitions_of(n))
        for (int s = 0; s < 5; ++s) {
          QMatrix x = sample_nilpotent(u, rng());
          if (s == 4) x(0, 0) += Rational(1);
          const bool a = membership(x, lam).member;
          const bool b = slice_conditions(g_from_nilpotent(x), lam, Coweight::zero(n)).member;
          ASSERT_EQ(a, b) << lam << " " << u;
        }
    }
}

TEST(Rigidity, Examples) {
  const TMatrix g = g_from_nilpotent(qmat({{0, 1}, {0, 0}}));
  EXPECT_TRUE(rigidity_check(block_embed(g, 2), 2, 2).forced_form);
  TMatrix m = block_embed(g, 2);
  m(0, 0) += t(-2);
  RigidityReport r = rigidity_check(m, 2, 2);
  EXPECT_FALSE(r.one_by_one_ok);
  EXPECT_FALSE(r.forced_form);
  EXPECT_TRUE(r.holds());
  EXPECT_NE(r.diagnostics.front().find("(1,1) in block a"), std::string::npos);
  TMatrix mb = block_embed(g, 2);
  mb(1, 3) = t(-2, 3);
  r = rigidity_check(mb, 2, 2);
  EXPECT_FALSE(r.one_by_one_ok);
  bool named = false;
  for (const auto& d : r.diagnostics) named = named || d.find("(2,4) in block b") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(Embedding, DegenerateK1) {
  const Coweight lam = Coweight::fundamental(2, 1, 2);
  const TMatrix g = g_from_nilpotent(qmat({{0, 1}, {0, 0}}));
  const EmbeddingReport r = verify_embedding(g, lam);
  EXPECT_EQ(r.k, 1);
  EXPECT_TRUE(exactly_equal(r.image, g));
  EXPECT_TRUE(r.ok());
}

TEST(Embedding, FourOmegaOne) {
  const Coweight lam = Coweight::fundamental(2, 1, 4);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const TMatrix g = sample_slice_point(lam, s);
    const EmbeddingReport r = verify_embedding(g, lam);
    EXPECT_EQ(r.k, 2);
    EXPECT_TRUE(r.ok()) << (r.identity_failures.empty() ? "" : r.identity_failures.front());
    EXPECT_TRUE(converse_check(r.image, lam).holds);
  }
}

TEST(Embedding, RejectsNonMembers) {
  const Coweight lam = Coweight::fundamental(2, 1, 2);
  try {
    verify_embedding(g_from_nilpotent(qmat({{1, 0}, {0, -1}})), lam);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("2x2 minor"), std::string::npos);
  }
  EXPECT_THROW(verify_embedding(identity<TPoly>(3), Coweight(3, std::vector<int>{3, 3}), 8), PreconditionError);
  EXPECT_NO_THROW(verify_embedding(identity<TPoly>(3), Coweight(3, std::vector<int>{3, 3}), 9));
}

TEST(Embedding, SampledPointsSweep) {
  for (int n = 2; n <= 3; ++n)
    for (const Coweight& lam : dominant_coweights(n, 2)) {
      if (lam.is_zero() || !fund_to_coroot(lam).integral()) continue;
      const int k = embedding_factor(lam);
      if (k * n > 8) continue;
      for (std::uint64_t s = 0; s < 10; ++s) {
        const TMatrix g = sample_slice_point(lam, s);
        ASSERT_TRUE(slice_conditions(g, lam, Coweight::zero(n)).member) << lam;
        const EmbeddingReport r = verify_embedding(g, lam);
        EXPECT_TRUE(r.ok()) << lam;
        EXPECT_TRUE(converse_check(r.image, lam).holds);
      }
    }
}

TEST(Converse, PerturbationsBreakConditions) {
  const Coweight lam(3, std::vector<int>{2, 2});
  const TMatrix g = sample_slice_point(lam, 3);
  TMatrix m = block_embed(g, 2);
  m(0, 4) = t(-2);
  const ConverseReport r = converse_check(m, lam);
  EXPECT_FALSE(r.target.member);
  EXPECT_TRUE(r.holds);
  // a d-block that fails the SL_3 conditions also fails in SL_6
  QMatrix x = QMatrix::Zero(3, 3);
  x(0, 0) = Rational(1);
  x(1, 1) = Rational(-1);
  const ConverseReport q = converse_check(block_embed(g_from_nilpotent(x), 2), lam);
  EXPECT_FALSE(q.target.member);
}

TEST(Pieces, Decompositions) {
  EXPECT_TRUE(slice_pieces(Coweight(3, std::vector<int>{0, 3})).has_value());
  EXPECT_TRUE(slice_pieces(Coweight(3, std::vector<int>{2, 2})).has_value());
  EXPECT_TRUE(slice_pieces(Coweight::zero(3))->empty());
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Coweight lam(3, std::vector<int>{0, 3});
    EXPECT_TRUE(slice_conditions(sample_slice_point(lam, s), lam, Coweight::zero(3)).member);
  }
}

TEST(Inequalities, Sweep) {
  EXPECT_TRUE(proof_inequalities(Coweight::fundamental(4, 1, 4)).ok());
  EXPECT_EQ(proof_inequalities(Coweight::fundamental(4, 1, 4)).k, 1);
  EXPECT_THROW(proof_inequalities(Coweight::zero(3)), PreconditionError);
  int count = 0;
  for (int n = 2; n <= 5; ++n)
    for (const Coweight& lam : dominant_coweights(n, 3)) {
      if (lam.is_zero() || !fund_to_coroot(lam).integral()) continue;
      EXPECT_TRUE(proof_inequalities(lam).ok()) << lam;
      ++count;
    }
  EXPECT_GT(count, 50);
}
