#include "agslice/coweight.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace agslice;

namespace {

std::vector<long> m_of(const Coweight& l) { return fund_to_coroot(l).as_integers(); }

}  // namespace

TEST(Coweight, Construction) {
  EXPECT_THROW(Coweight(1, std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(Coweight(3, std::vector<int>{1}), std::invalid_argument);
  EXPECT_TRUE(Coweight(3, std::vector<int>{1, 0}).dominant());
  EXPECT_FALSE(Coweight(3, std::vector<int>{1, -1}).dominant());
}

TEST(Coweight, CartanData) {
  for (int n = 2; n <= 7; ++n) {
    const IMatrix a = cartan_matrix(n);
    EXPECT_TRUE(a == a.transpose());
    for (int i = 0; i < n - 1; ++i) EXPECT_GE(a.row(i).sum(), 0);
    const QMatrix inv = cartan_inverse(n);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) EXPECT_GT(inv(i, j).sign(), 0);
    EXPECT_TRUE(exactly_equal(multiply(to_rational(a), inv), identity<Rational>(n - 1)));
  }
}

TEST(Coweight, FundToCorootExamples) {
  EXPECT_EQ(m_of(Coweight::fundamental(3, 1, 3)), (std::vector<long>{1, 2}));
  EXPECT_EQ(m_of(Coweight::fundamental(4, 2, 2)), (std::vector<long>{1, 2, 1}));
  EXPECT_EQ(m_of(Coweight::zero(5)), (std::vector<long>(4, 0)));
  // w_1 of SL_3 is not in the coroot lattice
  EXPECT_FALSE(fund_to_coroot(Coweight::fundamental(3, 1)).integral());
  EXPECT_THROW(fund_to_coroot(Coweight::fundamental(3, 1)).as_integers(), PreconditionError);
}

TEST(Coweight, RoundTripThroughCoroots) {
  for (int n = 2; n <= 5; ++n)
    for (const Coweight& l : dominant_coweights(n, 2)) {
      const CorootVector c = simple_coroot_coords(l);
      const QVector f = coroot_to_fund(n, c.coeffs);
      for (int i = 0; i < n - 1; ++i) EXPECT_EQ(f(i), Rational(l.fund()(i)));
    }
}

TEST(Coweight, NOmegaOneGivesMEqualI) {
  for (int n = 2; n <= 10; ++n) {
    const auto m = m_of(Coweight::fundamental(n, 1, n));
    for (int i = 1; i < n; ++i) EXPECT_EQ(m[i - 1], i) << "n=" << n;
  }
}

TEST(Coweight, DominanceExamples) {
  const Coweight z = Coweight::zero(3);
  EXPECT_TRUE(dominance_leq(z, Coweight::fundamental(3, 1, 3)));
  EXPECT_FALSE(dominance_leq(Coweight::fundamental(3, 1), Coweight::fundamental(3, 2)));
  EXPECT_THROW(dominance_leq(z, Coweight::zero(4)), std::invalid_argument);
}

TEST(Coweight, DominanceIsPartialOrder) {
  const auto all = dominant_coweights(3, 3);
  for (const auto& a : all) {
    EXPECT_TRUE(dominance_leq(a, a));
    for (const auto& b : all) {
      if (dominance_leq(a, b) && dominance_leq(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : all)
        if (dominance_leq(a, b) && dominance_leq(b, c)) EXPECT_TRUE(dominance_leq(a, c));
    }
  }
}

TEST(Coweight, PartitionDictionaryExamples) {
  EXPECT_EQ(coweight_to_partition(Coweight::fundamental(3, 1, 3)), Partition({1, 1, 1}));
  EXPECT_EQ(conjugate(coweight_to_partition(Coweight::fundamental(3, 1, 3))), Partition({3}));
  EXPECT_EQ(coweight_to_partition(Coweight::fundamental(4, 2, 2)), Partition({2, 2}));
  EXPECT_EQ(coweight_to_partition(Coweight::fundamental(2, 1, 2)), Partition({1, 1}));
  EXPECT_EQ(m_from_partition(Partition({3}), 3).as_integers(), (std::vector<long>{1, 2}));
  EXPECT_EQ(m_from_partition(Partition({2, 2}), 4).as_integers(), (std::vector<long>{1, 2, 1}));
  EXPECT_EQ(m_from_partition(Partition({1, 1, 1}), 3).as_integers(), (std::vector<long>{0, 0}));
  EXPECT_THROW(m_from_partition(Partition({2}), 3), std::invalid_argument);
}

TEST(Coweight, PartitionDictionaryRejections) {
  EXPECT_THROW(coweight_to_partition(Coweight::zero(3)), PreconditionError);
  EXPECT_THROW(coweight_to_partition(Coweight::fundamental(3, 2, 3)), PreconditionError);
  EXPECT_THROW(coweight_to_partition(Coweight(3, std::vector<int>{2, -1})), PreconditionError);
}

TEST(Coweight, PartitionSizeCriterion) {
  for (int n = 2; n <= 5; ++n)
    for (const Coweight& l : dominant_coweights(n, 3)) {
      if (l.is_zero()) continue;
      int weighted = 0;
      for (int j = 1; j < n; ++j) weighted += j * l.coeff(j);
      const bool below = dominance_leq(l, Coweight::fundamental(n, 1, n));
      EXPECT_EQ(below, weighted == n) << l;
      if (below) EXPECT_EQ(coweight_to_partition(l).size(), n);
    }
}

TEST(Coweight, DictionaryRoundTripExhaustive) {
  for (int n = 2; n <= 7; ++n)
    for (const Partition& v : partitions_of(n)) {
      if (v.length() == 1) continue;
      const Coweight l = coweight_from_partition(v, n);
      EXPECT_EQ(coweight_to_partition(l), v);
      EXPECT_EQ(m_from_partition(conjugate(v), n), fund_to_coroot(l)) << l;
    }
}

TEST(Coweight, TauEmbed) {
  EXPECT_EQ(tau_embed(Coweight::fundamental(3, 1, 3), 1), Coweight::fundamental(3, 1, 3));
  EXPECT_EQ(tau_embed(Coweight::fundamental(2, 1, 2), 2), Coweight(4, std::vector<int>{2, 0, 0}));
  EXPECT_THROW(tau_embed(Coweight::zero(2), 0), std::invalid_argument);
}

TEST(Coweight, TauIdentityAndBound) {
  EXPECT_EQ(embedding_factor(Coweight::fundamental(2, 1, 4)), 2);
  EXPECT_TRUE(tau_coroot_identity(Coweight::fundamental(2, 1, 2)).ok());
  EXPECT_TRUE(tau_coroot_identity(Coweight::fundamental(3, 1, 3)).ok());
  EXPECT_TRUE(tau_coroot_identity(Coweight::fundamental(2, 1, 4)).ok());
  EXPECT_TRUE(tau_bound_check(Coweight::fundamental(4, 2, 2)));
  EXPECT_THROW(embedding_factor(Coweight::zero(3)), PreconditionError);
  int checked = 0;
  for (int n = 2; n <= 4; ++n)
    for (const Coweight& l : dominant_coweights(n, 3)) {
      if (!fund_to_coroot(l).integral() || fund_to_coroot(l)(1) < 1) continue;
      EXPECT_TRUE(tau_coroot_identity(l).ok()) << l;
      EXPECT_TRUE(tau_bound_check(l)) << l;
      ++checked;
    }
  EXPECT_GT(checked, 20);
}

TEST(Coweight, ShiftPairing) {
  const Coweight l = Coweight::fundamental(3, 1, 3);
  EXPECT_TRUE(shift_pairing_check(Coweight::zero(3), l, 1).holds);
  EXPECT_TRUE(shift_pairing_check(l, l, 2).holds);
  for (int n = 2; n <= 4; ++n) {
    const auto all = dominant_coweights(n, 2);
    for (const auto& lam : all)
      for (const auto& mu : all) {
        if (!dominance_leq(mu, lam)) continue;
        for (int k = 1; k <= 3; ++k) EXPECT_TRUE(shift_pairing_check(mu, lam, k).holds) << mu << " " << lam;
      }
  }
  EXPECT_THROW(shift_pairing_check(Coweight::fundamental(3, 1, 3), Coweight::zero(3), 1), PreconditionError);
}
