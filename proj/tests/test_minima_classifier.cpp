#include <gtest/gtest.h>

#include "higgs/minima_classifier.hpp"

using namespace higgs;

TEST(Types, EnumerationShapes) {
  Curve c(2);
  auto su = enumerate_types(GroupType::su(2), c, 1);
  EXPECT_EQ(su.size(), 8u);
  int impossible = 0;
  for (const auto& t : su) {
    impossible += t.type_impossible;
    EXPECT_FALSE(t.needs_review);
  }
  EXPECT_EQ(impossible, 2);
  auto sp = enumerate_types(GroupType::sp(2), c, 2);
  EXPECT_EQ(sp.size(), 5u);
  for (std::size_t i = 1; i < sp.size(); ++i) EXPECT_LE(sp[i - 1].rank_vector, sp[i].rank_vector);
  EXPECT_THROW(enumerate_types(GroupType::sp(2), c, 3), DomainError);
  EXPECT_THROW(enumerate_types(GroupType::sl(2), c, 0), DomainError);
}

TEST(Classify, WitnessesAreStableAndSatisfyConstraints) {
  for (std::int64_t g = 2; g <= 3; ++g) {
    Curve c(g);
    for (auto group : {GroupType::su(2), GroupType::sp(2)})
      for (std::int64_t d = -mw_bound(2, c); d <= mw_bound(2, c); ++d)
        for (const auto& t : enumerate_types(group, c, d)) {
          auto v = classify(t, c, d);
          if (v.verdict == Verdict::MinimumFeasible) {
            ASSERT_FALSE(v.witness.empty());
            EXPECT_TRUE(v.witness_oracle_stable);
            EXPECT_TRUE(type_constraints(t, c, d).satisfied_by(v.witness));
            EXPECT_EQ(morse_index(concrete_bundle(t, v.witness), c).index, 0);
          }
          if (v.certificate) {
            EXPECT_EQ(v.verdict, Verdict::NeverMinimum);
          }
          EXPECT_NE(v.verdict, Verdict::NeedsExplicitBound);
        }
  }
}

TEST(Classify, OneTwoOneNeverMinimum) {
  Curve c(2);
  for (std::int64_t d = -2; d <= 2; ++d)
    for (const auto& t : enumerate_types(GroupType::su(2), c, d))
      if (t.rank_vector == std::vector<std::int64_t>{1, 2, 1}) {
        EXPECT_EQ(classify(t, c, d).verdict, Verdict::NeverMinimum);
      }
}

TEST(Census, ReducibleMinima) {
  EXPECT_EQ(reducible_minima(GroupType::su(2), 0).size(), 1u);
  EXPECT_EQ(reducible_minima(GroupType::sp(2), 0).front().key, "phi-zero");
  auto r = reducible_minima(GroupType::su(2), -1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.front().key, "rank2-direct-sum");
}
