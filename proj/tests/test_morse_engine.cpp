#include <gtest/gtest.h>

#include <random>

#include "higgs/generators.hpp"
#include "higgs/morse_engine.hpp"

using namespace higgs;
using Sum = GradedSummand<std::int64_t>;

namespace {

// (g-1) sum_{k>=2} rk U_k + sum_{k>=2} (+-) deg U_k straight from pairs of
// full summands, sl-type groups only.
std::int64_t index_oracle_sl(const GradedBundle<std::int64_t>& e, const Curve& c) {
  std::int64_t idx = 0;
  for (const auto& x : e.full())
    for (const auto& y : e.full()) {
      std::int64_t k = (y.weight.twice_m - x.weight.twice_m) / 2;
      if (k < 2) continue;
      std::int64_t r = x.cls.rank * y.cls.rank;
      std::int64_t d = x.cls.rank * y.cls.degree - y.cls.rank * x.cls.degree;
      idx += c.g1() * r + (k % 2 ? d : -d);
    }
  return idx;
}

}  // namespace

TEST(MorseIndex, Su22FirstCaseClosedForm) {
  Curve c(3);
  // degrees x (-3/2), y (-1/2), z (1/2), -(x+y+z) (3/2)
  auto e = GradedBundle<std::int64_t>::make(
      GroupType::su(2), {Sum{Weight{-3}, {1, 4}, Block::V}, Sum{Weight{-1}, {1, -1}, Block::Vprime},
                         Sum{Weight{1}, {1, 2}, Block::V}, Sum{Weight{3}, {1, -5}, Block::Vprime}});
  auto r = morse_index(e, c);
  EXPECT_EQ(r.index, 3 * 2 + (-1) - 2);
  EXPECT_EQ(r.index, r.sum_of_contributions());
  EXPECT_FALSE(r.minimum_candidate.value_or(true));
}

TEST(MorseIndex, TwoTwoTypeIsZero) {
  Curve c(4);
  auto e = GradedBundle<std::int64_t>::make(
      GroupType::su(2), {Sum{Weight{-1}, {2, 5}, Block::V}, Sum{Weight{1}, {2, -5}, Block::Vprime}});
  auto r = morse_index(e, c);
  EXPECT_EQ(r.index, 0);
  EXPECT_TRUE(r.contributions.empty());
  EXPECT_TRUE(r.minimum_candidate.value_or(false));
}

TEST(MorseIndex, SpSplitCases) {
  for (std::int64_t g = 2; g <= 4; ++g) {
    Curve c(g);
    auto lo = GradedBundle<std::int64_t>::make(GroupType::sp(2), {Sum{Weight{-3}, {1, 3}, Block::V},
                                                                 Sum{Weight{1}, {1, -1}, Block::V}});
    EXPECT_EQ(morse_index(lo, c).index, 2 * (g - 1) - 2);
    auto hi = GradedBundle<std::int64_t>::make(GroupType::sp(2), {Sum{Weight{-1}, {1, 3}, Block::V},
                                                                 Sum{Weight{3}, {1, -1}, Block::V}});
    EXPECT_EQ(morse_index(hi, c).index, 2 * (g - 1) + 2);
  }
}

TEST(MorseIndex, MatchesPairOracleOnRandomSlBundles) {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 2000; ++it) {
    Curve c(2 + it % 4);
    const GroupType g = it % 2 ? GroupType::sl(4) : GroupType::su(2);
    auto e = random_graded_bundle(g, rng);
    auto r = morse_index(e, c);
    EXPECT_EQ(r.index, index_oracle_sl(e, c));
    EXPECT_EQ(r.index, r.sum_of_contributions());
  }
}

TEST(Laumon, EveryTypeGivesHalfDimension) {
  for (std::int64_t n = 2; n <= 5; ++n)
    for (std::int64_t g = 2; g <= 5; ++g) {
      Curve c(g);
      for (const auto& e : sl_fixed_point_types(n)) {
        auto r = laumon_halfdim(adjoint_decomposition(e), c, GroupType::sl(n));
        EXPECT_TRUE(r.ok());
        EXPECT_TRUE(r.computed.is_constant());
        EXPECT_EQ(r.expected, (n * n - 1) * (g - 1));
      }
    }
}

TEST(Laumon, Examples) {
  auto e2 = sl_fixed_point_types(2).front();
  auto r2 = laumon_halfdim(adjoint_decomposition(e2), Curve(2), GroupType::sl(2));
  EXPECT_EQ(r2.expected, 3);
  EXPECT_EQ(r2.computed, LinearForm(3));
  auto e3 = sl_fixed_point_types(3).front();
  EXPECT_EQ(laumon_halfdim(adjoint_decomposition(e3), Curve(3), GroupType::sl(3)).expected, 16);
}

TEST(Laumon, RealFormIsADomainError) {
  auto e = GradedBundle<std::int64_t>::make(
      GroupType::su(2), {Sum{Weight{-1}, {2, 0}, Block::V}, Sum{Weight{1}, {2, 0}, Block::Vprime}});
  EXPECT_THROW(laumon_halfdim(adjoint_decomposition(e), Curve(2), GroupType::su(2)), DomainError);
}

TEST(ModuliDim, Values) {
  EXPECT_EQ(moduli_dim(GroupType::sp(2), Curve(2)), 10);
  EXPECT_EQ(moduli_dim(GroupType::su(2), Curve(3)), 30);
  EXPECT_EQ(moduli_dim(GroupType::sl(2), Curve(2)), 6);
}
