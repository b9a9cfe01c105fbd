#include <gtest/gtest.h>

#include <map>
#include <random>

#include "higgs/generators.hpp"
#include "higgs/graded_fixed_point.hpp"

using namespace higgs;

namespace {

using Sum = GradedSummand<std::int64_t>;

// Weight-k rank and degree of the adjoint bundle straight from the full
// summand list: sl-type groups through End(E), Sp through S^2 E.
std::map<std::int64_t, BundleClass> adjoint_oracle(const GradedBundle<std::int64_t>& e) {
  std::map<std::int64_t, BundleClass> out;
  const auto& f = e.full();
  auto add = [&](std::int64_t twice_k, std::int64_t r, std::int64_t d) {
    auto& c = out[twice_k / 2];
    c.rank += r;
    c.degree += d;
  };
  if (e.group().family() == GroupFamily::Sp2nR) {
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a; b < f.size(); ++b) {
        std::int64_t ra = f[a].cls.rank, rb = f[b].cls.rank, da = f[a].cls.degree, db = f[b].cls.degree;
        std::int64_t tk = f[a].weight.twice_m + f[b].weight.twice_m;
        if (a == b) add(tk, ra * (ra + 1) / 2, (ra + 1) * da);
        else add(tk, ra * rb, rb * da + ra * db);
      }
  } else {
    for (const auto& x : f)
      for (const auto& y : f)
        add(y.weight.twice_m - x.weight.twice_m, x.cls.rank * y.cls.rank,
            x.cls.rank * y.cls.degree - y.cls.rank * x.cls.degree);
    out[0].rank -= 1;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.rank == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST(Weight, HalfIntegerArithmetic) {
  EXPECT_EQ(Weight::from_twice(-3).str(), "-3/2");
  EXPECT_EQ(Weight::from_twice(4).str(), "2");
  EXPECT_FALSE(Weight::from_twice(1).value().is_integer());
  EXPECT_EQ(Weight::integral(-2).twice_m, -4);
  EXPECT_EQ(Weight::from_twice(3).negated().twice_m, -3);
}

TEST(GroupType, Dimensions) {
  EXPECT_EQ(GroupType::su(2).complex_dimension(), 15);
  EXPECT_EQ(GroupType::sp(2).complex_dimension(), 10);
  EXPECT_EQ(GroupType::sl(3).complex_dimension(), 8);
  EXPECT_THROW(GroupType::sl(1), DomainError);
  EXPECT_THROW(GroupType::su(0), DomainError);
}

TEST(GradedBundle, ValidSu22Shapes) {
  auto e = GradedBundle<std::int64_t>::make(
      GroupType::su(2), {Sum{Weight{-1}, {2, 3}, Block::V}, Sum{Weight{1}, {2, -3}, Block::Vprime}});
  EXPECT_EQ(e.block_class(Block::V), (BundleClass{2, 3}));
  EXPECT_EQ(e.total_class(), (BundleClass{4, 0}));
}

TEST(GradedBundle, RejectsEachInvariant) {
  auto su = GroupType::su(2);
  // trace not zero
  EXPECT_THROW(GradedBundle<std::int64_t>::make(
                   su, {Sum{Weight{0}, {2, 0}, Block::V}, Sum{Weight{2}, {2, 0}, Block::Vprime}}),
               InvariantError);
  // blocks do not alternate
  EXPECT_THROW(GradedBundle<std::int64_t>::make(
                   su, {Sum{Weight{-1}, {2, 0}, Block::V}, Sum{Weight{1}, {2, 0}, Block::V}}),
               InvariantError);
  // weight gap of 2
  EXPECT_THROW(GradedBundle<std::int64_t>::make(
                   su, {Sum{Weight{-2}, {2, 0}, Block::V}, Sum{Weight{2}, {2, 0}, Block::Vprime}}),
               InvariantError);
  // block ranks 3 + 1
  EXPECT_THROW(GradedBundle<std::int64_t>::make(su, {Sum{Weight{-1}, {1, 0}, Block::V},
                                                     Sum{Weight{1}, {3, 0}, Block::Vprime}}),
               InvariantError);
  // total degree nonzero
  EXPECT_THROW(GradedBundle<std::int64_t>::make(
                   su, {Sum{Weight{-1}, {2, 1}, Block::V}, Sum{Weight{1}, {2, 0}, Block::Vprime}}),
               InvariantError);
  // Sp: V side only, duals derived; a V* tag is rejected
  EXPECT_THROW(GradedBundle<std::int64_t>::make(GroupType::sp(2), {Sum{Weight{-1}, {2, 0}, Block::Vdual}}),
               InvariantError);
  // SL: degree must sum to 0
  EXPECT_THROW(GradedBundle<std::int64_t>::make(
                   GroupType::sl(2), {Sum{Weight{0}, {1, 1}, Block::None}, Sum{Weight{2}, {1, 0}, Block::None}}),
               InvariantError);
}

TEST(GradedBundle, SpDerivesDualSide) {
  auto e = GradedBundle<std::int64_t>::make(GroupType::sp(2), {Sum{Weight{-3}, {1, 2}, Block::V},
                                                              Sum{Weight{1}, {1, 0}, Block::V}});
  ASSERT_EQ(e.full().size(), 4u);
  EXPECT_EQ(e.full()[0].weight.twice_m, -3);
  EXPECT_EQ(e.full()[1].weight.twice_m, -1);
  EXPECT_EQ(e.full()[1].block, Block::Vdual);
  EXPECT_EQ(e.full()[3].cls.degree, -2);
}

TEST(Adjoint, Su22FirstCaseTable) {
  // weights -3/2..3/2 with degrees a, b, c, -(a+b+c)
  auto e = GradedBundle<std::int64_t>::make(
      GroupType::su(2), {Sum{Weight{-3}, {1, 2}, Block::V}, Sum{Weight{-1}, {1, 1}, Block::Vprime},
                         Sum{Weight{1}, {1, -1}, Block::V}, Sum{Weight{3}, {1, -2}, Block::Vprime}});
  auto ad = adjoint_decomposition(e);
  EXPECT_EQ(ad.rank(3), 1);
  EXPECT_EQ(ad.degree(3), -4);
  EXPECT_EQ(ad.rank(2), 2);
  EXPECT_EQ(ad.rank(0), 3);
  EXPECT_EQ(ad.degree(0), 0);
}

TEST(Adjoint, MatchesIndependentOracleOnRandomBundles) {
  std::mt19937_64 rng(2024);
  const GroupType groups[] = {GroupType::su(2), GroupType::su(3), GroupType::sp(2), GroupType::sp(3),
                              GroupType::sl(2), GroupType::sl(4)};
  for (int it = 0; it < 3000; ++it) {
    const auto& g = groups[it % 6];
    auto e = random_graded_bundle(g, rng);
    auto ad = adjoint_decomposition(e);
    auto oracle = adjoint_oracle(e);
    ASSERT_EQ(ad.entries.size(), oracle.size()) << g.name();
    for (const auto& [k, cls] : oracle) {
      EXPECT_EQ(ad.rank(k), cls.rank) << g.name() << " k=" << k;
      EXPECT_EQ(ad.degree(k), cls.degree) << g.name() << " k=" << k;
    }
    auto chk = total_rank_degree_check(ad);
    EXPECT_TRUE(chk.ok()) << g.name();
    EXPECT_EQ(chk.rank_sum, g.complex_dimension());
  }
}

TEST(Adjoint, CompactAndNoncompactParts) {
  auto e = GradedBundle<std::int64_t>::make(
      GroupType::su(2), {Sum{Weight{-1}, {2, 3}, Block::V}, Sum{Weight{1}, {2, -3}, Block::Vprime}});
  auto ad = adjoint_decomposition(e);
  EXPECT_EQ(ad.compact_weights(), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(ad.noncompact_weights(), (std::vector<std::int64_t>{-1, 1}));
}

// End(E*) = End(E) weight by weight, so the dual fixed point has the same
// graded adjoint while deg V changes sign.
TEST(Adjoint, DualFixedPointKeepsAdjointAndFlipsD) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 300; ++it) {
    auto e = random_graded_bundle(it % 2 ? GroupType::su(2) : GroupType::sp(2), rng);
    auto de = dual_fixed_point(e);
    auto ad = adjoint_decomposition(e);
    auto add = adjoint_decomposition(de);
    EXPECT_EQ(add.entries.size(), ad.entries.size());
    for (const auto& [k, en] : ad.entries) {
      EXPECT_EQ(add.rank(k), en.total.rank);
      EXPECT_EQ(add.degree(k), en.total.degree);
    }
    EXPECT_EQ(de.block_class(Block::V).degree, -e.block_class(Block::V).degree);
  }
}

TEST(Adjoint, SymbolicDegreesStayLinear) {
  using S = GradedSummand<LinearForm>;
  auto e = GradedBundle<LinearForm>::make(
      GroupType::su(2), {S{Weight{-2}, {1, LinearForm::variable(0)}, Block::V},
                         S{Weight{0}, {2, LinearForm::variable(1)}, Block::Vprime},
                         S{Weight{2}, {1, LinearForm::variable(2)}, Block::V}});
  auto ad = adjoint_decomposition(e);
  EXPECT_EQ(ad.rank(2), 1);
  auto d2 = ad.degree(2);
  EXPECT_EQ(d2.coefficient(0), Rational(-1));
  EXPECT_EQ(d2.coefficient(2), Rational(1));
}
