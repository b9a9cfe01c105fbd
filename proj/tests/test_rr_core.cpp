#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "higgs/linear_form.hpp"
#include "higgs/rational.hpp"
#include "higgs/rr_core.hpp"

using namespace higgs;

TEST(Rational, NormalizesToLowestTerms) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t n = d(rng), m = d(rng);
    if (m == 0) continue;
    Rational r(n, m);
    EXPECT_GT(r.den(), 0);
    EXPECT_EQ(std::gcd(r.num(), r.den()), n == 0 ? r.den() : 1);
    // cross-multiplication oracle
    EXPECT_EQ(static_cast<__int128>(r.num()) * m, static_cast<__int128>(n) * r.den());
  }
}

TEST(Rational, ArithmeticMatchesCrossMultiplication) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-500, 500);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (b == 0 || e == 0) continue;
    Rational x(a, b), y(c, e);
    EXPECT_EQ(x + y, Rational(a * e + c * b, b * e));
    EXPECT_EQ(x - y, Rational(a * e - c * b, b * e));
    EXPECT_EQ(x * y, Rational(a * c, b * e));
    if (c != 0) {
      EXPECT_EQ(x / y, Rational(a * e, b * c));
    }
    EXPECT_EQ(x < y, static_cast<__int128>(a) * b * e * e < static_cast<__int128>(c) * e * b * b);
  }
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(6, 3).floor(), 2);
  EXPECT_EQ(Rational(-3, 4).str(), "-3/4");
}

TEST(Rational, ZeroDenominatorAndOverflowThrow) {
  EXPECT_THROW(Rational(1, 0), DomainError);
  Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), OverflowError);
  EXPECT_THROW(big * Rational(2), OverflowError);
}

TEST(LinearForm, AffineArithmeticAndRendering) {
  LinearForm x = LinearForm::variable(0), y = LinearForm::variable(1);
  LinearForm f = Rational(2) * x - y + LinearForm(3);
  EXPECT_EQ(f.coefficient(0), Rational(2));
  EXPECT_EQ(f.coefficient(1), Rational(-1));
  EXPECT_EQ(f.constant(), Rational(3));
  EXPECT_EQ(f.str({"a", "b"}), "2*a - b + 3");
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_TRUE(LinearForm(5).is_constant());
}

TEST(Curve, RejectsGenusBelowTwo) {
  EXPECT_THROW(Curve(1), DomainError);
  EXPECT_THROW(Curve(0), DomainError);
  EXPECT_EQ(Curve(4).g1(), 3);
}

// Splitting-principle oracle: a class of rank r and degree d behaves like a
// sum of r lines whose degrees add up to d.
namespace {
std::vector<std::int64_t> split(std::int64_t r, std::int64_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> u(-5, 5);
  std::vector<std::int64_t> out(r);
  std::int64_t s = 0;
  for (std::int64_t i = 0; i + 1 < r; ++i) s += out[i] = u(rng);
  out[r - 1] = d - s;
  return out;
}
}  // namespace

TEST(BundleClass, OperationsMatchSplittingPrinciple) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> rk(1, 5), dg(-12, 12);
  for (int it = 0; it < 500; ++it) {
    std::int64_t r1 = rk(rng), r2 = rk(rng), d1 = dg(rng), d2 = dg(rng);
    auto a = split(r1, d1, rng), b = split(r2, d2, rng);
    BundleClass e{r1, d1}, f{r2, d2};

    std::int64_t s2rank = 0, s2deg = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i; j < a.size(); ++j) ++s2rank, s2deg += a[i] + a[j];
    EXPECT_EQ(sym2(e), (BundleClass{s2rank, s2deg}));

    std::int64_t trank = 0, tdeg = 0, hdeg = 0;
    for (auto x : a)
      for (auto y : b) ++trank, tdeg += x + y, hdeg += y - x;
    EXPECT_EQ(tensor(e, f), (BundleClass{trank, tdeg}));
    EXPECT_EQ(hom(e, f), (BundleClass{trank, hdeg}));
    EXPECT_EQ(det(e), (BundleClass{1, std::accumulate(a.begin(), a.end(), std::int64_t{0})}));
    EXPECT_EQ(dual(e), (BundleClass{r1, -d1}));
    EXPECT_EQ(e + f, (BundleClass{r1 + r2, d1 + d2}));
  }
}

TEST(BundleClass, SlopeAndSymbolicDegrees) {
  EXPECT_EQ(slope(BundleClass{4, 6}), Rational(3, 2));
  EXPECT_THROW(slope(BundleClass{0, 1}), DomainError);
  BasicBundleClass<LinearForm> v{2, LinearForm::variable(0)};
  auto s = sym2(v);
  EXPECT_EQ(s.rank, 3);
  EXPECT_EQ(s.degree.coefficient(0), Rational(3));
}

TEST(RiemannRoch, EulerCharacteristic) {
  for (std::int64_t g = 2; g <= 6; ++g) {
    Curve c(g);
    EXPECT_EQ(euler_char(BundleClass{1, 0}, c), 1 - g);
    EXPECT_EQ(euler_char(canonical(c), c), g - 1);
    // h0 - h1 with Serre duality on K: g - 1
    EXPECT_EQ(h0_line(canonical(c), c, LineTag::Canonical) - h0_line(trivial_line(), c, LineTag::Trivial), g - 1);
    for (std::int64_t d = 2 * g - 1; d < 4 * g; ++d) EXPECT_EQ(h0_line(BundleClass{1, d}, c), euler_char(BundleClass{1, d}, c));
    EXPECT_EQ(h0_line(BundleClass{1, -1}, c), 0);
  }
}

TEST(RiemannRoch, UndeterminedH0IsAnError) {
  Curve c(3);
  EXPECT_THROW(h0_line(BundleClass{1, 2}, c), DomainError);
  EXPECT_THROW(h0_line(BundleClass{2, 10}, c), DomainError);
  EXPECT_THROW(h0_line(BundleClass{1, 3}, c, LineTag::Trivial), DomainError);
}
