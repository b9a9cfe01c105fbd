#include <gtest/gtest.h>

#include <random>

#include "higgs/fourier_motzkin.hpp"

using namespace higgs;

namespace {

struct RawRow {
  std::vector<std::int64_t> a;
  std::int64_t b;
  bool strict;
};

bool brute_ok(const std::vector<RawRow>& rows, const std::vector<std::int64_t>& x) {
  for (const auto& r : rows) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += r.a[j] * x[j];
    if (r.strict ? !(s < r.b) : !(s <= r.b)) return false;
  }
  return true;
}

}  // namespace

// Random small systems inside the box [-12, 12]^n against exhaustive search.
TEST(FourierMotzkin, AgreesWithBruteForceOnBoxes) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3), rhs(-15, 15);
  std::uniform_int_distribution<int> nrows(1, 5);
  int feasible = 0, infeasible = 0;
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = 2 + it % 2;
    std::vector<RawRow> raw;
    for (int k = nrows(rng); k > 0; --k) {
      RawRow r{std::vector<std::int64_t>(n), rhs(rng), k % 3 == 0};
      for (auto& c : r.a) c = coef(rng);
      raw.push_back(r);
    }
    LinearSystem s(n);
    for (std::size_t j = 0; j < n; ++j) {
      s.add_le(LinearForm::variable(j) - LinearForm(12), "box hi");
      s.add_ge(LinearForm::variable(j) + LinearForm(12), "box lo");
    }
    for (const auto& r : raw) {
      LinearForm f(-r.b);
      for (std::size_t j = 0; j < n; ++j) f = f + Rational(r.a[j]) * LinearForm::variable(j);
      if (r.strict) s.add_lt(f, "row");
      else s.add_le(f, "row");
    }
    std::int64_t count = 0;
    std::vector<std::int64_t> x(n, -12);
    for (;;) {
      if (brute_ok(raw, x)) ++count;
      std::size_t j = 0;
      while (j < n && x[j] == 12) x[j++] = -12;
      if (j == n) break;
      ++x[j];
    }
    auto res = integer_feasibility(s);
    ASSERT_NE(res.status, Feasibility::NeedsExplicitBound);
    EXPECT_EQ(res.status == Feasibility::Feasible, count > 0);
    if (res.status == Feasibility::Feasible) {
      ++feasible;
      EXPECT_TRUE(brute_ok(raw, res.witness));
      EXPECT_TRUE(s.satisfied_by(res.witness));
    } else {
      ++infeasible;
      if (res.certificate) {
        EXPECT_TRUE(verify_certificate(s, *res.certificate));
      }
    }
    std::int64_t visited = 0;
    auto scan = for_each_integer_point(s, [&](const std::vector<std::int64_t>& p) {
      EXPECT_TRUE(brute_ok(raw, p));
      ++visited;
      return true;
    });
    EXPECT_TRUE(scan.completed);
    EXPECT_EQ(visited, count);
  }
  EXPECT_GT(feasible, 20);
  EXPECT_GT(infeasible, 20);
}

TEST(FourierMotzkin, IntegerGapWithoutRationalCertificate) {
  // 2x = 1 has a rational point but no integer one.
  LinearSystem s(1, {"x"});
  s.add_eq(Rational(2) * LinearForm::variable(0) - LinearForm(1), "2x = 1");
  auto res = integer_feasibility(s);
  EXPECT_EQ(res.status, Feasibility::Infeasible);
}

TEST(FourierMotzkin, UnboundedIsReportedNotTruncated) {
  LinearSystem s(2, {"x", "y"});
  s.add_le(LinearForm::variable(0) - LinearForm::variable(1), "x <= y");
  s.add_eq(LinearForm::variable(0) + LinearForm::variable(1) - LinearForm(1), "x + y = 1");
  auto res = integer_feasibility(s);
  EXPECT_NE(res.status, Feasibility::Infeasible);
}

TEST(FourierMotzkin, StrictRowsTightenToIntegers) {
  LinearSystem s(1, {"x"});
  s.add_lt(LinearForm::variable(0), "x < 0");
  s.add_gt(LinearForm::variable(0) + LinearForm(1), "x > -1");
  auto res = integer_feasibility(s);
  EXPECT_EQ(res.status, Feasibility::Infeasible);
  ASSERT_TRUE(res.certificate.has_value());
  EXPECT_TRUE(verify_certificate(s, *res.certificate));
}

TEST(FourierMotzkin, CorruptedCertificateIsRejected) {
  LinearSystem s(1, {"x"});
  s.add_le(LinearForm::variable(0) - LinearForm(1), "x <= 1");
  s.add_ge(LinearForm::variable(0) - LinearForm(3), "x >= 3");
  auto cert = rational_infeasibility(s);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_certificate(s, *cert));
  auto bad = *cert;
  bad.lambda[0] = Rational(-1);
  EXPECT_FALSE(verify_certificate(s, bad));
}
