#include "conlag/figures.hpp"
#include "conlag/table.hpp"
#include "conlag/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(conlag::format_double(1.0), "1");
  EXPECT_EQ(conlag::format_double(-0.5), "-0.5");
  EXPECT_EQ(conlag::format_double(0.1 + 0.2), "0.30000000000000004");
}

TEST(Table, Examples) {
  const std::array<double, 1> one{1.0};
  const auto t = conlag::build_table({1, 0}, one, 0, 1, 2);
  EXPECT_EQ(conlag::to_csv(t), "x,L_{1}^{0}(alpha=1)\n0,1\n1,0\n");

  const auto fig11 = conlag::build_table({3, 3}, one, 0, 4, 5);
  EXPECT_EQ(fig11.rows.front()[1], 20.0);

  const std::array<double, 1> half{0.5};
  const auto l2 = conlag::build_table({2, 0}, half, 0, 1, 2);
  EXPECT_NEAR(l2.rows.back()[1], -1.0, 1e-15);
}

TEST(Table, Invariants) {
  const std::array<double, 4> alphas{0.25, 0.5, 0.75, 1.0};
  const auto t = conlag::build_table({4, 2}, alphas, 0.5, 8, 37);
  ASSERT_EQ(t.rows.size(), 37u);
  EXPECT_EQ(t.columns.size(), 5u);
  EXPECT_EQ(t.rows.back()[0], 8.0);
  for (std::size_t i = 1; i < t.rows.size(); ++i) EXPECT_LT(t.rows[i - 1][0], t.rows[i][0]);
  for (const auto& row : t.rows)
    for (double v : row) EXPECT_TRUE(std::isfinite(v));
}

TEST(Table, UsageErrors) {
  const std::array<double, 1> one{1.0};
  const std::array<double, 1> bad{1.5};
  EXPECT_THROW((void)conlag::build_table({1, 0}, one, -1, 1, 5), conlag::domain_error);
  EXPECT_THROW((void)conlag::build_table({1, 0}, one, 0, 1, 1), conlag::domain_error);
  EXPECT_THROW((void)conlag::build_table({1, 0}, one, 2, 1, 5), conlag::domain_error);
  EXPECT_THROW((void)conlag::build_table({1, 0}, bad, 0, 1, 5), conlag::domain_error);
}

TEST(Figures, CaptionsMatchExactPolynomialsInXSpace) {
  for (const auto& cap : conlag::figure_captions()) {
    const auto p = conlag::assoc_closed(cap.n, cap.m);
    for (double a : {0.3, 0.5, 0.75, 1.0})
      for (double x : {0.0, 0.4, 1.0, 2.5}) {
        const double direct = cap.formula(x, a);
        EXPECT_NEAR(conlag::eval(p, x, conlag::AlphaValue(a)), direct, 1e-11 * (1 + std::abs(direct)))
            << "figure " << cap.figure;
      }
  }
}

TEST(Verify, AllSuitesPass) {
  const auto report = conlag::run_verify("all");
  for (const auto& e : report.entries) EXPECT_TRUE(e.passed) << e.module << "/" << e.name << ": " << e.detail;
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.failures(), 0u);
}

TEST(Verify, ScopesSelectModules) {
  auto names = [](const conlag::VerifyReport& r) {
    std::vector<std::string> out;
    for (const auto& e : r.entries) out.push_back(e.name);
    return out;
  };
  const auto laplace = names(conlag::run_verify("laplace"));
  for (const char* expected : {"round-trip", "shift", "s-domain-residual"})
    EXPECT_NE(std::find(laplace.begin(), laplace.end(), expected), laplace.end()) << expected;
  const auto integrate = names(conlag::run_verify("integrate"));
  EXPECT_NE(std::find(integrate.begin(), integrate.end(), "orthogonality-identity-11x11"), integrate.end());
  EXPECT_THROW((void)conlag::run_verify("nonsense"), conlag::domain_error);
}

TEST(Verify, FailureIsReportedNotThrown) {
  conlag::VerifyReport r;
  r.entries.push_back({"m", "a", true, ""});
  r.entries.push_back({"m", "b", false, "broken"});
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(r.failures(), 1u);
}
