#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "mdr/error.hpp"
#include "mdr/lorentz.hpp"
#include "mdr/report.hpp"
#include "mdr/verify.hpp"

using namespace mdr;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// ||f_1 + ... + f_M|| / M from the closed form: the sum takes the value
// c_k = 2^{k+1} - 2 on A_k* \ A_{k+1}*, |A_k*| = 2^{-kp}, and ||f_k|| = 1.
Big indexp_oracle(double p, std::size_t m) {
  const Big bp = p;
  Big acc = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    const Big c = pow(Big(2), static_cast<int>(k + 1)) - 2;
    const Big mk = pow(Big(2), -Big(static_cast<int>(k)) * bp);
    const Big next = k == m ? Big(0) : pow(Big(2), -Big(static_cast<int>(k + 1)) * bp);
    acc += pow(c, bp) * (mk - next);
  }
  return pow(acc, 1 / bp) / static_cast<int>(m);
}

}  // namespace

TEST(InequalitySuite, TheoremBackedPropertiesHold) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const auto rep = run_inequality_suite(seed, 60);
    EXPECT_TRUE(rep.theorem_backed_pass()) << to_json(rep).dump(1);
    for (const auto& p : rep.properties) {
      EXPECT_GT(p.checked, 0u) << p.name;
      if (p.theorem_backed) {
        EXPECT_EQ(p.failed, 0u) << p.name << ": " << p.witness.value_or("");
      }
    }
    ASSERT_NE(rep.find("hardy_littlewood_upper"), nullptr);
    ASSERT_NE(rep.find("subadditivity_sharp"), nullptr);
    EXPECT_FALSE(rep.find("subadditivity_sharp")->theorem_backed);
    EXPECT_FALSE(rep.find("symmetry")->theorem_backed);
  }
}

TEST(InequalitySuite, DeterministicInSeed) {
  const auto a = to_json(run_inequality_suite(5, 30)).dump();
  const auto b = to_json(run_inequality_suite(5, 30)).dump();
  const auto c = to_json(run_inequality_suite(6, 30)).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(InequalitySuite, RecorderSemantics) {
  SuiteReport rep;
  SuiteRecorder rec(rep);
  rec.inequality("le", true, 1.0, 2.0, 0.0, 0);
  rec.inequality("le", true, 2.0, 2.0, 0.0, 1);
  rec.inequality("le", true, 3.0, 2.0, 0.5, 2);
  rec.identity("eq", false, 1.0, 1.0 + 1e-9, 1e-12, 3, "x");
  rec.boolean("ok", true, true, 4);
  const auto* le = rep.find("le");
  ASSERT_NE(le, nullptr);
  EXPECT_EQ(le->checked, 3u);
  EXPECT_EQ(le->failed, 1u);
  EXPECT_EQ(le->strict, 1u);
  EXPECT_EQ(le->worst_margin, -1.0);
  EXPECT_TRUE(le->witness.has_value());
  EXPECT_EQ(rep.find("eq")->failed, 1u);
  EXPECT_FALSE(rep.theorem_backed_pass());
}

TEST(Refine, SplitsCells) {
  const GridSpec s{0.0, 0.0, 1.0, 2.0, 2, 1};
  const auto f = refine(GridFunction2D(s, {3, 5}), 2);
  EXPECT_EQ(f.cols(), 4u);
  EXPECT_EQ(f.rows(), 2u);
  EXPECT_EQ(f.spec().dx, 0.5);
  EXPECT_EQ(f.spec().dy, 1.0);
  EXPECT_EQ(f(1, 1), 3);
  EXPECT_EQ(f(2, 0), 5);
}

TEST(Harlit, ExactIntegrals) {
  const auto r = reproduce_harlit();
  EXPECT_EQ(r.middle, 3.0);
  EXPECT_EQ(r.classical_over_d, 3.0);
  EXPECT_EQ(r.sup_lower_bound, 2.0);
  EXPECT_EQ(r.analytic_bound, 2.0);
  EXPECT_GT(r.sets_searched, 0u);
  ASSERT_EQ(r.tail.size(), 4u);
  const double two_d[] = {2.0, 1.5, 0.75, 0.375};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(r.tail[k].classical, 2.0) << r.tail[k].eps;
    EXPECT_EQ(r.tail[k].two_d, two_d[k]) << r.tail[k].eps;
  }
}

TEST(Equirear, SameClassicalDifferent2D) {
  const auto r = reproduce_equirear();
  EXPECT_TRUE(r.classical_equal);
  EXPECT_FALSE(r.two_d_equal);
  EXPECT_TRUE(r.f_fixed);
  EXPECT_TRUE(r.g_fixed);
  EXPECT_EQ(r.f_star, StepFunction1D(1.0, {1, 1, 0, 0}));
}

TEST(Wconst, ConstantWeightOnly) {
  const auto c = reproduce_wconst(Weight2D::constant(2.0), 1.0);
  EXPECT_EQ(c.measure_r, 9.0);
  EXPECT_EQ(c.measure_a, 9.0);
  EXPECT_TRUE(c.equal);
  EXPECT_DOUBLE_EQ(c.norm_r, 18.0);
  const auto x1 = reproduce_wconst(Weight2D::power(1.0, 0.0), 1.0);
  // R* = 3 columns of 3: 3 * (0.5 + 1.5 + 2.5); A* = heights [3, 3, 2, 1].
  EXPECT_DOUBLE_EQ(x1.norm_r, 13.5);
  EXPECT_DOUBLE_EQ(x1.norm_a, 3 * 0.5 + 3 * 1.5 + 2 * 2.5 + 3.5);
  EXPECT_FALSE(x1.equal);
  const auto x2 = reproduce_wconst(Weight2D::power(1.0, 0.0), 2.0, 4, 2, 0.5);
  EXPECT_FALSE(x2.equal);
}

TEST(Counterexamples, AllChecksPass) {
  const auto r = run_counterexamples(0);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(to_json(r).dump(), to_json(run_counterexamples(0)).dump());
}

TEST(Indexp, UnitTermsAndClosedForm) {
  for (double p : {0.5, 0.25, 0.75, 1.0}) {
    const auto rec = indexp_growth(p, 200);
    for (double n : rec.term_norms) EXPECT_NEAR(n, 1.0, 1e-12);
    for (std::size_t m : {1u, 2u, 3u, 10u, 64u, 200u}) {
      const double expect = static_cast<double>(indexp_oracle(p, m));
      EXPECT_NEAR(rec.ratios[m - 1], expect, 1e-12 * expect) << p << " " << m;
    }
  }
}

TEST(Indexp, FrozenRatiosAndGrowth) {
  const auto rec = indexp_growth(0.5, 4096);
  EXPECT_NEAR(rec.ratios[3], 1.45007402455684, 1e-13);
  EXPECT_NEAR(rec.ratios[15], 3.42035463286256, 1e-13);
  EXPECT_NEAR(rec.ratios[63], 11.6280452556943, 1e-12);
  EXPECT_GT(rec.ratios.back(), 10.0);
  for (std::size_t k = 1; k < rec.ratios.size(); ++k) EXPECT_GE(rec.ratios[k], rec.ratios[k - 1]);
  // ratio / N tends to (sqrt 2 - 1)^2 rather than staying above 1/4.
  const double limit = (std::sqrt(2.0) - 1.0) * (std::sqrt(2.0) - 1.0);
  EXPECT_NEAR(rec.ratios.back() / 4096.0, limit, 0.01 * limit);
  EXPECT_LT(rec.ratios[63] / 64.0, 0.25);
  EXPECT_GE(rec.ratios[15] / 16.0, 0.125);
}

TEST(Indexp, TriangleAtPOne) {
  const auto rec = indexp_growth(1.0, 1000);
  for (double r : rec.ratios) EXPECT_LE(r, 1.0 + 1e-12);
  const auto checks = indexp_checks(rec);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_THROW(indexp_growth(1.5, 4), DomainError);
  EXPECT_THROW(indexp_growth(0.5, 0), DomainError);
  EXPECT_THROW(indexp_growth(0.5, 20000), DomainError);
}

TEST(Indexp, GridCrossCheckAtPOne) {
  // A_k = (0, 2^-k) x (0, 1) on columns of width 2^-N, f_k = 2^k chi_{A_k}.
  const std::size_t n = 8;
  const std::size_t cols = std::size_t{1} << n;
  const GridSpec spec{0.0, 0.0, 1.0 / static_cast<double>(cols), 1.0, cols, 1};
  std::vector<double> sum(cols, 0.0);
  double terms = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<double> fk(cols, 0.0);
    for (std::size_t i = 0; i < (cols >> k); ++i) fk[i] = std::ldexp(1.0, static_cast<int>(k));
    for (std::size_t i = 0; i < cols; ++i) sum[i] += fk[i];
    terms += lorentz_norm_2d(GridFunction2D(spec, fk), Weight2D::constant(), 1.0);
  }
  const double whole = lorentz_norm_2d(GridFunction2D(spec, sum), Weight2D::constant(), 1.0);
  EXPECT_DOUBLE_EQ(terms, static_cast<double>(n));
  EXPECT_DOUBLE_EQ(whole / terms, indexp_growth(1.0, n).ratios.back());
}

TEST(Asymmetry, DemoAndSearch) {
  const auto d = asymmetry_demo();
  EXPECT_TRUE(d.differs);
  EXPECT_EQ(d.y_then_x.at(1, 0), 1);
  EXPECT_EQ(d.x_then_y.at(0, 1), 1);
  const auto decreasing = asymmetry_demo(
      Decreasing2DGridFunction(1.0, 1.0, 2, 2, {3, 1, 2, 1}).as_grid_function());
  EXPECT_FALSE(decreasing.differs);
  const auto found = asymmetry_search(0, 10000);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(found->differs);
  EXPECT_EQ(asymmetry_search(0, 10000)->input, found->input);
}
