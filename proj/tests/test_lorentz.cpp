#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "mdr/error.hpp"
#include "mdr/family.hpp"
#include "mdr/lorentz.hpp"
#include "mdr/rearrange.hpp"
#include "oracles.hpp"

using namespace mdr;

namespace {

// Independent double integral of s^a t^b by nested adaptive quadrature.
double quad_power(double a, double b, const Rect& r) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto inner = [&](double s) {
    return std::pow(s, a) * ts.integrate([&](double t) { return std::pow(t, b); }, r.t0, r.t1);
  };
  return ts.integrate(inner, r.s0, r.s1);
}

GridFunction2D harlit() {
  return GridFunction2D::from_row_major(GridSpec::unit(6, 2),
                                        std::vector<double>{0, 0, 0, 2, 1, 1,  //
                                                            0, 0, 0, 0, 1, 1});
}

}  // namespace

TEST(Weight, PowerIntegralsMatchQuadrature) {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.5, 2.0}, {-0.5, 0.25}, {3.0, -0.75}}) {
    const auto w = Weight2D::power(a, b, 2.0);
    for (const Rect& r : {Rect{0, 1, 0, 1}, Rect{0.5, 2.0, 1.0, 3.0}, Rect{0, 0.25, 2, 2.5}}) {
      const double expect = 2.0 * quad_power(a, b, r);
      EXPECT_NEAR(w.integrate(r), expect, 1e-9 * std::max(1.0, expect)) << a << " " << b;
    }
  }
}

TEST(Weight, StepWeightsIntegrateOverlaps) {
  const auto v = Weight2D::vertical(StepFunction1D(0.5, {4.0, 2.0, 1.0}));
  // t in [0.25, 1.25): 0.25*4 + 0.5*2 + 0.25*1 = 2.25, times width 3.
  EXPECT_DOUBLE_EQ(v.integrate(Rect{1, 4, 0.25, 1.25}), 6.75);
  EXPECT_DOUBLE_EQ(v.at(7.0, 0.6), 2.0);
  EXPECT_THROW(v.integrate(Rect{0, 1, 0, 2}), CoverageError);
  EXPECT_THROW(v.at(0.0, 1.6), CoverageError);

  const GridSpec s{1.0, 0.0, 1.0, 2.0, 2, 1};
  const auto g = Weight2D::grid(GridFunction2D(s, {3.0, 5.0}));
  EXPECT_DOUBLE_EQ(g.integrate(Rect{1.5, 2.5, 0.0, 1.0}), 0.5 * 3 + 0.5 * 5);
  EXPECT_THROW(g.integrate(Rect{0.0, 1.5, 0.0, 1.0}), CoverageError);
  EXPECT_TRUE(g.covers(Rect{1.0, 3.0, 0.0, 2.0}));
}

TEST(Weight, FactoriesRejectNonpositive) {
  EXPECT_THROW(Weight2D::constant(0.0), DomainError);
  EXPECT_THROW(Weight2D::power(-1.0, 0.0), DomainError);
  EXPECT_THROW(Weight2D::vertical(StepFunction1D(1.0, {1.0, 0.0})), DomainError);
  EXPECT_THROW(Weight2D::grid(GridFunction2D(GridSpec::unit(1, 1), {0.0})), DomainError);
}

TEST(Weight, SampledIsExactForLinear) {
  const auto w = Weight2D::sampled([](double s, double t) { return s + t; },
                                   GridSpec::anchored(0.5, 0.5, 8, 8));
  // int over [0,2)x[0,3) of (s + t) = 3*2 + 2*4.5 = 15.
  EXPECT_NEAR(w.integrate(Rect{0, 2, 0, 3}), 15.0, 1e-12);
}

TEST(LorentzNorm, ConstantWeightEqualsLebesgue) {
  EXPECT_DOUBLE_EQ(lorentz_norm_2d(harlit(), Weight2D::constant(), 1.0), 6.0);
  EXPECT_DOUBLE_EQ(lebesgue_norm(harlit(), 1.0), 6.0);
  Rng rng = make_rng(5);
  RandomGridOptions opts;
  opts.integer_values = false;
  opts.max_cols = 12;
  opts.max_rows = 12;
  opts.dx = 0.5;
  opts.dy = 1.5;
  for (int c = 0; c < 100; ++c) {
    const auto f = random_grid_function(rng, opts);
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
      const double expect = oracle::lebesgue(oracle::to_matrix(f), p, 0.75);
      EXPECT_NEAR(lorentz_norm_2d(f, Weight2D::constant(), p), expect, 1e-12 * expect + 1e-300);
      EXPECT_NEAR(lebesgue_norm(f, p), expect, 1e-12 * expect + 1e-300);
    }
  }
}

TEST(LorentzNorm, PowerWeightHandValue) {
  // f*_2 of the Harlit function with w = s: int over the cells of
  // (value * (i + 1/2)): 2*0.5 + 1*0.5 + 1*1.5 + 1*1.5 + 1*2.5 = 7.
  EXPECT_DOUBLE_EQ(lorentz_norm_2d(harlit(), Weight2D::power(1.0, 0.0), 1.0), 7.0);
  // p = 2: (4*0.5 + 0.5 + 1.5 + 1.5 + 2.5)^(1/2).
  EXPECT_DOUBLE_EQ(lorentz_norm_2d(harlit(), Weight2D::power(1.0, 0.0), 2.0), std::sqrt(8.0));
  EXPECT_EQ(lorentz_norm_2d(GridFunction2D::zeros(GridSpec::unit(2, 2)), Weight2D::constant(),
                            1.0),
            0.0);
  EXPECT_THROW(lorentz_norm_2d(harlit(), Weight2D::constant(), 0.0), DomainError);
}

TEST(LorentzNorm, ClassicalNorm) {
  const StepFunction1D v(1.0, {3.0, 2.0, 1.0, 1.0, 1.0});
  // f* = 2, 1, 1, 1, 1; p = 1: 2*3 + 2 + 1 + 1 + 1 = 11.
  EXPECT_DOUBLE_EQ(classical_lorentz_norm(harlit(), v, 1.0), 11.0);
  // v on a finer partition than f*.
  const StepFunction1D fine(0.5, {2, 2, 2, 2, 1, 1, 1, 1, 1, 1});
  EXPECT_DOUBLE_EQ(classical_lorentz_norm(harlit(), fine, 1.0), 2 * 2 + 1 * 2 + 1 * 1 + 1 + 1);
  EXPECT_THROW(classical_lorentz_norm(harlit(), StepFunction1D(1.0, {1, 1}), 1.0), CoverageError);
  const std::vector<double> vals{0, 1, 4};
  EXPECT_DOUBLE_EQ(classical_lorentz_norm_1d(vals, 1.0, StepFunction1D(1.0, {1, 1}), 2.0),
                   std::sqrt(17.0));
}

TEST(Doubling, ConstantsForStandardWeights) {
  const auto family = enumerate_staircases(3, 3, 1.0, 1.0);
  EXPECT_EQ(family.size(), 19u);  // C(6,3) - 1
  const auto c = check_quasinorm_doubling(Weight2D::constant(2.0), family);
  EXPECT_DOUBLE_EQ(c.constant, 1.0);
  // w(2x) = 2^(a+b) w(x) for power weights.
  const auto p = check_quasinorm_doubling(Weight2D::power(1.0, 0.5), family);
  for (double r : p.ratios) EXPECT_NEAR(r, std::pow(2.0, 1.5), 1e-12);
  // v(2t) <= v(t) for nonincreasing v: C <= 1, attained on low sets.
  const auto v = check_quasinorm_doubling(
      Weight2D::vertical(StepFunction1D(1.0, {6, 5, 4, 3, 2, 1})), family);
  EXPECT_LE(v.constant, 1.0);
  EXPECT_THROW(check_quasinorm_doubling(Weight2D::constant(), {}), DomainError);
}

TEST(Submodularity, TermsByHand) {
  const GridSpec s = GridSpec::unit(2, 2);
  const auto a = GridSet2D::box(s, 0, 1, 0, 2);
  const auto b = GridSet2D::box(s, 0, 2, 0, 1);
  const auto t = submodularity_terms(Weight2D::power(1.0, 0.0), a, b);
  // A* = B* stacks: A* = column 0 height 2 -> 0.5 + 0.5; B* heights [1,1] -> 0.5 + 1.5.
  EXPECT_DOUBLE_EQ(t.w_a, 1.0);
  EXPECT_DOUBLE_EQ(t.w_b, 2.0);
  EXPECT_DOUBLE_EQ(t.w_intersection, 0.5);
  EXPECT_DOUBLE_EQ(t.w_union, 0.5 + 0.5 + 1.5);
}

TEST(Submodularity, ConstructionsSeparateWeights) {
  const auto pairs = submodularity_constructions(4, 3, 2, 3, 1.0, 1.0);
  ASSERT_EQ(pairs.size(), 3u);
  const auto x1 = check_norm_submodularity(Weight2D::power(1.0, 0.0), pairs);
  const auto x2 = check_norm_submodularity(Weight2D::power(0.0, 1.0), pairs);
  const auto v = check_norm_submodularity(
      Weight2D::vertical(StepFunction1D(1.0, {4, 3, 2, 1})), pairs);
  EXPECT_FALSE(x1.empty());
  EXPECT_FALSE(x2.empty());
  EXPECT_TRUE(v.empty());
  EXPECT_THROW(submodularity_constructions(2, 3, 1, 2, 1.0, 1.0), DomainError);
}

TEST(Factorization, Verdicts) {
  const GridSpec box = GridSpec::anchored(1.0, 1.0, 4, 4);
  const auto v = check_weight_factorization(
      Weight2D::vertical(StepFunction1D(1.0, {4, 3, 2, 1})), box);
  EXPECT_TRUE(v.factors);
  ASSERT_TRUE(v.profile.has_value());
  EXPECT_EQ(*v.profile, (std::vector<double>{4, 3, 2, 1}));

  const auto up = check_weight_factorization(Weight2D::power(0.0, 1.0), box);
  EXPECT_FALSE(up.factors);
  EXPECT_TRUE(up.profile.has_value());
  EXPECT_EQ(up.witness->second, 1u);

  const auto x1 = check_weight_factorization(Weight2D::power(1.0, 0.0), box);
  EXPECT_FALSE(x1.factors);
  EXPECT_FALSE(x1.profile.has_value());
  EXPECT_EQ(x1.witness->first, 1u);
}

TEST(Embedding, SupRatioAndIntegral) {
  const auto family = enumerate_staircases(3, 3, 1.0, 1.0);
  const auto one = Weight2D::constant();
  const auto same = embedding_sup_ratio(one, one, 2.0, 2.0, family);
  EXPECT_NEAR(same.sup, 1.0, 1e-15);
  for (std::size_t k = 0; k < family.size(); ++k) {
    EXPECT_NEAR(same.ratios[k], same.norm_ratios[k], 1e-12);
  }
  // |D|^(1/2) / |D| is largest on the smallest set.
  const auto mixed = embedding_sup_ratio(one, one, 1.0, 2.0, family);
  EXPECT_DOUBLE_EQ(mixed.sup, 1.0);
  EXPECT_EQ(family[mixed.witness].cell_count(), 1u);
  EXPECT_THROW(embedding_sup_ratio(one, one, 2.0, 1.0, family), DomainError);

  const EmbeddingExponents e(2.0, 1.0);
  EXPECT_DOUBLE_EQ(e.r(), 2.0);
  EXPECT_THROW(EmbeddingExponents(1.0, 1.0), DomainError);
  // h = chi_D with w = 1: |D|^(-1) |D|^2 = |D|.
  const Decreasing2DGridFunction h(1.0, 1.0, 2, 2, {1, 1, 1, 0});
  EXPECT_DOUBLE_EQ(embedding_integral(one, one, e, h), 3.0);
  // Two levels: G_1 = {h >= 2} one cell, G_2 three cells.
  const Decreasing2DGridFunction h2(1.0, 1.0, 2, 2, {2, 1, 1, 0});
  EXPECT_DOUBLE_EQ(embedding_integral(one, one, e, h2), 1.0 + (9.0 - 1.0) / 3.0);
  const std::vector<Decreasing2DGridFunction> fam{h, h2};
  const auto rep = embedding_integral_sup(one, one, e, fam);
  EXPECT_EQ(rep.witness, 1u);
  EXPECT_THROW(embedding_integral(one, one, e, Decreasing2DGridFunction(1.0, 1.0, 1, 1, {0})),
               DomainError);
}
