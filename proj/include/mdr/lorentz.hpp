#pragma once

// Weighted Lorentz functionals built on the two-dimensional rearrangement,
// and finite-family checks of the weight conditions that decide when those
// functionals are quasinorms, norms, or embed into one another.
//
// Every sup over decreasing sets is estimated over a caller-supplied finite
// family, so reported constants are lower bounds with the extremal witness.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdr/grid.hpp"
#include "mdr/weight.hpp"

namespace mdr {

// w(D) = sum over the cells of D of the exact cell integrals of w.
double weight_measure(const Weight2D& w, const StaircaseSet& d);

// Cell integrals of w over an anchored cols x rows block, column-major.
// Only cells where `needed` is positive are integrated (others are left 0),
// so a weight only has to cover the support it is paired with.
std::vector<double> weight_cell_integrals(const Weight2D& w, double dx, double dy,
                                          std::size_t cols, std::size_t rows,
                                          std::span<const double> needed);

// (int (f*_2)^p w)^(1/p).
double lorentz_norm_2d(const GridFunction2D& f, const Weight2D& w, double p);
// Same functional for an already rearranged function.
double lorentz_norm_2d(const Decreasing2DGridFunction& rearranged, const Weight2D& w,
                       double p);

// (sum |f|^p dx dy)^(1/p).
double lebesgue_norm(const GridFunction2D& f, double p);

// (int_0^inf (f*)^p v)^(1/p). Throws CoverageError when v is shorter than the
// support of f*.
double classical_lorentz_norm(const GridFunction2D& f, const StepFunction1D& v,
                              double p);
// One-dimensional version: `values` are samples of a step function with
// steps of `width`; they are rearranged first.
double classical_lorentz_norm_1d(std::span<const double> values, double width,
                                 const StepFunction1D& v, double p);

struct DoublingReport {
  std::vector<double> ratios;  // int_D w(2x) dx / int_D w(x) dx per set
  double constant = 0.0;       // max of ratios
  std::size_t witness = 0;     // index attaining the max
};

// Estimates C in int_D w(2x) dx <= C int_D w(x) dx over `family`.
DoublingReport check_quasinorm_doubling(const Weight2D& w,
                                        std::span<const StaircaseSet> family);

struct SubmodularityTerms {
  double w_intersection = 0.0;  // w((A n B)*)
  double w_union = 0.0;         // w((A u B)*)
  double w_a = 0.0;             // w(A*)
  double w_b = 0.0;             // w(B*)
  double lhs() const { return w_intersection + w_union; }
  double rhs() const { return w_a + w_b; }
};

SubmodularityTerms submodularity_terms(const Weight2D& w, const GridSet2D& a,
                                       const GridSet2D& b);

struct SubmodularityViolation {
  std::size_t index = 0;
  SubmodularityTerms terms;
};

inline constexpr double kSubmodularityRelTol = 1e-12;

// Pairs where w((A n B)*) + w((A u B)*) > w(A*) + w(B*) (1 + 1e-12).
std::vector<SubmodularityViolation> check_norm_submodularity(
    const Weight2D& w, std::span<const std::pair<GridSet2D, GridSet2D>> pairs);

struct FactorizationVerdict {
  bool factors = false;
  // Common profile v(t) sampled at the row centres (present when every
  // column agrees, whether or not v is monotone).
  std::optional<std::vector<double>> profile;
  double dt = 0.0;
  // Cell (i, j) of the sampling grid that breaks the condition.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string reason;
};

inline constexpr double kFactorizationRelTol = 1e-9;

// Samples w at the cell centres of `box` and decides whether w(s,t) = v(t)
// with v nonincreasing.
FactorizationVerdict check_weight_factorization(const Weight2D& w, const GridSpec& box);

struct EmbeddingRatioReport {
  std::vector<double> ratios;       // w2(D)^(1/p2) / w1(D)^(1/p1)
  std::vector<double> norm_ratios;  // same via Lorentz norms of chi_D
  double sup = 0.0;
  std::size_t witness = 0;
};

// Requires p1 <= p2.
EmbeddingRatioReport embedding_sup_ratio(const Weight2D& w1, const Weight2D& w2,
                                         double p1, double p2,
                                         std::span<const StaircaseSet> family);

// p1 > p2 > 0 and 1/r = 1/p2 - 1/p1.
class EmbeddingExponents {
 public:
  EmbeddingExponents(double p1, double p2);
  double p1() const { return p1_; }
  double p2() const { return p2_; }
  double r() const { return r_; }

 private:
  double p1_;
  double p2_;
  double r_;
};

// int_0^inf w1(D_t)^(-r/p1) d(-w2(D_t)^(r/p2)), D_t = {h > t}. With values
// t_1 > ... > t_n of h and G_k = {h >= t_k} (G_0 empty), the integrator
// jumps by w2(G_k)^(r/p2) - w2(G_{k-1})^(r/p2) at t_k while the integrand
// just below t_k is w1(G_k)^(-r/p1); the integral is the sum of the products.
// Throws DomainError for h identically zero.
double embedding_integral(const Weight2D& w1, const Weight2D& w2,
                          const EmbeddingExponents& exps,
                          const Decreasing2DGridFunction& h);

struct EmbeddingIntegralReport {
  std::vector<double> values;
  double sup = 0.0;
  std::size_t witness = 0;
};

EmbeddingIntegralReport embedding_integral_sup(
    const Weight2D& w1, const Weight2D& w2, const EmbeddingExponents& exps,
    std::span<const Decreasing2DGridFunction> family);

}  // namespace mdr
