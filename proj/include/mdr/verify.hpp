#pragma once

// Randomised and exact checks of the rearrangement and Lorentz-space
// results, plus deterministic reconstructions of the extremal examples.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mdr/family.hpp"
#include "mdr/grid.hpp"
#include "mdr/weight.hpp"

namespace mdr {

struct PropertyResult {
  std::string name;
  // Properties that are theorems must never fail; the others are probes
  // whose failures are reported but do not fail the suite.
  bool theorem_backed = true;
  std::size_t checked = 0;
  std::size_t failed = 0;
  // Smallest (rhs - lhs) seen for inequalities, minus the largest deviation
  // for identities. Negative only when something failed.
  double worst_margin = std::numeric_limits<double>::infinity();
  // Number of checks where an inequality held strictly.
  std::size_t strict = 0;
  std::optional<std::string> witness;

  bool passed() const { return failed == 0; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<PropertyResult> properties;

  bool theorem_backed_pass() const;
  const PropertyResult* find(const std::string& name) const;
};

class SuiteRecorder {
 public:
  explicit SuiteRecorder(SuiteReport& report) : report_(report) {}

  // Record lhs <= rhs with absolute slack `slack`.
  void inequality(const std::string& name, bool theorem_backed, double lhs, double rhs,
                  double slack, std::size_t case_index, const std::string& detail = {});
  // Record |a - b| <= tol.
  void identity(const std::string& name, bool theorem_backed, double a, double b,
                double tol, std::size_t case_index, const std::string& detail = {});
  void boolean(const std::string& name, bool theorem_backed, bool ok,
               std::size_t case_index, const std::string& detail = {});

 private:
  PropertyResult& slot(const std::string& name, bool theorem_backed);
  void fail(PropertyResult& r, std::size_t case_index, const std::string& detail);
  SuiteReport& report_;
};

// Runs every property on one pair of functions sharing a grid. `rng` drives
// the auxiliary randomness (exponents, weights, subsets).
void check_pair(const GridFunction2D& f, const GridFunction2D& g, Rng& rng,
                std::size_t case_index, SuiteRecorder& rec);

// Deterministic in `seed`; case k uses stream k, so the report does not
// depend on execution order.
SuiteReport run_inequality_suite(std::uint64_t seed, std::size_t cases);

// Every cell of f split into factor x factor cells carrying the same value.
GridFunction2D refine(const GridFunction2D& f, std::size_t factor);

struct HarlitTail {
  double eps = 0.0;
  double classical = 0.0;  // int_0^{|D_eps|} f*
  double two_d = 0.0;      // int_{D_eps} f*_2
};

struct HarlitRecord {
  double middle = 0.0;          // int_D f*_2
  double classical_over_d = 0.0;  // int_0^{|D|} f*
  double sup_lower_bound = 0.0;   // best int_E f found with E* = D
  double analytic_bound = 0.0;    // per-column bound on int_E f
  std::size_t sets_searched = 0;
  std::vector<HarlitTail> tail;
};

// f = 2 chi_A + chi_B, A = (3,4)x(0,1), B = (4,6)x(0,2), D = (0,1)x(0,2);
// D_eps = (0,eps)x(0,1/eps) for eps in {1, 1/2, 1/4, 1/8} on grids refined to
// cells of eps.
HarlitRecord reproduce_harlit();

struct EquirearRecord {
  StepFunction1D f_star;
  StepFunction1D g_star;
  Decreasing2DGridFunction f_star2;
  Decreasing2DGridFunction g_star2;
  bool classical_equal = false;
  bool two_d_equal = false;
  bool f_fixed = false;  // f*_2 = f
  bool g_fixed = false;  // g*_2 = g
};

// f = chi_A, g = chi_B with A = (0,1)x(0,2), B = (0,2)x(0,1).
EquirearRecord reproduce_equirear();

struct WconstRecord {
  double measure_r = 0.0;
  double measure_a = 0.0;
  double norm_r = 0.0;
  double norm_a = 0.0;
  bool equal = false;
};

// R = (0,x)x(0,y), P = (x-e,x)x(y-e,y), Q = (x,x+e)x(0,e), A = (R\P) u Q with
// e one cell; compares the Lorentz norms of chi_R and chi_A.
WconstRecord reproduce_wconst(const Weight2D& w, double p = 1.0, std::size_t x_cells = 3,
                              std::size_t y_cells = 3, double cell = 1.0);

struct IndexpRecord {
  double p = 1.0;
  std::vector<double> term_norms;  // ||f_k||, k = 1..N
  std::vector<double> ratios;      // ||f_1 + ... + f_M|| / (||f_1|| + ... + ||f_M||)
};

// Nested decreasing sets A_k with |A_k*| = 2^{-kp} and f_k = 2^k chi_{A_k} in
// Lambda^p_2(1). Computed in extended precision; throws DomainError unless
// 0 < p <= 1 and 1 <= n is small enough for 2^{n+1} to be representable.
IndexpRecord indexp_growth(double p, std::size_t n);

struct AsymmetryRecord {
  GridFunction2D input;
  Decreasing2DGridFunction y_then_x;
  Decreasing2DGridFunction x_then_y;
  bool differs = false;
};

AsymmetryRecord asymmetry_demo(const GridFunction2D& f);
// The 2x2 matrix with rows [1, 0] and [0, 2].
AsymmetryRecord asymmetry_demo();
// First random small integer matrix whose two slice orders disagree.
std::optional<AsymmetryRecord> asymmetry_search(std::uint64_t seed, std::size_t attempts);

// Named pass/fail outcome of a deterministic check; all are theorem-backed.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct WconstCase {
  std::string weight;
  bool expect_equal = false;
  WconstRecord record;
};

struct CounterexampleReport {
  HarlitRecord harlit;
  EquirearRecord equirear;
  std::vector<WconstCase> wconst;
  AsymmetryRecord asymmetry;
  std::optional<AsymmetryRecord> asymmetry_random;
  std::vector<Check> checks;

  bool passed() const;
};

// All extremal examples with their expected outcomes; `seed` drives the
// random asymmetry search only.
CounterexampleReport run_counterexamples(std::uint64_t seed);

// Ratios nondecreasing in N for p < 1; ratios at most 1 + 1e-12 for p = 1.
std::vector<Check> indexp_checks(const IndexpRecord& rec);

}  // namespace mdr
