// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mdr/family.hpp"
#include "mdr/kernels.hpp"
#include "mdr/lorentz.hpp"
#include "mdr/rearrange.hpp"
#include "mdr/verify.hpp"

using namespace mdr;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-44s %8.3fs  %s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.detail.c_str());
  std::fflush(stdout);
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// {h >= t} for a decreasing h, as a staircase.
StaircaseSet at_least(const Decreasing2DGridFunction& h, double t) {
  std::vector<std::size_t> heights(h.cols(), 0);
  for (std::size_t i = 0; i < h.cols(); ++i) {
    std::size_t n = 0;
    while (n < h.rows() && h.at(i, n) >= t) ++n;
    heights[i] = n;
  }
  return StaircaseSet(h.dx(), h.dy(), std::move(heights));
}

using Big = boost::multiprecision::cpp_bin_float_50;

// sum_k (sum_{j<=k} 2^j)^p (2^{-kp} - 2^{-(k+1)p}) with the last term
// c_N^p 2^{-Np}, raised to 1/p and divided by N.
double indexp_closed_form(double p, std::size_t n) {
  const Big bp = p;
  Big acc = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Big c = pow(Big(2), static_cast<int>(k + 1)) - 2;
    const Big mk = pow(Big(2), -Big(static_cast<int>(k)) * bp);
    const Big next = k == n ? Big(0) : mk * pow(Big(2), -bp);
    acc += pow(c, bp) * (mk - next);
  }
  return static_cast<double>(pow(acc, 1 / bp) / static_cast<int>(n));
}

}  // namespace

int main() {
  std::printf("kernels backend: %s\n",
              std::string(kernels::backend_name(kernels::active_backend())).c_str());

  criterion(1, "counterexample exactness", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = reproduce_harlit();
    const double secs = elapsed_since(t0);
    bool tails = !r.tail.empty();
    for (const auto& t : r.tail) tails = tails && t.classical == 2.0;
    const bool ok = r.middle == 3.0 && tails && r.sup_lower_bound <= 2.0 && secs < 1.0;
    return Outcome{ok, "int_D f*_2 = " + num(r.middle) + ", int_0^|D_eps| f* = 2 for " +
                           std::to_string(r.tail.size()) + " eps, sup_E search " +
                           num(r.sup_lower_bound)};
  });

  criterion(2, "iteration theorem (10000 functions)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t mismatches = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng = make_rng(seed, 2);
      RandomGridOptions opts;  // dims <= 32 x 32, integers <= 16
      for (int k = 0; k < 1000; ++k) {
        const auto f = random_grid_function(rng, opts);
        if (!(rearrange_layercake(f) == rearrange_iterative(f))) ++mismatches;
      }
    }
    const double secs = elapsed_since(t0);
    return Outcome{mismatches == 0 && secs < 60.0,
                   std::to_string(mismatches) + " mismatches"};
  });

  criterion(3, "measure preservation and sandwich", [] {
    std::size_t bad_measure = 0;
    std::size_t bad_sandwich = 0;
    Rng rng = make_rng(3, 3);
    RandomGridOptions opts;
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (int k = 0; k < 10000; ++k) {
      const auto f = random_grid_function(rng, opts);
      const auto e = random_set(rng, f.spec(), density(rng));
      const auto star = rearrange_set(e);
      if (star.cell_count() != e.count() || star.measure() != measure(e)) ++bad_measure;
      const auto fs = rearrange_layercake(f);
      const double top = f.max();
      for (int q = 0; q < 100; ++q) {
        const double t = top * q / 100.0;
        const auto inner = fs.superlevel(t);
        const auto middle = rearrange_set(superlevel_set(f, t));
        const auto outer = at_least(fs, t);
        if (!is_subset(inner, middle) || !is_subset(middle, outer)) ++bad_sandwich;
      }
    }
    return Outcome{bad_measure == 0 && bad_sandwich == 0,
                   std::to_string(bad_measure) + " measure failures, " +
                       std::to_string(bad_sandwich) +
                       " sandwich failures (10000 functions x 100 t)"};
  });

  criterion(4, "norm identity with w = 1", [] {
    Rng rng = make_rng(4, 4);
    RandomGridOptions opts;
    opts.integer_values = false;
    double worst = 0.0;
    const auto one = Weight2D::constant();
    for (int k = 0; k < 1000; ++k) {
      const auto f = random_grid_function(rng, opts);
      for (double p : {0.5, 1.0, 2.0, 3.0}) {
        const double l = lebesgue_norm(f, p);
        const double d = std::abs(lorentz_norm_2d(f, one, p) - l);
        if (l > 0.0) worst = std::max(worst, d / l);
      }
    }
    return Outcome{worst <= 1e-12, "max relative deviation " + num(worst)};
  });

  criterion(5, "Hardy-Littlewood chain (10000 pairs)", [] {
    Rng rng = make_rng(5, 5);
    RandomGridOptions opts;
    std::size_t violations = 0;
    std::size_t strict_lower = 0;
    std::size_t strict_upper = 0;
    std::size_t strict_both = 0;
    for (int k = 0; k < 10000; ++k) {
      opts.integer_values = k % 2 == 0;
      const GridSpec spec = random_spec(rng, opts);
      const auto f = random_grid_function(rng, spec, opts);
      const auto g = random_grid_function(rng, spec, opts);
      const double area = spec.cell_area();
      const double direct = kernels::dot(f.values(), g.values()) * area;
      const double two_d =
          kernels::dot(rearrange_layercake(f).values(), rearrange_layercake(g).values()) * area;
      const double classical =
          kernels::dot(rearrange_classical(f).values(), rearrange_classical(g).values()) * area;
      if (two_d > classical + 1e-12 * classical) ++violations;
      if (direct > two_d + 1e-12 * two_d) ++violations;
      const bool lower = direct < two_d;
      const bool upper = two_d < classical;
      strict_lower += lower;
      strict_upper += upper;
      strict_both += lower && upper;
    }
    return Outcome{violations == 0 && strict_upper > 0 && strict_both > 0,
                   std::to_string(violations) + " violations; strict lower " +
                       std::to_string(strict_lower) + ", strict upper " +
                       std::to_string(strict_upper) + ", both " + std::to_string(strict_both)};
  });

  criterion(6, "norm characterization, vertical weights", [] {
    Rng rng = make_rng(6, 6);
    std::size_t triangle_failures = 0;
    std::size_t violations = 0;
    double worst = -1.0;
    RandomGridOptions opts;
    opts.max_cols = 24;
    opts.max_rows = 24;
    for (int w = 0; w < 20; ++w) {
      const auto v = random_nonincreasing(rng, opts.max_rows, 0.1, 5.0);
      const auto weight = Weight2D::vertical(StepFunction1D(1.0, v));
      for (double p : {1.0, 2.0}) {
        for (int k = 0; k < 1000; ++k) {
          opts.integer_values = k % 2 == 0;
          const GridSpec spec = random_spec(rng, opts);
          const auto f = random_grid_function(rng, spec, opts);
          const auto g = random_grid_function(rng, spec, opts);
          const double nf = lorentz_norm_2d(f, weight, p);
          const double ng = lorentz_norm_2d(g, weight, p);
          const double nfg = lorentz_norm_2d(add(f, g), weight, p);
          const double excess = nfg - (nf + ng);
          if (nf + ng > 0.0) worst = std::max(worst, excess / (nf + ng));
          if (excess > 1e-10 * (nf + ng)) ++triangle_failures;
        }
      }
      const auto pairs = random_set_pairs(rng, 1000, opts.max_cols, opts.max_rows, 1.0, 1.0);
      violations += check_norm_submodularity(weight, pairs).size();
    }
    return Outcome{triangle_failures == 0 && violations == 0,
                   std::to_string(triangle_failures) +
                       " triangle failures (worst relative excess " + num(worst) + "), " +
                       std::to_string(violations) + " submodularity violations"};
  });

  criterion(7, "norm characterization, negative weights", [] {
    const GridSpec box = GridSpec::anchored(1.0, 1.0, 16, 16);
    const std::vector<std::pair<std::string, Weight2D>> weights{
        {"x1", Weight2D::power(1.0, 0.0)},
        {"x2", Weight2D::power(0.0, 1.0)},
        {"x1+x2 sampled", Weight2D::sampled([](double s, double t) { return s + t; }, box)},
    };
    Rng rng = make_rng(7, 7);
    auto pairs = submodularity_constructions(6, 5, 3, 6, 1.0, 1.0);
    const std::size_t curated = pairs.size();
    auto random = random_set_pairs(rng, 1000, 8, 8, 1.0, 1.0);
    pairs.insert(pairs.end(), random.begin(), random.end());
    bool all = true;
    std::string detail;
    for (const auto& [name, w] : weights) {
      const auto v = check_norm_submodularity(w, pairs);
      std::size_t from_curated = 0;
      for (const auto& x : v) from_curated += x.index < curated;
      all = all && !v.empty();
      detail += name + ": " + std::to_string(v.size()) + " (" + std::to_string(from_curated) +
                " curated); ";
    }
    return Outcome{all, detail};
  });

  criterion(8, "p >= 1 necessity", [] {
    const auto half = indexp_growth(0.5, 4096);
    double worst = 0.0;
    for (std::size_t n = 1; n <= 4096; n *= 2) {
      const double expect = indexp_closed_form(0.5, n);
      worst = std::max(worst, std::abs(half.ratios[n - 1] - expect) / expect);
    }
    for (std::size_t n : {3u, 100u, 1000u, 4095u}) {
      const double expect = indexp_closed_form(0.5, n);
      worst = std::max(worst, std::abs(half.ratios[n - 1] - expect) / expect);
    }
    const auto one = indexp_growth(1.0, 4096);
    double worst_one = 0.0;
    for (double r : one.ratios) worst_one = std::max(worst_one, r);
    const double final_ratio = half.ratios.back();
    return Outcome{final_ratio > 10.0 && worst <= 1e-10 && worst_one <= 1.0 + 1e-12,
                   "ratio(4096) = " + num(final_ratio) + ", closed-form deviation " + num(worst) +
                       ", max p=1 ratio " + num(worst_one)};
  });

  criterion(9, "product formula (1000 pairs)", [] {
    Rng rng = make_rng(9, 9);
    std::uniform_int_distribution<std::size_t> len(1, 32);
    std::uniform_int_distribution<int> val(0, 16);
    std::size_t mismatches = 0;
    for (int k = 0; k < 1000; ++k) {
      std::vector<double> g(len(rng));
      std::vector<double> h(len(rng));
      for (auto& x : g) x = val(rng);
      for (auto& x : h) x = val(rng);
      const auto lhs = rearrange_product(g, 0.5, h, 2.0);
      const auto rhs = rearrange_layercake(tensor_product(g, 0.5, h, 2.0));
      if (!(lhs == rhs)) ++mismatches;
    }
    return Outcome{mismatches == 0, std::to_string(mismatches) + " mismatches"};
  });

  criterion(10, "scale note", [] {
    return Outcome{true, "informational: no empirical tables to reproduce"};
  });

  return failures == 0 ? 0 : 1;
}
