#include "mdr/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "mdr/error.hpp"
#include "mdr/kernels.hpp"
#include "mdr/lorentz.hpp"
#include "mdr/rearrange.hpp"

namespace mdr {

// ---------------------------------------------------------------------------
// Report bookkeeping

bool SuiteReport::theorem_backed_pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& r) {
    return !r.theorem_backed || r.passed();
  });
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

PropertyResult& SuiteRecorder::slot(const std::string& name, bool theorem_backed) {
  for (auto& p : report_.properties) {
    if (p.name == name) return p;
  }
  PropertyResult r;
  r.name = name;
  r.theorem_backed = theorem_backed;
  report_.properties.push_back(std::move(r));
  return report_.properties.back();
}

void SuiteRecorder::fail(PropertyResult& r, std::size_t case_index,
                         const std::string& detail) {
  ++r.failed;
  if (!r.witness) {
    std::ostringstream os;
    os << "case " << case_index;
    if (!detail.empty()) os << ": " << detail;
    r.witness = os.str();
  }
}

void SuiteRecorder::inequality(const std::string& name, bool theorem_backed, double lhs,
                               double rhs, double slack, std::size_t case_index,
                               const std::string& detail) {
  PropertyResult& r = slot(name, theorem_backed);
  ++r.checked;
  const double margin = rhs - lhs;
  r.worst_margin = std::min(r.worst_margin, margin);
  if (lhs < rhs) ++r.strict;
  if (!(lhs <= rhs + slack)) {
    std::ostringstream os;
    os.precision(17);
    os << "lhs " << lhs << " > rhs " << rhs;
    if (!detail.empty()) os << " (" << detail << ")";
    fail(r, case_index, os.str());
  }
}

void SuiteRecorder::identity(const std::string& name, bool theorem_backed, double a,
                             double b, double tol, std::size_t case_index,
                             const std::string& detail) {
  PropertyResult& r = slot(name, theorem_backed);
  ++r.checked;
  const double dev = std::abs(a - b);
  r.worst_margin = std::min(r.worst_margin, 0.0 - dev);
  if (!(dev <= tol)) {
    std::ostringstream os;
    os.precision(17);
    os << a << " != " << b;
    if (!detail.empty()) os << " (" << detail << ")";
    fail(r, case_index, os.str());
  }
}

void SuiteRecorder::boolean(const std::string& name, bool theorem_backed, bool ok,
                            std::size_t case_index, const std::string& detail) {
  PropertyResult& r = slot(name, theorem_backed);
  ++r.checked;
  r.worst_margin = std::min(r.worst_margin, ok ? 0.0 : -1.0);
  if (!ok) fail(r, case_index, detail);
}

// ---------------------------------------------------------------------------
// Per-pair checks

namespace {

// Levels worth probing: 0, every distinct value, midpoints, and a uniform grid
// of `extra` levels up to just past the maximum.
std::vector<double> probe_levels(const GridFunction2D& f, std::size_t extra) {
  std::set<double> s{0.0};
  for (double v : f.values()) s.insert(v);
  std::vector<double> distinct(s.begin(), s.end());
  for (std::size_t k = 0; k + 1 < distinct.size(); ++k) {
    s.insert(0.5 * (distinct[k] + distinct[k + 1]));
  }
  const double top = f.max();
  for (std::size_t k = 0; k < extra; ++k) {
    s.insert(top * 1.01 * static_cast<double>(k) / static_cast<double>(extra - 1));
  }
  return {s.begin(), s.end()};
}

GridFunction2D symmetrize(const GridFunction2D& f) {
  const std::size_t n = std::min(f.cols(), f.rows());
  const GridSpec spec = GridSpec::anchored(f.spec().dx, f.spec().dx, n, n);
  std::vector<double> v(spec.cells());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) v[spec.index(i, j)] = f(std::min(i, j), std::max(i, j));
  }
  return GridFunction2D(spec, std::move(v));
}

bool staircase_subset_of_cells(const StaircaseSet& s, const Decreasing2DGridFunction& h,
                               const std::function<bool(double)>& pred) {
  for (std::size_t i = 0; i < s.columns(); ++i) {
    for (std::size_t j = 0; j < s.height(i); ++j) {
      if (!pred(h.at(i, j))) return false;
    }
  }
  return true;
}

void check_sets(const GridFunction2D& f, Rng& rng, std::size_t c, SuiteRecorder& rec) {
  const GridSpec& spec = f.spec();
  const GridSet2D e = random_set(rng, spec, 0.4);
  const StaircaseSet es = rearrange_set(e);
  rec.identity("set_measure_preserved", true, es.measure(), measure(e), 0.0, c);

  // Fixed points: staircases are left alone.
  const GridSet2D es_grid = es.to_grid_set(spec.cols, spec.rows);
  rec.boolean("set_fixed_point", true, rearrange_set(es_grid) == es, c);

  // Monotonicity and the disjoint-union excess.
  const GridSet2D extra = random_set(rng, spec, 0.3);
  const GridSet2D bigger = set_union(e, extra);
  rec.boolean("set_monotone", true, is_subset(es, rearrange_set(bigger)), c);
  const GridSet2D f_part = set_difference(extra, e);
  const StaircaseSet u = rearrange_set(set_union(e, f_part));
  rec.boolean("set_monotone", true, is_subset(es, u), c);
  const double excess = static_cast<double>(u.cell_count() - es.cell_count()) * spec.cell_area();
  rec.identity("disjoint_union_excess", true, excess, measure(f_part), 0.0, c);

  // (chi_E)*_2 = chi_{E*}.
  const auto chi_star = rearrange_layercake(GridFunction2D::indicator(e));
  const auto expected = GridFunction2D::indicator(es_grid);
  rec.boolean("indicator_rearrangement", true, chi_star.as_grid_function() == expected, c);
}

void check_level_sets(const GridFunction2D& f, const Decreasing2DGridFunction& fs,
                      std::size_t c, SuiteRecorder& rec) {
  for (double t : probe_levels(f, 25)) {
    const GridSet2D level = superlevel_set(f, t);
    const StaircaseSet ls = rearrange_set(level);
    rec.identity("set_measure_preserved", true, ls.measure(), measure(level), 0.0, c);
    // {f*_2 > t} subset of {|f| > t}* subset of {f*_2 >= t}
    const StaircaseSet strict = fs.superlevel(t);
    const bool lower = is_subset(strict, ls);
    const bool upper = staircase_subset_of_cells(ls, fs, [t](double v) { return v >= t; });
    std::ostringstream os;
    os << "t = " << t;
    rec.boolean("level_set_sandwich", true, lower && upper, c, os.str());
  }
}

void check_subadditivity(const GridFunction2D& f, const GridFunction2D& g,
                         const Decreasing2DGridFunction& fs,
                         const Decreasing2DGridFunction& gs, std::size_t c,
                         SuiteRecorder& rec) {
  const auto hs = rearrange_layercake(add(f, g));
  const std::size_t cols = hs.cols();
  const std::size_t rows = hs.rows();
  // (f+g)*_2(x+y) against f*_2(x) + g*_2(y) over all lattice corners x, y;
  // only the tightest margin of each form is recorded.
  double worst2 = std::numeric_limits<double>::infinity();
  double worst1 = std::numeric_limits<double>::infinity();
  std::string where1;
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      const double a = fs.at(i, j);
      for (std::size_t i2 = 0; i + i2 < cols; ++i2) {
        for (std::size_t j2 = 0; j2 + j < rows; ++j2) {
          const double lhs = hs.at(i + i2, j + j2);
          const double rhs1 = a + gs.at(i2, j2);
          worst2 = std::min(worst2, 2.0 * rhs1 - lhs);
          if (rhs1 - lhs < worst1) {
            worst1 = rhs1 - lhs;
            std::ostringstream os;
            os << "x = (" << i << "," << j << "), y = (" << i2 << "," << j2 << ")";
            where1 = os.str();
          }
        }
      }
    }
  }
  if (cols == 0 || rows == 0) return;
  const double scale = std::max(1.0, hs.at(0, 0));
  rec.inequality("subadditivity_factor_2", true, -worst2, 0.0, 1e-12 * scale, c);
  rec.inequality("subadditivity_sharp", false, -worst1, 0.0, 1e-12 * scale, c, where1);
}

void check_functions(const GridFunction2D& f, const GridFunction2D& g, Rng& rng,
                     std::size_t c, SuiteRecorder& rec) {
  const auto fs = rearrange_layercake(f);
  const auto gs = rearrange_layercake(g);
  const auto fi = rearrange_iterative(f);
  rec.boolean("layercake_equals_iterative", true, fs == fi, c);
  rec.boolean("layercake_equals_iterative", true, gs == rearrange_iterative(g), c);

  // Fixed point: decreasing functions are their own rearrangement.
  rec.boolean("fixed_point_decreasing", true, rearrange_layercake(fs.as_grid_function()) == fs, c);

  // (f*_2)* = f*.
  rec.boolean("classical_compatibility", true,
              rearrange_classical(fs.as_grid_function()) == rearrange_classical(f), c);

  // Pointwise monotonicity with g' = min(f, g) <= f.
  const auto lower = pointwise_min(f, g);
  rec.boolean("pointwise_monotone", true,
              pointwise_leq(rearrange_layercake(lower).values(), fs.values()), c);

  // Homogeneity.
  for (double k : {0.0, 0.5, 3.0}) {
    const auto lhs = rearrange_layercake(scale(f, k));
    bool ok = true;
    for (std::size_t q = 0; q < fs.values().size(); ++q) {
      ok = ok && lhs.values()[q] == k * fs.values()[q];
    }
    rec.boolean("homogeneity", true, ok, c);
  }

  // p-th powers commute with the rearrangement.
  for (double p : {0.5, 2.0, 3.0}) {
    const auto lhs = rearrange_layercake(power(f, p));
    double dev = 0.0;
    double top = 0.0;
    for (std::size_t q = 0; q < fs.values().size(); ++q) {
      const double rhs = std::pow(fs.values()[q], p);
      dev = std::max(dev, std::abs(lhs.values()[q] - rhs));
      top = std::max(top, rhs);
    }
    rec.identity("power_commutation", true, dev, 0.0, 1e-12 * std::max(1.0, top), c);
  }

  // Fatou along truncations increasing to f.
  {
    const double top = f.max();
    constexpr int kSteps = 8;
    std::vector<double> previous(fs.values().size(), 0.0);
    bool monotone = true;
    bool truncation_commutes = true;
    std::vector<double> last;
    for (int n = 1; n <= kSteps; ++n) {
      const double cap = n == kSteps ? top : top * n / kSteps;
      const auto tn = rearrange_layercake(pointwise_min(f, cap));
      monotone = monotone && pointwise_leq(previous, tn.values());
      for (std::size_t q = 0; q < tn.values().size(); ++q) {
        truncation_commutes =
            truncation_commutes && tn.values()[q] == std::min(fs.values()[q], cap);
      }
      previous.assign(tn.values().begin(), tn.values().end());
    }
    const bool limit = std::equal(previous.begin(), previous.end(), fs.values().begin());
    rec.boolean("fatou_truncation", true, monotone && limit && truncation_commutes, c);
  }

  // Symmetric input, symmetric output: false in general (the anti-diagonal
  // pair of cells rearranges to a horizontal bar), so only probed.
  {
    const auto sym = symmetrize(f);
    const auto ss = rearrange_layercake(sym);
    bool ok = true;
    for (std::size_t i = 0; i < ss.cols(); ++i) {
      for (std::size_t j = 0; j < ss.rows(); ++j) ok = ok && ss.at(i, j) == ss.at(j, i);
    }
    rec.boolean("symmetry", false, ok, c);
  }

  check_subadditivity(f, g, fs, gs, c, rec);

  // int |fg| <= int f*_2 g*_2 <= int f* g*.
  {
    const double area = f.spec().cell_area();
    const double direct = kernels::dot(f.values(), g.values()) * area;
    const double two_d = kernels::dot(fs.values(), gs.values()) * area;
    const auto f1 = rearrange_classical(f);
    const auto g1 = rearrange_classical(g);
    const double classical = kernels::dot(f1.values(), g1.values()) * area;
    rec.inequality("hardy_littlewood_lower", true, direct, two_d, 1e-12 * std::abs(two_d), c);
    rec.inequality("hardy_littlewood_upper", true, two_d, classical,
                   1e-12 * std::abs(classical), c);
  }

  // Lambda^p_2(1) = L^p and the classical Lambda^p(1) likewise.
  {
    const auto one = Weight2D::constant(1.0);
    const StepFunction1D v_one(f.spec().cell_area(),
                               std::vector<double>(f.spec().cells() + 1, 1.0));
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
      const double lp = lebesgue_norm(f, p);
      rec.identity("lebesgue_identity", true, lorentz_norm_2d(f, one, p), lp,
                   1e-12 * lp, c);
      rec.identity("classical_lebesgue_identity", true, classical_lorentz_norm(f, v_one, p),
                   lp, 1e-12 * lp, c);
    }
  }

  // Weights w(s,t) = v(t) with v nonincreasing.
  {
    const GridSpec& s = f.spec();
    const auto profile = random_nonincreasing(rng, s.rows + 2, 0.1, 4.0);
    const StepFunction1D v(s.dy, profile);
    const auto w = Weight2D::vertical(v);
    std::uniform_int_distribution<int> pick(0, 2);
    const double p = std::array<double, 3>{1.0, 1.5, 2.0}[pick(rng)];
    const double nf = lorentz_norm_2d(f, w, p);
    const double ng = lorentz_norm_2d(g, w, p);
    const double nfg = lorentz_norm_2d(add(f, g), w, p);
    rec.inequality("triangle_vertical_weight", true, nfg, nf + ng, 1e-10 * (nf + ng), c);

    // Mixed norm: L^p in x of Lambda^p(v) in y.
    double mixed = 0.0;
    for (std::size_t i = 0; i < s.cols; ++i) {
      mixed += s.dx * std::pow(classical_lorentz_norm_1d(f.column(i), s.dy, v, p), p);
    }
    const double lhs = std::pow(nf, p);
    rec.identity("mixed_norm_identity", true, lhs, mixed, 1e-12 * std::max(lhs, mixed), c);

    // Submodularity never fails for such weights.
    const GridSet2D a = superlevel_set(f, 0.0);
    const GridSet2D b = random_set(rng, s, 0.5);
    const std::vector<SetPair> pairs{{a, b}, {b, superlevel_set(g, 0.0)}};
    const auto bad = check_norm_submodularity(w, pairs);
    rec.boolean("submodularity_vertical_weight", true, bad.empty(), c);
  }

  // Product formula on the column/row marginals.
  {
    std::vector<double> gx(f.cols());
    std::vector<double> hy(f.rows());
    for (std::size_t i = 0; i < f.cols(); ++i) gx[i] = f(i, 0);
    for (std::size_t j = 0; j < f.rows(); ++j) hy[j] = g(0, j);
    const auto prod = rearrange_product(gx, f.spec().dx, hy, f.spec().dy);
    const auto ref = rearrange_layercake(tensor_product(gx, f.spec().dx, hy, f.spec().dy));
    rec.boolean("product_formula", true, prod == ref, c);
  }
}

}  // namespace

void check_pair(const GridFunction2D& f, const GridFunction2D& g, Rng& rng,
                std::size_t case_index, SuiteRecorder& rec) {
  if (f.spec() != g.spec()) throw_domain("check_pair needs functions on one grid");
  const auto fs = rearrange_layercake(f);
  check_level_sets(f, fs, case_index, rec);
  check_sets(f, rng, case_index, rec);
  check_functions(f, g, rng, case_index, rec);
}

SuiteReport run_inequality_suite(std::uint64_t seed, std::size_t cases) {
  if (cases == 0) throw_domain("suite needs at least one case");
  SuiteReport report;
  report.seed = seed;
  report.cases = cases;
  SuiteRecorder rec(report);
  for (std::size_t c = 0; c < cases; ++c) {
    Rng rng = make_rng(seed, c);
    RandomGridOptions opts;
    opts.integer_values = (c % 2 == 0);
    const GridSpec spec = random_spec(rng, opts);
    const auto f = random_grid_function(rng, spec, opts);
    const auto g = random_grid_function(rng, spec, opts);
    check_pair(f, g, rng, c, rec);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Reconstructions

GridFunction2D refine(const GridFunction2D& f, std::size_t factor) {
  if (factor == 0) throw_domain("refinement factor must be positive");
  const GridSpec& s = f.spec();
  const double k = static_cast<double>(factor);
  GridSpec r{s.x0, s.y0, s.dx / k, s.dy / k, s.cols * factor, s.rows * factor};
  std::vector<double> v(r.cells());
  for (std::size_t i = 0; i < r.cols; ++i) {
    for (std::size_t j = 0; j < r.rows; ++j) v[r.index(i, j)] = f(i / factor, j / factor);
  }
  return GridFunction2D(r, std::move(v));
}

namespace {

GridFunction2D harlit_function() {
  const GridSpec spec = GridSpec::unit(6, 2);
  const auto a = GridSet2D::box(spec, 3, 4, 0, 1);
  const auto b = GridSet2D::box(spec, 4, 6, 0, 2);
  return add(GridFunction2D::indicator(a, 2.0), GridFunction2D::indicator(b, 1.0));
}

// Largest int_E f over grid-aligned E whose column profile, rearranged, is
// `height` cells on `width` columns. Per column the best cross-section takes
// the largest `height` values; the best E takes the best `width` columns.
// Columns outside the box contribute zero.
double best_profile_integral(const GridFunction2D& f, std::size_t width,
                             std::size_t height) {
  const GridSpec& s = f.spec();
  std::vector<double> per_column;
  for (std::size_t i = 0; i < s.cols; ++i) {
    std::vector<double> col(f.column(i).begin(), f.column(i).end());
    std::sort(col.begin(), col.end(), std::greater<>());
    double acc = 0.0;
    for (std::size_t j = 0; j < std::min(height, col.size()); ++j) acc += col[j];
    per_column.push_back(acc * s.cell_area());
  }
  std::sort(per_column.begin(), per_column.end(), std::greater<>());
  double total = 0.0;
  for (std::size_t i = 0; i < std::min(width, per_column.size()); ++i) total += per_column[i];
  return total;
}

}  // namespace

HarlitRecord reproduce_harlit() {
  HarlitRecord rec;
  const GridFunction2D f = harlit_function();
  const auto fs = rearrange_layercake(f);
  const StaircaseSet d = StaircaseSet::rectangle(1.0, 1.0, 1, 2);

  double middle = 0.0;
  for (std::size_t j = 0; j < d.height(0); ++j) middle += fs.at(0, j);
  rec.middle = middle;
  rec.classical_over_d = rearrange_classical(f).integral_to(d.measure());

  // Explicit search on the unit lattice: E is one column holding two cells
  // anywhere in a window larger than the support, so E* = D.
  const GridSpec window = GridSpec::unit(8, 4);
  std::vector<double> padded(window.cells(), 0.0);
  for (std::size_t i = 0; i < f.cols(); ++i) {
    for (std::size_t j = 0; j < f.rows(); ++j) padded[window.index(i, j)] = f(i, j);
  }
  const GridFunction2D fw(window, padded);
  double best = 0.0;
  for (std::size_t i = 0; i < window.cols; ++i) {
    for (std::size_t j1 = 0; j1 < window.rows; ++j1) {
      for (std::size_t j2 = j1 + 1; j2 < window.rows; ++j2) {
        const GridSet2D e = GridSet2D::empty(window).with(i, j1, true).with(i, j2, true);
        if (!(rearrange_set(e) == d)) continue;
        ++rec.sets_searched;
        double integral = 0.0;
        for (std::size_t q = 0; q < window.cells(); ++q) {
          if (e.mask()[q]) integral += fw.values()[q];
        }
        best = std::max(best, integral);
      }
    }
  }
  // Refined lattices allow E to spread over several narrower columns.
  for (std::size_t factor : {2u, 4u, 8u}) {
    const auto fr = refine(f, factor);
    best = std::max(best, best_profile_integral(fr, factor, 2 * factor));
    ++rec.sets_searched;
  }
  rec.sup_lower_bound = best;

  // Every vertical line meets the support of f in mass at most 2 once E's
  // cross-section has length 2, and E has unit width.
  double densest = 0.0;
  for (std::size_t i = 0; i < f.cols(); ++i) {
    std::vector<double> col(f.column(i).begin(), f.column(i).end());
    std::sort(col.begin(), col.end(), std::greater<>());
    densest = std::max(densest, (col[0] + col[1]) * f.spec().dy);
  }
  rec.analytic_bound = densest * 1.0;

  for (std::size_t m : {1u, 2u, 4u, 8u}) {
    const double eps = 1.0 / static_cast<double>(m);
    const auto fr = refine(f, m);
    const auto frs = rearrange_layercake(fr);
    // D_eps = (0, eps) x (0, 1/eps): column 0, m*m rows of height eps.
    double two_d = 0.0;
    for (std::size_t j = 0; j < m * m; ++j) two_d += frs.at(0, j);
    two_d *= eps * eps;
    const double classical = rearrange_classical(fr).integral_to(1.0);
    rec.tail.push_back({eps, classical, two_d});
  }
  return rec;
}

EquirearRecord reproduce_equirear() {
  const GridSpec spec = GridSpec::unit(2, 2);
  const auto f = GridFunction2D::indicator(GridSet2D::box(spec, 0, 1, 0, 2));
  const auto g = GridFunction2D::indicator(GridSet2D::box(spec, 0, 2, 0, 1));
  EquirearRecord r;
  r.f_star = rearrange_classical(f);
  r.g_star = rearrange_classical(g);
  r.f_star2 = rearrange_layercake(f);
  r.g_star2 = rearrange_layercake(g);
  r.classical_equal = r.f_star == r.g_star;
  r.two_d_equal = r.f_star2 == r.g_star2;
  r.f_fixed = r.f_star2.as_grid_function() == f;
  r.g_fixed = r.g_star2.as_grid_function() == g;
  return r;
}

WconstRecord reproduce_wconst(const Weight2D& w, double p, std::size_t x_cells,
                              std::size_t y_cells, double cell) {
  if (x_cells < 1 || y_cells < 1) throw_domain("rectangle needs at least one cell per side");
  const GridSpec spec = GridSpec::anchored(cell, cell, x_cells + 1, y_cells);
  const auto r = GridSet2D::box(spec, 0, x_cells, 0, y_cells);
  const auto pe = GridSet2D::box(spec, x_cells - 1, x_cells, y_cells - 1, y_cells);
  const auto qe = GridSet2D::box(spec, x_cells, x_cells + 1, 0, 1);
  const auto a = set_union(set_difference(r, pe), qe);
  WconstRecord rec;
  rec.measure_r = measure(r);
  rec.measure_a = measure(a);
  rec.norm_r = lorentz_norm_2d(GridFunction2D::indicator(r), w, p);
  rec.norm_a = lorentz_norm_2d(GridFunction2D::indicator(a), w, p);
  rec.equal = std::abs(rec.norm_r - rec.norm_a) <=
              1e-12 * std::max(std::abs(rec.norm_r), std::abs(rec.norm_a));
  return rec;
}

IndexpRecord indexp_growth(double p, std::size_t n) {
  if (!(p > 0.0) || p > 1.0) throw_domain("indexp_growth needs 0 < p <= 1");
  if (n < 1) throw_domain("indexp_growth needs N >= 1");
  if (static_cast<long long>(n) + 2 >= std::numeric_limits<long double>::max_exponent) {
    throw_domain("N too large for extended precision");
  }
  using ld = long double;
  const ld lp = static_cast<ld>(p);
  IndexpRecord rec;
  rec.p = p;
  // The sets are nested, so (sum_k 2^k chi_{A_k})*_2 = sum_k 2^k chi_{A_k*}
  // takes the value c_M = 2 + ... + 2^M on A_M* \ A_{M+1}*.
  ld running_value = 0.0L;  // c_M
  ld closed = 0.0L;         // sum over k < M of c_k^p (|A_k*| - |A_{k+1}*|)
  ld previous_value = 0.0L;
  ld previous_measure = 0.0L;
  ld denominator = 0.0L;
  for (std::size_t m = 1; m <= n; ++m) {
    const ld measure_m = std::exp2(-static_cast<ld>(m) * lp);  // |A_m*| = 2^{-mp}
    const ld coefficient = std::exp2(static_cast<ld>(m));
    rec.term_norms.push_back(
        static_cast<double>(coefficient * std::pow(measure_m, 1.0L / lp)));
    if (m > 1) closed += std::pow(previous_value, lp) * (previous_measure - measure_m);
    running_value += coefficient;
    const ld norm_p = closed + std::pow(running_value, lp) * measure_m;
    const ld norm = std::pow(norm_p, 1.0L / lp);
    denominator += coefficient * std::pow(measure_m, 1.0L / lp);
    rec.ratios.push_back(static_cast<double>(norm / denominator));
    previous_value = running_value;
    previous_measure = measure_m;
  }
  return rec;
}

AsymmetryRecord asymmetry_demo(const GridFunction2D& f) {
  AsymmetryRecord r;
  r.input = f;
  r.y_then_x = rearrange_iterative(f, SliceOrder::YThenX);
  r.x_then_y = rearrange_iterative(f, SliceOrder::XThenY);
  r.differs = !(r.y_then_x == r.x_then_y);
  return r;
}

AsymmetryRecord asymmetry_demo() {
  const std::vector<double> rows{1.0, 0.0, 0.0, 2.0};
  return asymmetry_demo(GridFunction2D::from_row_major(GridSpec::unit(2, 2), rows));
}

std::optional<AsymmetryRecord> asymmetry_search(std::uint64_t seed, std::size_t attempts) {
  Rng rng = make_rng(seed, 0xa5);
  RandomGridOptions opts;
  opts.max_cols = 3;
  opts.max_rows = 3;
  opts.max_integer = 3;
  for (std::size_t k = 0; k < attempts; ++k) {
    auto r = asymmetry_demo(random_grid_function(rng, opts));
    if (r.differs) return r;
  }
  return std::nullopt;
}

}  // namespace mdr

namespace mdr {

bool CounterexampleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string show(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

CounterexampleReport run_counterexamples(std::uint64_t seed) {
  CounterexampleReport r;
  auto add_check = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  r.harlit = reproduce_harlit();
  const HarlitRecord& h = r.harlit;
  add_check("harlit_middle_is_3", h.middle == 3.0, "int_D f*_2 = " + show(h.middle));
  add_check("harlit_classical_over_d_is_3", h.classical_over_d == 3.0,
            "int_0^|D| f* = " + show(h.classical_over_d));
  add_check("harlit_sup_at_most_2", h.sup_lower_bound <= 2.0 && h.analytic_bound <= 2.0,
            "search max " + show(h.sup_lower_bound) + ", analytic bound " +
                show(h.analytic_bound));
  for (const auto& t : h.tail) {
    add_check("harlit_tail_classical_is_2 eps=" + show(t.eps), t.classical == 2.0,
              "int_0^|D_eps| f* = " + show(t.classical));
    add_check("harlit_tail_chain eps=" + show(t.eps), t.two_d <= t.classical,
              "int_D_eps f*_2 = " + show(t.two_d));
  }

  r.equirear = reproduce_equirear();
  const EquirearRecord& e = r.equirear;
  add_check("equirear_same_classical", e.classical_equal, "f* = g*");
  add_check("equirear_different_2d", !e.two_d_equal, "f*_2 != g*_2");
  add_check("equirear_fixed_points", e.f_fixed && e.g_fixed, "f*_2 = f and g*_2 = g");

  const std::array<std::pair<const char*, Weight2D>, 3> weights{{
      {"constant", Weight2D::constant(1.0)},
      {"x1", Weight2D::power(1.0, 0.0)},
      {"vertical[3,2,1]", Weight2D::vertical(StepFunction1D(1.0, {3.0, 2.0, 1.0}))},
  }};
  for (const auto& [name, w] : weights) {
    WconstCase c{name, std::string(name) == "constant", reproduce_wconst(w)};
    const bool measures = c.record.measure_a == c.record.measure_r;
    add_check(std::string("wconst_") + name, measures && c.record.equal == c.expect_equal,
              "norms " + show(c.record.norm_r) + " vs " + show(c.record.norm_a));
    r.wconst.push_back(std::move(c));
  }

  {
    const GridSpec spec = GridSpec::unit(2, 2);
    const auto anti =
        GridFunction2D::indicator(GridSet2D::empty(spec).with(0, 1, true).with(1, 0, true));
    const auto rs = rearrange_layercake(anti);
    const bool symmetric = rs.at(0, 1) == rs.at(1, 0);
    add_check("symmetric_input_asymmetric_output", !symmetric,
              "cells (0,1),(1,0) rearrange to heights [" + show(rs.at(0, 0) + rs.at(0, 1)) +
                  "," + show(rs.at(1, 0) + rs.at(1, 1)) + "]");
  }

  r.asymmetry = asymmetry_demo();
  add_check("asymmetry_orders_differ", r.asymmetry.differs, "rows [1,0],[0,2]");
  r.asymmetry_random = asymmetry_search(seed, 10000);
  add_check("asymmetry_random_witness", r.asymmetry_random.has_value(),
            r.asymmetry_random ? "found" : "no witness in 10000 draws");
  return r;
}

std::vector<Check> indexp_checks(const IndexpRecord& rec) {
  std::vector<Check> out;
  if (rec.p < 1.0) {
    bool ok = true;
    std::size_t where = 0;
    for (std::size_t k = 1; k < rec.ratios.size(); ++k) {
      if (rec.ratios[k] < rec.ratios[k - 1]) {
        ok = false;
        where = k + 1;
        break;
      }
    }
    out.push_back({"indexp_ratios_nondecreasing", ok,
                   ok ? "N = 1.." + std::to_string(rec.ratios.size())
                      : "decrease at N = " + std::to_string(where)});
  } else {
    const double worst =
        rec.ratios.empty() ? 0.0 : *std::max_element(rec.ratios.begin(), rec.ratios.end());
    out.push_back({"indexp_p1_triangle", worst <= 1.0 + 1e-12, "max ratio " + show(worst)});
  }
  bool unit = std::all_of(rec.term_norms.begin(), rec.term_norms.end(),
                          [](double v) { return std::abs(v - 1.0) <= 1e-12; });
  out.push_back({"indexp_unit_terms", unit, "||f_k|| = 1"});
  return out;
}

}  // namespace mdr
