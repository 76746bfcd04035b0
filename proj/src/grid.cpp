#include "mdr/grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mdr/error.hpp"
#include "mdr/kernels.hpp"

namespace mdr {

GridSpec GridSpec::unit(std::size_t cols, std::size_t rows) {
  return GridSpec{0.0, 0.0, 1.0, 1.0, cols, rows};
}

GridSpec GridSpec::anchored(double dx, double dy, std::size_t cols,
                            std::size_t rows) {
  GridSpec s{0.0, 0.0, dx, dy, cols, rows};
  s.validate();
  return s;
}

void GridSpec::validate() const {
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    throw_domain("grid cells must have positive finite size");
  }
  if (!std::isfinite(x0) || !std::isfinite(y0)) {
    throw_domain("grid origin must be finite");
  }
}

// ---------------------------------------------------------------------------
// GridFunction2D

GridFunction2D::GridFunction2D(GridSpec spec, std::vector<double> column_major)
    : spec_(spec), values_(std::move(column_major)) {
  spec_.validate();
  if (values_.size() != spec_.cells()) {
    throw_domain("grid function: expected " + std::to_string(spec_.cells()) +
                 " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw_domain("grid function values must be finite and nonnegative");
    }
  }
}

GridFunction2D GridFunction2D::zeros(GridSpec spec) {
  return GridFunction2D(spec, std::vector<double>(spec.cells(), 0.0));
}

GridFunction2D GridFunction2D::from_row_major(GridSpec spec,
                                              std::span<const double> row_major) {
  if (row_major.size() != spec.cells()) {
    throw_domain("grid function: expected " + std::to_string(spec.cells()) +
                 " values, got " + std::to_string(row_major.size()));
  }
  std::vector<double> v(spec.cells());
  for (std::size_t j = 0; j < spec.rows; ++j) {
    for (std::size_t i = 0; i < spec.cols; ++i) {
      v[spec.index(i, j)] = row_major[j * spec.cols + i];
    }
  }
  return GridFunction2D(spec, std::move(v));
}

GridFunction2D GridFunction2D::indicator(const GridSet2D& set, double value) {
  std::vector<double> v(set.spec().cells(), 0.0);
  auto mask = set.mask();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = mask[k] ? value : 0.0;
  return GridFunction2D(set.spec(), std::move(v));
}

std::vector<double> GridFunction2D::row_major() const {
  std::vector<double> out(spec_.cells());
  for (std::size_t j = 0; j < spec_.rows; ++j) {
    for (std::size_t i = 0; i < spec_.cols; ++i) {
      out[j * spec_.cols + i] = values_[spec_.index(i, j)];
    }
  }
  return out;
}

double GridFunction2D::max() const { return kernels::max_value(values_); }

bool GridFunction2D::is_zero() const {
  return kernels::count_greater(values_, 0.0) == 0;
}

// ---------------------------------------------------------------------------
// GridSet2D

GridSet2D::GridSet2D(GridSpec spec, std::vector<std::uint8_t> column_major_mask)
    : spec_(spec), mask_(std::move(column_major_mask)) {
  spec_.validate();
  if (mask_.size() != spec_.cells()) {
    throw_domain("grid set: expected " + std::to_string(spec_.cells()) +
                 " mask entries, got " + std::to_string(mask_.size()));
  }
  for (auto& m : mask_) m = m ? 1 : 0;
}

GridSet2D GridSet2D::empty(GridSpec spec) {
  return GridSet2D(spec, std::vector<std::uint8_t>(spec.cells(), 0));
}

GridSet2D GridSet2D::full(GridSpec spec) {
  return GridSet2D(spec, std::vector<std::uint8_t>(spec.cells(), 1));
}

GridSet2D GridSet2D::box(GridSpec spec, std::size_t i0, std::size_t i1,
                         std::size_t j0, std::size_t j1) {
  if (i1 > spec.cols || j1 > spec.rows || i0 > i1 || j0 > j1) {
    throw_domain("grid set box outside grid");
  }
  std::vector<std::uint8_t> m(spec.cells(), 0);
  for (std::size_t i = i0; i < i1; ++i) {
    for (std::size_t j = j0; j < j1; ++j) m[spec.index(i, j)] = 1;
  }
  return GridSet2D(spec, std::move(m));
}

std::size_t GridSet2D::count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
}

std::size_t GridSet2D::column_count(std::size_t i) const {
  auto first = mask_.begin() + static_cast<std::ptrdiff_t>(i * spec_.rows);
  return static_cast<std::size_t>(
      std::count(first, first + static_cast<std::ptrdiff_t>(spec_.rows), 1));
}

GridSet2D GridSet2D::with(std::size_t i, std::size_t j, bool on) const {
  GridSet2D out = *this;
  out.mask_.at(spec_.index(i, j)) = on ? 1 : 0;
  return out;
}

namespace {

// Signed whole-cell offset of `b` relative to `a` along one axis.
long long cell_offset(double a0, double b0, double step, const char* axis) {
  const double ratio = (b0 - a0) / step;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9) {
    throw_domain(std::string("grid origins are not aligned along ") + axis);
  }
  return static_cast<long long>(rounded);
}

struct Frame {
  GridSpec spec;
  long long ai, aj, bi, bj;  // placement of a and b inside `spec`
};

Frame common_frame(const GridSpec& a, const GridSpec& b) {
  if (!a.compatible(b)) throw_domain("grids have different cell sizes");
  if (a == b) return Frame{a, 0, 0, 0, 0};
  const long long oi = cell_offset(a.x0, b.x0, a.dx, "x");
  const long long oj = cell_offset(a.y0, b.y0, a.dy, "y");
  const long long lo_i = std::min(0LL, oi);
  const long long lo_j = std::min(0LL, oj);
  const long long hi_i = std::max(static_cast<long long>(a.cols),
                                  oi + static_cast<long long>(b.cols));
  const long long hi_j = std::max(static_cast<long long>(a.rows),
                                  oj + static_cast<long long>(b.rows));
  GridSpec s = a;
  s.x0 = a.x0 + static_cast<double>(lo_i) * a.dx;
  s.y0 = a.y0 + static_cast<double>(lo_j) * a.dy;
  s.cols = static_cast<std::size_t>(hi_i - lo_i);
  s.rows = static_cast<std::size_t>(hi_j - lo_j);
  return Frame{s, -lo_i, -lo_j, oi - lo_i, oj - lo_j};
}

std::vector<std::uint8_t> place(const GridSet2D& set, const Frame& fr,
                                long long oi, long long oj) {
  std::vector<std::uint8_t> m(fr.spec.cells(), 0);
  const auto& s = set.spec();
  for (std::size_t i = 0; i < s.cols; ++i) {
    for (std::size_t j = 0; j < s.rows; ++j) {
      if (set.contains(i, j)) {
        m[fr.spec.index(i + static_cast<std::size_t>(oi),
                        j + static_cast<std::size_t>(oj))] = 1;
      }
    }
  }
  return m;
}

template <typename Op>
GridSet2D combine(const GridSet2D& a, const GridSet2D& b, Op op) {
  const Frame fr = common_frame(a.spec(), b.spec());
  auto ma = place(a, fr, fr.ai, fr.aj);
  auto mb = place(b, fr, fr.bi, fr.bj);
  for (std::size_t k = 0; k < ma.size(); ++k) ma[k] = op(ma[k] != 0, mb[k] != 0);
  return GridSet2D(fr.spec, std::move(ma));
}

}  // namespace

GridSet2D set_union(const GridSet2D& a, const GridSet2D& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

GridSet2D set_intersection(const GridSet2D& a, const GridSet2D& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

GridSet2D set_difference(const GridSet2D& a, const GridSet2D& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

bool is_subset(const GridSet2D& a, const GridSet2D& b) {
  return set_difference(a, b).count() == 0;
}

bool disjoint(const GridSet2D& a, const GridSet2D& b) {
  return set_intersection(a, b).count() == 0;
}

// ---------------------------------------------------------------------------
// StaircaseSet

StaircaseSet::StaircaseSet(double dx, double dy, std::vector<std::size_t> heights)
    : dx_(dx), dy_(dy), heights_(std::move(heights)) {
  if (!(dx_ > 0.0) || !(dy_ > 0.0)) throw_domain("staircase cells must be positive");
  if (!std::is_sorted(heights_.begin(), heights_.end(), std::greater<>())) {
    throw_domain("staircase heights must be nonincreasing");
  }
  while (!heights_.empty() && heights_.back() == 0) heights_.pop_back();
}

StaircaseSet StaircaseSet::rectangle(double dx, double dy, std::size_t cols,
                                     std::size_t rows) {
  return StaircaseSet(dx, dy, std::vector<std::size_t>(cols, rows));
}

std::size_t StaircaseSet::cell_count() const {
  std::size_t n = 0;
  for (auto h : heights_) n += h;
  return n;
}

double StaircaseSet::measure() const {
  return static_cast<double>(cell_count()) * dx_ * dy_;
}

StaircaseSet StaircaseSet::dilated() const {
  return StaircaseSet(2.0 * dx_, 2.0 * dy_, heights_);
}

GridSet2D StaircaseSet::to_grid_set(std::size_t cols, std::size_t rows) const {
  if (columns() > cols || (!empty() && heights_.front() > rows)) {
    throw_domain("staircase does not fit in the requested grid");
  }
  GridSpec spec = GridSpec::anchored(dx_, dy_, cols, rows);
  std::vector<std::uint8_t> m(spec.cells(), 0);
  for (std::size_t i = 0; i < columns(); ++i) {
    for (std::size_t j = 0; j < heights_[i]; ++j) m[spec.index(i, j)] = 1;
  }
  return GridSet2D(spec, std::move(m));
}

bool is_subset(const StaircaseSet& a, const StaircaseSet& b) {
  if (a.dx() != b.dx() || a.dy() != b.dy()) {
    throw_domain("staircases have different cell sizes");
  }
  for (std::size_t i = 0; i < a.columns(); ++i) {
    if (a.height(i) > b.height(i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// StepFunction1D

StepFunction1D::StepFunction1D(double dt, std::vector<double> values)
    : dt_(dt), values_(std::move(values)) {
  if (!(dt_ > 0.0) || !std::isfinite(dt_)) throw_domain("step width must be positive");
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw_domain("step function values must be finite and nonnegative");
    }
  }
  if (!std::is_sorted(values_.begin(), values_.end(), std::greater<>())) {
    throw_domain("step function values must be nonincreasing");
  }
}

double StepFunction1D::operator()(double t) const {
  if (t < 0.0) return 0.0;
  const double k = std::floor(t / dt_);
  if (k >= static_cast<double>(values_.size())) return 0.0;
  return values_[static_cast<std::size_t>(k)];
}

double StepFunction1D::integral_to(double t) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double lo = static_cast<double>(k) * dt_;
    if (lo >= t) break;
    const double hi = std::min(t, lo + dt_);
    acc += values_[k] * (hi - lo);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Decreasing2DGridFunction

Decreasing2DGridFunction::Decreasing2DGridFunction(double dx, double dy,
                                                   std::size_t cols,
                                                   std::size_t rows,
                                                   std::vector<double> column_major)
    : dx_(dx), dy_(dy), cols_(cols), rows_(rows), values_(std::move(column_major)) {
  if (!(dx_ > 0.0) || !(dy_ > 0.0)) throw_domain("cells must be positive");
  if (values_.size() != cols_ * rows_) throw_domain("value block has wrong size");
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t j = 0; j < rows_; ++j) {
      const double v = values_[i * rows_ + j];
      if (!std::isfinite(v) || v < 0.0) throw_domain("values must be finite and nonnegative");
      if (j + 1 < rows_ && values_[i * rows_ + j + 1] > v) {
        throw_domain("function is not nonincreasing in y");
      }
      if (i + 1 < cols_ && values_[(i + 1) * rows_ + j] > v) {
        throw_domain("function is not nonincreasing in x");
      }
    }
  }
}

StaircaseSet Decreasing2DGridFunction::superlevel(double t) const {
  std::vector<std::size_t> h(cols_);
  for (std::size_t i = 0; i < cols_; ++i) {
    h[i] = kernels::count_greater(column(i), t);
  }
  return StaircaseSet(dx_, dy_, std::move(h));
}

GridFunction2D Decreasing2DGridFunction::as_grid_function() const {
  return GridFunction2D(GridSpec::anchored(dx_, dy_, cols_, rows_), values_);
}

// ---------------------------------------------------------------------------
// Primitive operations

GridFunction2D SimpleDecomposition::reconstruct() const {
  if (levels.empty()) return {};
  const GridSpec spec = levels.front().cells.spec();
  std::vector<double> v(spec.cells(), 0.0);
  for (const auto& level : levels) {
    auto mask = level.cells.mask();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (mask[k]) v[k] += level.value;
    }
  }
  return GridFunction2D(spec, std::move(v));
}

double measure(const GridSet2D& set) {
  return static_cast<double>(set.count()) * set.spec().cell_area();
}

GridSet2D superlevel_set(const GridFunction2D& f, double t) {
  if (!(t >= 0.0)) throw_domain("level must be nonnegative");
  auto values = f.values();
  std::vector<std::uint8_t> m(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) m[k] = values[k] > t ? 1 : 0;
  return GridSet2D(f.spec(), std::move(m));
}

double distribution(const GridFunction2D& f, double t) {
  if (!(t >= 0.0)) throw_domain("level must be nonnegative");
  return static_cast<double>(kernels::count_greater(f.values(), t)) *
         f.spec().cell_area();
}

std::vector<double> cross_section_profile(const GridSet2D& set) {
  std::vector<double> phi(set.spec().cols);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    phi[i] = static_cast<double>(set.column_count(i)) * set.spec().dy;
  }
  return phi;
}

SimpleDecomposition simple_decomposition(const GridFunction2D& f) {
  // Distinct positive values, largest first, with the cells carrying each.
  std::map<double, std::vector<std::size_t>, std::greater<>> by_value;
  auto values = f.values();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] > 0.0) by_value[values[k]].push_back(k);
  }
  if (by_value.empty()) throw_domain("simple decomposition of the zero function is empty");

  SimpleDecomposition d;
  d.levels.reserve(by_value.size());
  d.cumulative.reserve(by_value.size());
  std::vector<std::uint8_t> running(f.spec().cells(), 0);
  for (auto it = by_value.begin(); it != by_value.end(); ++it) {
    std::vector<std::uint8_t> level(f.spec().cells(), 0);
    for (auto k : it->second) level[k] = running[k] = 1;
    auto next = std::next(it);
    const double below = next == by_value.end() ? 0.0 : next->first;
    d.levels.push_back({it->first, GridSet2D(f.spec(), std::move(level))});
    d.cumulative.push_back({it->first - below, GridSet2D(f.spec(), running)});
  }
  return d;
}

// ---------------------------------------------------------------------------
// Pointwise helpers

namespace {

template <typename Op>
GridFunction2D zip(const GridFunction2D& f, const GridFunction2D& g, Op op) {
  if (f.spec() != g.spec()) throw_domain("pointwise operation needs identical grids");
  std::vector<double> v(f.values().size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = op(f.values()[k], g.values()[k]);
  return GridFunction2D(f.spec(), std::move(v));
}

template <typename Op>
GridFunction2D map(const GridFunction2D& f, Op op) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (auto& x : v) x = op(x);
  return GridFunction2D(f.spec(), std::move(v));
}

}  // namespace

GridFunction2D add(const GridFunction2D& f, const GridFunction2D& g) {
  return zip(f, g, [](double a, double b) { return a + b; });
}

GridFunction2D scale(const GridFunction2D& f, double c) {
  if (!(c >= 0.0)) throw_domain("scale factor must be nonnegative");
  return map(f, [c](double a) { return c * a; });
}

GridFunction2D power(const GridFunction2D& f, double p) {
  if (!(p > 0.0)) throw_domain("exponent must be positive");
  return map(f, [p](double a) { return std::pow(a, p); });
}

GridFunction2D pointwise_min(const GridFunction2D& f, double cap) {
  return map(f, [cap](double a) { return std::min(a, cap); });
}

GridFunction2D pointwise_min(const GridFunction2D& f, const GridFunction2D& g) {
  return zip(f, g, [](double a, double b) { return std::min(a, b); });
}

GridFunction2D transpose(const GridFunction2D& f) {
  const GridSpec& s = f.spec();
  GridSpec t{s.y0, s.x0, s.dy, s.dx, s.rows, s.cols};
  std::vector<double> v(s.cells());
  for (std::size_t i = 0; i < s.cols; ++i) {
    for (std::size_t j = 0; j < s.rows; ++j) v[t.index(j, i)] = f(i, j);
  }
  return GridFunction2D(t, std::move(v));
}

bool pointwise_leq(std::span<const double> a, std::span<const double> b) {
  return kernels::all_less_equal(a, b);
}

}  // namespace mdr
