#include "mdr/rearrange.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "mdr/error.hpp"

namespace mdr {

namespace {

std::vector<double> sorted_descending(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  std::stable_sort(v.begin(), v.end(), std::greater<>());
  return v;
}

void check_values(std::span<const double> values) {
  for (double v : values) {
    if (!(v >= 0.0)) throw_domain("values must be nonnegative");
  }
}

}  // namespace

StepFunction1D rearrange_1d(std::span<const double> values,
                            std::span<const double> widths) {
  if (values.size() != widths.size()) throw_domain("values and widths differ in length");
  if (widths.empty()) return StepFunction1D(1.0, {});
  const double w = widths.front();
  for (double x : widths) {
    if (x != w) throw_domain("only uniform widths are supported");
  }
  return rearrange_1d(values, w);
}

StepFunction1D rearrange_1d(std::span<const double> values, double width) {
  check_values(values);
  return StepFunction1D(width, sorted_descending(values));
}

StaircaseSet rearrange_set(const GridSet2D& set) {
  const GridSpec& s = set.spec();
  std::vector<std::size_t> heights(s.cols);
  for (std::size_t i = 0; i < s.cols; ++i) heights[i] = set.column_count(i);
  std::stable_sort(heights.begin(), heights.end(), std::greater<>());
  return StaircaseSet(s.dx, s.dy, std::move(heights));
}

Decreasing2DGridFunction rearrange_layercake(const GridFunction2D& f) {
  const GridSpec& s = f.spec();
  std::vector<double> out(s.cells(), 0.0);
  if (f.is_zero()) return Decreasing2DGridFunction(s.dx, s.dy, s.cols, s.rows, out);

  const SimpleDecomposition d = simple_decomposition(f);
  // Column counts of F_j accumulate level by level; their nonincreasing
  // rearrangement is the height profile of F_j*.
  std::vector<std::size_t> counts(s.cols, 0);
  std::vector<std::size_t> previous(s.cols, 0);
  std::vector<std::size_t> heights(s.cols);
  for (const auto& level : d.levels) {
    for (std::size_t i = 0; i < s.cols; ++i) counts[i] += level.cells.column_count(i);
    heights = counts;
    std::sort(heights.begin(), heights.end(), std::greater<>());
    for (std::size_t i = 0; i < s.cols; ++i) {
      for (std::size_t j = previous[i]; j < heights[i]; ++j) {
        out[s.index(i, j)] = level.value;
      }
    }
    previous.swap(heights);
  }
  return Decreasing2DGridFunction(s.dx, s.dy, s.cols, s.rows, std::move(out));
}

Decreasing2DGridFunction rearrange_iterative(const GridFunction2D& f,
                                             SliceOrder order) {
  const GridSpec& s = f.spec();
  std::vector<double> v(f.values().begin(), f.values().end());
  auto sort_columns = [&] {
    for (std::size_t i = 0; i < s.cols; ++i) {
      auto first = v.begin() + static_cast<std::ptrdiff_t>(i * s.rows);
      std::stable_sort(first, first + static_cast<std::ptrdiff_t>(s.rows),
                       std::greater<>());
    }
  };
  auto sort_rows = [&] {
    std::vector<double> row(s.cols);
    for (std::size_t j = 0; j < s.rows; ++j) {
      for (std::size_t i = 0; i < s.cols; ++i) row[i] = v[s.index(i, j)];
      std::stable_sort(row.begin(), row.end(), std::greater<>());
      for (std::size_t i = 0; i < s.cols; ++i) v[s.index(i, j)] = row[i];
    }
  };
  if (order == SliceOrder::YThenX) {
    sort_columns();
    sort_rows();
  } else {
    sort_rows();
    sort_columns();
  }
  return Decreasing2DGridFunction(s.dx, s.dy, s.cols, s.rows, std::move(v));
}

StepFunction1D rearrange_classical(const GridFunction2D& f) {
  return StepFunction1D(f.spec().cell_area(), sorted_descending(f.values()));
}

StepFunction1D rearrange_classical(const Decreasing2DGridFunction& f) {
  return StepFunction1D(f.dx() * f.dy(), sorted_descending(f.values()));
}

GridFunction2D tensor_product(std::span<const double> g, double dx,
                              std::span<const double> h, double dy) {
  check_values(g);
  check_values(h);
  const GridSpec s = GridSpec::anchored(dx, dy, g.size(), h.size());
  std::vector<double> v(s.cells());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) v[s.index(i, j)] = g[i] * h[j];
  }
  return GridFunction2D(s, std::move(v));
}

Decreasing2DGridFunction rearrange_product(std::span<const double> g, double dx,
                                           std::span<const double> h, double dy) {
  const StepFunction1D gs = rearrange_1d(g, dx);
  const StepFunction1D hs = rearrange_1d(h, dy);
  std::vector<double> v(g.size() * h.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      v[i * h.size() + j] = gs.values()[i] * hs.values()[j];
    }
  }
  return Decreasing2DGridFunction(dx, dy, g.size(), h.size(), std::move(v));
}

}  // namespace mdr
