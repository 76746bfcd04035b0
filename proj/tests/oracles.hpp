#pragma once

// Brute-force reference computations that share no code with the library
// beyond the container types. Values are plain nested vectors indexed
// [column][row].

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "mdr/grid.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix to_matrix(const mdr::GridFunction2D& f) {
  Matrix m(f.cols(), std::vector<double>(f.rows()));
  for (std::size_t i = 0; i < f.cols(); ++i) {
    for (std::size_t j = 0; j < f.rows(); ++j) m[i][j] = f(i, j);
  }
  return m;
}

inline Matrix to_matrix(const mdr::Decreasing2DGridFunction& f) {
  Matrix m(f.cols(), std::vector<double>(f.rows()));
  for (std::size_t i = 0; i < f.cols(); ++i) {
    for (std::size_t j = 0; j < f.rows(); ++j) m[i][j] = f.at(i, j);
  }
  return m;
}

// Column counts of a 0/1 matrix, sorted into a nonincreasing profile.
inline std::vector<std::size_t> staircase_of(const std::vector<std::vector<bool>>& set) {
  std::vector<std::size_t> h;
  for (const auto& col : set) {
    h.push_back(static_cast<std::size_t>(std::count(col.begin(), col.end(), true)));
  }
  std::sort(h.begin(), h.end(), std::greater<>());
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

// f*_2(i,j) = max{ v : (i,j) in {f >= v}* }, v over the values of f.
inline Matrix rearrangement(const Matrix& f) {
  const std::size_t cols = f.size();
  const std::size_t rows = cols ? f[0].size() : 0;
  std::set<double> values;
  for (const auto& c : f) {
    for (double v : c) {
      if (v > 0) values.insert(v);
    }
  }
  Matrix out(cols, std::vector<double>(rows, 0.0));
  for (double v : values) {
    std::vector<std::vector<bool>> level(cols, std::vector<bool>(rows));
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t j = 0; j < rows; ++j) level[i][j] = f[i][j] >= v;
    }
    const auto h = staircase_of(level);
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = 0; j < h[i]; ++j) out[i][j] = std::max(out[i][j], v);
    }
  }
  return out;
}

// All cell values sorted nonincreasingly.
inline std::vector<double> classical(const Matrix& f) {
  std::vector<double> v;
  for (const auto& c : f) v.insert(v.end(), c.begin(), c.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Lebesgue norm by direct summation in long double.
inline double lebesgue(const Matrix& f, double p, double area) {
  long double acc = 0.0L;
  for (const auto& c : f) {
    for (double v : c) acc += std::pow(static_cast<long double>(v), p);
  }
  return static_cast<double>(std::pow(acc * area, 1.0L / p));
}

}  // namespace oracle
