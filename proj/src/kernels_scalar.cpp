#include <algorithm>

#include "mdr/kernels.hpp"

namespace mdr::kernels::scalar {

double sum(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v;
  return acc;
}

double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k];
  return acc;
}

std::size_t count_greater(std::span<const double> x, double threshold) {
  std::size_t n = 0;
  for (double v : x) n += v > threshold ? 1 : 0;
  return n;
}

double max_value(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, v);
  return m;
}

bool all_less_equal(std::span<const double> x, std::span<const double> y) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] <= y[k])) return false;
  }
  return true;
}

}  // namespace mdr::kernels::scalar
