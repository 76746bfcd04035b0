#pragma once

// Positive weights on R^2_+ and their exact integrals over axis-aligned
// rectangles.

#include <functional>
#include <string>
#include <variant>

#include "mdr/grid.hpp"

namespace mdr {

// [s0, s1) x [t0, t1) in R^2_+.
struct Rect {
  double s0 = 0.0;
  double s1 = 0.0;
  double t0 = 0.0;
  double t1 = 0.0;
};

struct ConstantWeight {
  double value = 1.0;
};

// scale * s^a * t^b with a, b > -1.
struct PowerWeight {
  double a = 0.0;
  double b = 0.0;
  double scale = 1.0;
};

// w(s, t) = v(t); defined for t below the length of v.
struct VerticalWeight {
  StepFunction1D profile;
};

// Piecewise constant on the cells of a grid lying in R^2_+.
struct GridWeight {
  GridFunction2D samples;
};

class Weight2D {
 public:
  using Kind = std::variant<ConstantWeight, PowerWeight, VerticalWeight, GridWeight>;

  // Each factory throws DomainError unless the weight is strictly positive
  // on its domain.
  static Weight2D constant(double value = 1.0);
  static Weight2D power(double a, double b, double scale = 1.0);
  static Weight2D vertical(StepFunction1D profile);
  static Weight2D grid(GridFunction2D samples);
  // Samples `w` at the cell centres of `box` (which must start in R^2_+).
  // The result integrates linear functions exactly.
  static Weight2D sampled(const std::function<double(double, double)>& w,
                          const GridSpec& box);

  const Kind& kind() const { return kind_; }
  std::string kind_name() const;

  bool covers(const Rect& r) const;
  // Integral over `r`; throws CoverageError if `r` leaves the domain.
  double integrate(const Rect& r) const;
  // Point value. Grid and vertical weights are evaluated at the cell containing
  // the point; outside the domain this throws CoverageError.
  double at(double s, double t) const;

 private:
  explicit Weight2D(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

}  // namespace mdr
