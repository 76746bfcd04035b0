#include "mdr/weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mdr/error.hpp"

namespace mdr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Geometric slack when comparing rectangle corners against domain bounds.
constexpr double kEdgeSlack = 1e-12;

bool within(double lo, double hi, double dom_lo, double dom_hi) {
  const double slack = kEdgeSlack * std::max({1.0, std::abs(dom_lo), std::abs(dom_hi)});
  return lo >= dom_lo - slack && hi <= dom_hi + slack;
}

std::string describe(const Rect& r) {
  std::ostringstream os;
  os << "[" << r.s0 << ", " << r.s1 << ") x [" << r.t0 << ", " << r.t1 << ")";
  return os.str();
}

double power_integral(double lo, double hi, double exponent) {
  if (exponent == 0.0) return hi - lo;
  const double e1 = exponent + 1.0;
  return (std::pow(hi, e1) - std::pow(lo, e1)) / e1;
}

// Integral of a step function with steps of width `dt` starting at `origin`
// over [lo, hi).
template <typename ValueAt>
double step_integral(double lo, double hi, double origin, double dt, std::size_t n,
                     ValueAt value_at) {
  if (hi <= lo || n == 0) return 0.0;
  const double first = std::floor((lo - origin) / dt);
  std::size_t k = first < 0.0 ? 0 : static_cast<std::size_t>(first);
  double acc = 0.0;
  for (; k < n; ++k) {
    const double c0 = origin + static_cast<double>(k) * dt;
    if (c0 >= hi) break;
    const double c1 = origin + static_cast<double>(k + 1) * dt;
    const double overlap = std::min(hi, c1) - std::max(lo, c0);
    if (overlap > 0.0) acc += value_at(k) * overlap;
  }
  return acc;
}

}  // namespace

Weight2D Weight2D::constant(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw_domain("constant weight must be positive");
  return Weight2D(ConstantWeight{value});
}

Weight2D Weight2D::power(double a, double b, double scale) {
  if (!(a > -1.0) || !(b > -1.0)) throw_domain("power weight exponents must exceed -1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw_domain("power weight scale must be positive");
  return Weight2D(PowerWeight{a, b, scale});
}

Weight2D Weight2D::vertical(StepFunction1D profile) {
  if (profile.size() == 0) throw_domain("vertical weight needs a nonempty profile");
  for (double v : profile.values()) {
    if (!(v > 0.0)) throw_domain("vertical weight must be strictly positive");
  }
  return Weight2D(VerticalWeight{std::move(profile)});
}

Weight2D Weight2D::grid(GridFunction2D samples) {
  const GridSpec& s = samples.spec();
  if (s.x0 < 0.0 || s.y0 < 0.0) throw_domain("grid weight must lie in the positive quadrant");
  if (s.cells() == 0) throw_domain("grid weight needs at least one cell");
  for (double v : samples.values()) {
    if (!(v > 0.0)) throw_domain("grid weight must be strictly positive");
  }
  return Weight2D(GridWeight{std::move(samples)});
}

Weight2D Weight2D::sampled(const std::function<double(double, double)>& w,
                           const GridSpec& box) {
  box.validate();
  std::vector<double> v(box.cells());
  for (std::size_t i = 0; i < box.cols; ++i) {
    for (std::size_t j = 0; j < box.rows; ++j) {
      const double s = box.x0 + (static_cast<double>(i) + 0.5) * box.dx;
      const double t = box.y0 + (static_cast<double>(j) + 0.5) * box.dy;
      v[box.index(i, j)] = w(s, t);
    }
  }
  return grid(GridFunction2D(box, std::move(v)));
}

std::string Weight2D::kind_name() const {
  return std::visit(overloaded{[](const ConstantWeight&) { return "constant"; },
                               [](const PowerWeight&) { return "power"; },
                               [](const VerticalWeight&) { return "vertical"; },
                               [](const GridWeight&) { return "grid"; }},
                    kind_);
}

bool Weight2D::covers(const Rect& r) const {
  if (r.s0 < 0.0 || r.t0 < 0.0 || r.s1 < r.s0 || r.t1 < r.t0) return false;
  return std::visit(
      overloaded{[](const ConstantWeight&) { return true; },
                 [](const PowerWeight&) { return true; },
                 [&](const VerticalWeight& w) {
                   return within(r.t0, r.t1, 0.0, w.profile.length());
                 },
                 [&](const GridWeight& w) {
                   const GridSpec& s = w.samples.spec();
                   return within(r.s0, r.s1, s.x0, s.x0 + static_cast<double>(s.cols) * s.dx) &&
                          within(r.t0, r.t1, s.y0, s.y0 + static_cast<double>(s.rows) * s.dy);
                 }},
      kind_);
}

double Weight2D::integrate(const Rect& r) const {
  if (!covers(r)) throw_coverage("weight (" + kind_name() + ") does not cover " + describe(r));
  return std::visit(
      overloaded{
          [&](const ConstantWeight& w) { return w.value * (r.s1 - r.s0) * (r.t1 - r.t0); },
          [&](const PowerWeight& w) {
            return w.scale * power_integral(r.s0, r.s1, w.a) * power_integral(r.t0, r.t1, w.b);
          },
          [&](const VerticalWeight& w) {
            const auto& v = w.profile;
            return (r.s1 - r.s0) *
                   step_integral(r.t0, r.t1, 0.0, v.dt(), v.size(),
                                 [&](std::size_t k) { return v.values()[k]; });
          },
          [&](const GridWeight& w) {
            const GridSpec& s = w.samples.spec();
            double acc = 0.0;
            const double first = std::floor((r.s0 - s.x0) / s.dx);
            std::size_t i = first < 0.0 ? 0 : static_cast<std::size_t>(first);
            for (; i < s.cols; ++i) {
              const double c0 = s.x0 + static_cast<double>(i) * s.dx;
              if (c0 >= r.s1) break;
              const double c1 = s.x0 + static_cast<double>(i + 1) * s.dx;
              const double width = std::min(r.s1, c1) - std::max(r.s0, c0);
              if (width <= 0.0) continue;
              acc += width * step_integral(r.t0, r.t1, s.y0, s.dy, s.rows,
                                           [&](std::size_t j) { return w.samples(i, j); });
            }
            return acc;
          }},
      kind_);
}

double Weight2D::at(double s, double t) const {
  if (!covers(Rect{s, s, t, t})) {
    throw_coverage("weight (" + kind_name() + ") is not defined at the requested point");
  }
  return std::visit(
      overloaded{[](const ConstantWeight& w) { return w.value; },
                 [&](const PowerWeight& w) {
                   return w.scale * std::pow(s, w.a) * std::pow(t, w.b);
                 },
                 [&](const VerticalWeight& w) {
                   const auto k = std::min(static_cast<std::size_t>(t / w.profile.dt()),
                                           w.profile.size() - 1);
                   return w.profile.values()[k];
                 },
                 [&](const GridWeight& w) {
                   const GridSpec& g = w.samples.spec();
                   const auto i = std::min(static_cast<std::size_t>((s - g.x0) / g.dx), g.cols - 1);
                   const auto j = std::min(static_cast<std::size_t>((t - g.y0) / g.dy), g.rows - 1);
                   return w.samples(i, j);
                 }},
      kind_);
}

}  // namespace mdr
