#include "mdr/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "mdr/error.hpp"
#include "mdr/kernels.hpp"
#include "mdr/rearrange.hpp"

namespace mdr {

namespace {

void require_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw_domain("exponent p must be positive");
}

Rect cell_rect(double dx, double dy, std::size_t i, std::size_t j) {
  return Rect{static_cast<double>(i) * dx, static_cast<double>(i + 1) * dx,
              static_cast<double>(j) * dy, static_cast<double>(j + 1) * dy};
}

std::vector<double> powered(std::span<const double> v, double p) {
  std::vector<double> out(v.begin(), v.end());
  if (p != 1.0) {
    for (auto& x : out) x = std::pow(x, p);
  }
  return out;
}

}  // namespace

double weight_measure(const Weight2D& w, const StaircaseSet& d) {
  double acc = 0.0;
  for (std::size_t i = 0; i < d.columns(); ++i) {
    for (std::size_t j = 0; j < d.height(i); ++j) {
      acc += w.integrate(cell_rect(d.dx(), d.dy(), i, j));
    }
  }
  return acc;
}

std::vector<double> weight_cell_integrals(const Weight2D& w, double dx, double dy,
                                          std::size_t cols, std::size_t rows,
                                          std::span<const double> needed) {
  if (needed.size() != cols * rows) throw_domain("support mask has wrong size");
  std::vector<double> out(cols * rows, 0.0);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      const std::size_t k = i * rows + j;
      if (needed[k] > 0.0) out[k] = w.integrate(cell_rect(dx, dy, i, j));
    }
  }
  return out;
}

double lorentz_norm_2d(const Decreasing2DGridFunction& rearranged, const Weight2D& w,
                       double p) {
  require_exponent(p);
  const auto cells = weight_cell_integrals(w, rearranged.dx(), rearranged.dy(),
                                           rearranged.cols(), rearranged.rows(),
                                           rearranged.values());
  const auto fp = powered(rearranged.values(), p);
  return std::pow(kernels::dot(fp, cells), 1.0 / p);
}

double lorentz_norm_2d(const GridFunction2D& f, const Weight2D& w, double p) {
  return lorentz_norm_2d(rearrange_layercake(f), w, p);
}

double lebesgue_norm(const GridFunction2D& f, double p) {
  require_exponent(p);
  const auto fp = powered(f.values(), p);
  return std::pow(kernels::sum(fp) * f.spec().cell_area(), 1.0 / p);
}

double classical_lorentz_norm_1d(std::span<const double> values, double width,
                                 const StepFunction1D& v, double p) {
  require_exponent(p);
  const StepFunction1D fs = rearrange_1d(values, width);
  const std::size_t support = kernels::count_greater(fs.values(), 0.0);
  const double end = static_cast<double>(support) * width;
  if (end > v.length() * (1.0 + 1e-12)) {
    throw_coverage("profile v is shorter than the support of f*");
  }
  // Merge the two step partitions of [0, end).
  double acc = 0.0;
  std::size_t a = 0;  // step of f*
  std::size_t b = 0;  // step of v
  double t = 0.0;
  while (a < support && b < v.size()) {
    const double fa_end = static_cast<double>(a + 1) * width;
    const double vb_end = static_cast<double>(b + 1) * v.dt();
    const double next = std::min(fa_end, vb_end);
    acc += std::pow(fs.values()[a], p) * v.values()[b] * (next - t);
    t = next;
    if (fa_end <= next) ++a;
    if (vb_end <= next) ++b;
  }
  return std::pow(acc, 1.0 / p);
}

double classical_lorentz_norm(const GridFunction2D& f, const StepFunction1D& v,
                              double p) {
  return classical_lorentz_norm_1d(f.values(), f.spec().cell_area(), v, p);
}

DoublingReport check_quasinorm_doubling(const Weight2D& w,
                                        std::span<const StaircaseSet> family) {
  if (family.empty()) throw_domain("doubling check needs a nonempty family");
  DoublingReport r;
  r.ratios.reserve(family.size());
  for (std::size_t k = 0; k < family.size(); ++k) {
    const StaircaseSet& d = family[k];
    if (d.empty()) throw_domain("doubling check family contains an empty set");
    // int_D w(2x) dx = (1/4) int_{2D} w(y) dy.
    const double dilated = 0.25 * weight_measure(w, d.dilated());
    const double ratio = dilated / weight_measure(w, d);
    r.ratios.push_back(ratio);
    if (k == 0 || ratio > r.constant) {
      r.constant = ratio;
      r.witness = k;
    }
  }
  return r;
}

SubmodularityTerms submodularity_terms(const Weight2D& w, const GridSet2D& a,
                                       const GridSet2D& b) {
  SubmodularityTerms t;
  t.w_intersection = weight_measure(w, rearrange_set(set_intersection(a, b)));
  t.w_union = weight_measure(w, rearrange_set(set_union(a, b)));
  t.w_a = weight_measure(w, rearrange_set(a));
  t.w_b = weight_measure(w, rearrange_set(b));
  return t;
}

std::vector<SubmodularityViolation> check_norm_submodularity(
    const Weight2D& w, std::span<const std::pair<GridSet2D, GridSet2D>> pairs) {
  std::vector<SubmodularityViolation> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto terms = submodularity_terms(w, pairs[k].first, pairs[k].second);
    if (terms.lhs() > terms.rhs() + kSubmodularityRelTol * terms.rhs()) {
      out.push_back({k, terms});
    }
  }
  return out;
}

FactorizationVerdict check_weight_factorization(const Weight2D& w, const GridSpec& box) {
  box.validate();
  if (box.cols == 0 || box.rows == 0) throw_domain("sampling grid must be nonempty");
  FactorizationVerdict v;
  v.dt = box.dy;
  auto sample = [&](std::size_t i, std::size_t j) {
    return w.at(box.x0 + (static_cast<double>(i) + 0.5) * box.dx,
                box.y0 + (static_cast<double>(j) + 0.5) * box.dy);
  };
  std::vector<double> profile(box.rows);
  for (std::size_t j = 0; j < box.rows; ++j) profile[j] = sample(0, j);
  for (std::size_t i = 1; i < box.cols; ++i) {
    for (std::size_t j = 0; j < box.rows; ++j) {
      const double value = sample(i, j);
      if (std::abs(value - profile[j]) > kFactorizationRelTol * std::abs(profile[j])) {
        v.witness = std::make_pair(i, j);
        v.reason = "w depends on s";
        return v;
      }
    }
  }
  v.profile = profile;
  for (std::size_t j = 1; j < box.rows; ++j) {
    if (profile[j] > profile[j - 1] * (1.0 + kFactorizationRelTol)) {
      v.witness = std::make_pair(std::size_t{0}, j);
      v.reason = "v(t) increases";
      return v;
    }
  }
  v.factors = true;
  v.reason = "w(s,t) = v(t) with v nonincreasing";
  return v;
}

EmbeddingRatioReport embedding_sup_ratio(const Weight2D& w1, const Weight2D& w2,
                                         double p1, double p2,
                                         std::span<const StaircaseSet> family) {
  require_exponent(p1);
  require_exponent(p2);
  if (p1 > p2) throw_domain("embedding ratio requires p1 <= p2");
  if (family.empty()) throw_domain("embedding check needs a nonempty family");
  EmbeddingRatioReport r;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const StaircaseSet& d = family[k];
    if (d.empty()) throw_domain("embedding family contains an empty set");
    const double ratio = std::pow(weight_measure(w2, d), 1.0 / p2) /
                         std::pow(weight_measure(w1, d), 1.0 / p1);
    const auto chi = GridFunction2D::indicator(d.to_grid_set(d.columns(), d.height(0)));
    const double norm_ratio = lorentz_norm_2d(chi, w2, p2) / lorentz_norm_2d(chi, w1, p1);
    r.ratios.push_back(ratio);
    r.norm_ratios.push_back(norm_ratio);
    if (k == 0 || ratio > r.sup) {
      r.sup = ratio;
      r.witness = k;
    }
  }
  return r;
}

EmbeddingExponents::EmbeddingExponents(double p1, double p2) : p1_(p1), p2_(p2) {
  require_exponent(p1);
  require_exponent(p2);
  if (!(p1 > p2)) throw_domain("embedding exponents need p1 > p2");
  r_ = 1.0 / (1.0 / p2 - 1.0 / p1);
}

double embedding_integral(const Weight2D& w1, const Weight2D& w2,
                          const EmbeddingExponents& exps,
                          const Decreasing2DGridFunction& h) {
  std::set<double, std::greater<>> levels;
  for (double v : h.values()) {
    if (v > 0.0) levels.insert(v);
  }
  if (levels.empty()) throw_domain("embedding integral needs a nonzero h");
  const double a1 = -exps.r() / exps.p1();
  const double a2 = exps.r() / exps.p2();
  double acc = 0.0;
  double previous = 0.0;  // w2(G_{k-1})^(r/p2), G_0 empty
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    auto below = std::next(it);
    const double t = below == levels.end() ? 0.0 : *below;
    const StaircaseSet g = h.superlevel(t);  // {h >= t_k}
    const double current = std::pow(weight_measure(w2, g), a2);
    acc += std::pow(weight_measure(w1, g), a1) * (current - previous);
    previous = current;
  }
  return acc;
}

EmbeddingIntegralReport embedding_integral_sup(
    const Weight2D& w1, const Weight2D& w2, const EmbeddingExponents& exps,
    std::span<const Decreasing2DGridFunction> family) {
  if (family.empty()) throw_domain("embedding check needs a nonempty family");
  EmbeddingIntegralReport r;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const double v = embedding_integral(w1, w2, exps, family[k]);
    r.values.push_back(v);
    if (k == 0 || v > r.sup) {
      r.sup = v;
      r.witness = k;
    }
  }
  return r;
}

}  // namespace mdr
