#pragma once

// Decreasing rearrangements of sets and functions.
//
// All two-dimensional outputs are anchored at the origin of R^2_+ and keep
// the cell size and dimensions of their input, whatever the input origin.

#include <span>

#include "mdr/grid.hpp"

namespace mdr {

// Nonincreasing rearrangement of a step function with equal widths. Throws
// DomainError on mismatched lengths or nonuniform widths.
StepFunction1D rearrange_1d(std::span<const double> values,
                            std::span<const double> widths);
StepFunction1D rearrange_1d(std::span<const double> values, double width);

// E* = {(s,t) : 0 < t < phi_E*(s)}, phi_E the column cross-section profile.
StaircaseSet rearrange_set(const GridSet2D& set);

// f*_2 from the layer-cake formula. The grid function is simple, so the
// t-integral collapses to sum_j b_j chi_{F_j*}; it is evaluated as
// a_j on F_j* \ F_{j-1}*, which telescopes to the same thing without
// accumulating the b_j.
Decreasing2DGridFunction rearrange_layercake(const GridFunction2D& f);

enum class SliceOrder {
  YThenX,  // sort every fixed-x slice in y, then every fixed-y slice in x
  XThenY,
};

// Iterated one-dimensional rearrangement. The default order reproduces f*_2;
// the other order generally does not.
Decreasing2DGridFunction rearrange_iterative(const GridFunction2D& f,
                                             SliceOrder order = SliceOrder::YThenX);

// Classical f*: every cell value on a width dx*dy step of R_+.
StepFunction1D rearrange_classical(const GridFunction2D& f);
StepFunction1D rearrange_classical(const Decreasing2DGridFunction& f);

// f(x,y) = g(x) h(y) on an anchored grid.
GridFunction2D tensor_product(std::span<const double> g, double dx,
                              std::span<const double> h, double dy);

// g*(s) h*(t) as a decreasing grid function.
Decreasing2DGridFunction rearrange_product(std::span<const double> g, double dx,
                                           std::span<const double> h, double dy);

}  // namespace mdr
