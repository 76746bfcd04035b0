#pragma once

// Exact finite-support objects on uniform rectangular lattices.
//
// Cell (i, j) of a grid covers the half-open rectangle
//   [x0 + i*dx, x0 + (i+1)*dx) x [y0 + j*dy, y0 + (j+1)*dy).
// Index i runs along x (columns), j along y (rows). Storage is column-major,
// so a fixed-x slice is contiguous.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mdr {

struct GridSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double dx = 1.0;
  double dy = 1.0;
  std::size_t cols = 0;
  std::size_t rows = 0;

  static GridSpec unit(std::size_t cols, std::size_t rows);
  static GridSpec anchored(double dx, double dy, std::size_t cols,
                           std::size_t rows);

  // Throws DomainError unless dx, dy are positive and finite and the origin is
  // finite.
  void validate() const;

  std::size_t cells() const { return cols * rows; }
  double cell_area() const { return dx * dy; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * rows + j; }

  // Grids are compatible iff their cell sizes agree exactly.
  bool compatible(const GridSpec& other) const {
    return dx == other.dx && dy == other.dy;
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

class GridSet2D;

// Nonnegative step function, zero outside the bounding box of its spec.
class GridFunction2D {
 public:
  GridFunction2D() = default;
  // `column_major` holds spec.cells() values; throws DomainError on negative,
  // non-finite, or wrongly sized input.
  GridFunction2D(GridSpec spec, std::vector<double> column_major);

  static GridFunction2D zeros(GridSpec spec);
  // `row_major[j * cols + i]` is the value of cell (i, j).
  static GridFunction2D from_row_major(GridSpec spec,
                                       std::span<const double> row_major);
  static GridFunction2D indicator(const GridSet2D& set, double value = 1.0);

  const GridSpec& spec() const { return spec_; }
  std::size_t cols() const { return spec_.cols; }
  std::size_t rows() const { return spec_.rows; }

  double operator()(std::size_t i, std::size_t j) const {
    return values_[spec_.index(i, j)];
  }
  std::span<const double> values() const { return values_; }
  std::span<const double> column(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * spec_.rows, spec_.rows);
  }
  std::vector<double> row_major() const;

  double max() const;
  bool is_zero() const;

  friend bool operator==(const GridFunction2D&, const GridFunction2D&) = default;

 private:
  GridSpec spec_{};
  std::vector<double> values_;
};

class GridSet2D {
 public:
  GridSet2D() = default;
  GridSet2D(GridSpec spec, std::vector<std::uint8_t> column_major_mask);

  static GridSet2D empty(GridSpec spec);
  static GridSet2D full(GridSpec spec);
  // Cells [i0, i1) x [j0, j1) of `spec` switched on.
  static GridSet2D box(GridSpec spec, std::size_t i0, std::size_t i1,
                       std::size_t j0, std::size_t j1);

  const GridSpec& spec() const { return spec_; }
  bool contains(std::size_t i, std::size_t j) const {
    return mask_[spec_.index(i, j)] != 0;
  }
  std::span<const std::uint8_t> mask() const { return mask_; }
  std::size_t count() const;
  std::size_t column_count(std::size_t i) const;

  GridSet2D with(std::size_t i, std::size_t j, bool on) const;

  friend bool operator==(const GridSet2D&, const GridSet2D&) = default;

 private:
  GridSpec spec_{};
  std::vector<std::uint8_t> mask_;
};

// Boolean algebra on aligned grids. Operands must have compatible cells and
// origins that differ by whole cells; the result lives on the smallest grid
// covering both. Throws DomainError otherwise.
GridSet2D set_union(const GridSet2D& a, const GridSet2D& b);
GridSet2D set_intersection(const GridSet2D& a, const GridSet2D& b);
GridSet2D set_difference(const GridSet2D& a, const GridSet2D& b);
bool is_subset(const GridSet2D& a, const GridSet2D& b);
bool disjoint(const GridSet2D& a, const GridSet2D& b);

// Decreasing set of R^2_+ anchored at the origin: column i covers
// [i*dx, (i+1)*dx) x [0, heights[i]*dy). Heights are nonincreasing with
// trailing zeros trimmed.
class StaircaseSet {
 public:
  StaircaseSet() = default;
  // Throws DomainError unless heights are nonincreasing and cells positive.
  // Trailing zeros are trimmed.
  StaircaseSet(double dx, double dy, std::vector<std::size_t> heights);

  static StaircaseSet rectangle(double dx, double dy, std::size_t cols,
                                std::size_t rows);

  double dx() const { return dx_; }
  double dy() const { return dy_; }
  std::span<const std::size_t> heights() const { return heights_; }
  std::size_t columns() const { return heights_.size(); }
  std::size_t height(std::size_t i) const {
    return i < heights_.size() ? heights_[i] : 0;
  }
  bool contains(std::size_t i, std::size_t j) const { return j < height(i); }
  bool empty() const { return heights_.empty(); }
  std::size_t cell_count() const;
  double measure() const;

  // Same heights on cells of twice the size: the image of the set under x -> 2x.
  StaircaseSet dilated() const;
  GridSet2D to_grid_set(std::size_t cols, std::size_t rows) const;

  friend bool operator==(const StaircaseSet&, const StaircaseSet&) = default;

 private:
  double dx_ = 1.0;
  double dy_ = 1.0;
  std::vector<std::size_t> heights_;
};

bool is_subset(const StaircaseSet& a, const StaircaseSet& b);

// Nonincreasing step function on R_+; value k covers [k*dt, (k+1)*dt).
class StepFunction1D {
 public:
  StepFunction1D() = default;
  StepFunction1D(double dt, std::vector<double> values);

  double dt() const { return dt_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double length() const { return dt_ * static_cast<double>(values_.size()); }
  // Right-continuous evaluation; zero past the last step.
  double operator()(double t) const;
  // Integral over [0, t).
  double integral_to(double t) const;

  friend bool operator==(const StepFunction1D&, const StepFunction1D&) = default;

 private:
  double dt_ = 1.0;
  std::vector<double> values_;
};

// Function on R^2_+ anchored at the origin, nonincreasing along both indices.
class Decreasing2DGridFunction {
 public:
  Decreasing2DGridFunction() = default;
  Decreasing2DGridFunction(double dx, double dy, std::size_t cols,
                           std::size_t rows, std::vector<double> column_major);

  double dx() const { return dx_; }
  double dy() const { return dy_; }
  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_; }
  std::span<const double> values() const { return values_; }
  // Zero outside the stored block.
  double at(std::size_t i, std::size_t j) const {
    return (i < cols_ && j < rows_) ? values_[i * rows_ + j] : 0.0;
  }
  std::span<const double> column(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * rows_, rows_);
  }

  // {h > t} as a staircase.
  StaircaseSet superlevel(double t) const;
  GridFunction2D as_grid_function() const;

  friend bool operator==(const Decreasing2DGridFunction&,
                         const Decreasing2DGridFunction&) = default;

 private:
  double dx_ = 1.0;
  double dy_ = 1.0;
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::vector<double> values_;
};

// f = sum_j a_j chi_{E_j} with a_1 > ... > a_n > 0 and disjoint E_j, together
// with the cumulative form f = sum_j b_j chi_{F_j}, b_j = a_j - a_{j+1},
// F_j = E_1 u ... u E_j.
struct SimpleDecomposition {
  struct Level {
    double value;
    GridSet2D cells;
  };
  struct Cumulative {
    double step;
    GridSet2D cells;
  };
  std::vector<Level> levels;
  std::vector<Cumulative> cumulative;

  GridFunction2D reconstruct() const;
};

double measure(const GridSet2D& set);
GridSet2D superlevel_set(const GridFunction2D& f, double t);
double distribution(const GridFunction2D& f, double t);
std::vector<double> cross_section_profile(const GridSet2D& set);
// Throws DomainError when f is identically zero.
SimpleDecomposition simple_decomposition(const GridFunction2D& f);

// Pointwise helpers used throughout the test and verification code.
GridFunction2D add(const GridFunction2D& f, const GridFunction2D& g);
GridFunction2D scale(const GridFunction2D& f, double c);
GridFunction2D power(const GridFunction2D& f, double p);
GridFunction2D pointwise_min(const GridFunction2D& f, double cap);
GridFunction2D pointwise_min(const GridFunction2D& f, const GridFunction2D& g);
GridFunction2D transpose(const GridFunction2D& f);
bool pointwise_leq(std::span<const double> a, std::span<const double> b);

}  // namespace mdr
