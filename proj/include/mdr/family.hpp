#pragma once

// Seeded generators for grid objects, finite families of decreasing sets,
// and the explicit set pairs that discriminate norm-generating weights.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mdr/grid.hpp"

namespace mdr {

using Rng = std::mt19937_64;

// Independent stream `stream` of the generator seeded by `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

struct RandomGridOptions {
  std::size_t max_cols = 32;
  std::size_t max_rows = 32;
  bool integer_values = true;
  int max_integer = 16;      // integer values are drawn from [0, max_integer]
  double max_real = 10.0;    // real values from [0, max_real)
  double zero_fraction = 0.3;
  double dx = 1.0;
  double dy = 1.0;
};

// Dimensions uniform in [1, max_cols] x [1, max_rows].
GridSpec random_spec(Rng& rng, const RandomGridOptions& opts);
GridFunction2D random_grid_function(Rng& rng, const RandomGridOptions& opts);
GridFunction2D random_grid_function(Rng& rng, const GridSpec& spec,
                                    const RandomGridOptions& opts);
GridSet2D random_set(Rng& rng, const GridSpec& spec, double density);

std::vector<double> random_nonincreasing(Rng& rng, std::size_t n, double lo, double hi);

// Every staircase with at most `max_cols` columns and heights in
// [1, max_height]: C(max_cols + max_height, max_cols) - 1 sets.
std::vector<StaircaseSet> enumerate_staircases(std::size_t max_cols,
                                               std::size_t max_height, double dx,
                                               double dy);
StaircaseSet random_staircase(Rng& rng, std::size_t max_cols, std::size_t max_height,
                              double dx, double dy);

// f*_2 of a random integer grid function on a cols x rows block.
Decreasing2DGridFunction random_decreasing_function(Rng& rng, std::size_t cols,
                                                    std::size_t rows, int max_integer,
                                                    double dx, double dy);

using SetPair = std::pair<GridSet2D, GridSet2D>;

// The three epsilon-perturbed pairs used to show that a norm forces
// w(s,t) = v(t) with v nonincreasing, with epsilon equal to one cell:
//   1. A = (0,e)x(0,t) u (e,s)x(0,t-e),  B = (0,e)x(0,t-e) u (e,s)x(0,t)
//   2. A = (0,s)x(0,t),
//      B = (0,e)x(e,t+e) u (e,s-e)x(0,t) u (s-e,s)x(0,t-e)
//   3. A = (0,e)x(0,a),  B = (0,e)x(e,b)
// s, t, a, b are given in cells; requires s >= 3, t >= 2, 1 <= a < b.
std::vector<SetPair> submodularity_constructions(std::size_t s, std::size_t t,
                                                 std::size_t a, std::size_t b,
                                                 double dx, double dy);

std::vector<SetPair> random_set_pairs(Rng& rng, std::size_t count, std::size_t max_cols,
                                      std::size_t max_rows, double dx, double dy);

}  // namespace mdr
