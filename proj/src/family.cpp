#include "mdr/family.hpp"

#include <algorithm>
#include <functional>

#include "mdr/error.hpp"
#include "mdr/rearrange.hpp"

namespace mdr {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x6d6472u};
  return Rng(seq);
}

GridSpec random_spec(Rng& rng, const RandomGridOptions& opts) {
  std::uniform_int_distribution<std::size_t> cols(1, opts.max_cols);
  std::uniform_int_distribution<std::size_t> rows(1, opts.max_rows);
  const std::size_t c = cols(rng);
  const std::size_t r = rows(rng);
  return GridSpec::anchored(opts.dx, opts.dy, c, r);
}

GridFunction2D random_grid_function(Rng& rng, const GridSpec& spec,
                                    const RandomGridOptions& opts) {
  std::bernoulli_distribution zero(opts.zero_fraction);
  std::uniform_int_distribution<int> ints(1, std::max(1, opts.max_integer));
  std::uniform_real_distribution<double> reals(0.0, opts.max_real);
  std::vector<double> v(spec.cells());
  for (auto& x : v) {
    if (zero(rng)) {
      x = 0.0;
    } else {
      x = opts.integer_values ? static_cast<double>(ints(rng)) : reals(rng);
    }
  }
  return GridFunction2D(spec, std::move(v));
}

GridFunction2D random_grid_function(Rng& rng, const RandomGridOptions& opts) {
  const GridSpec spec = random_spec(rng, opts);
  return random_grid_function(rng, spec, opts);
}

GridSet2D random_set(Rng& rng, const GridSpec& spec, double density) {
  std::bernoulli_distribution on(density);
  std::vector<std::uint8_t> m(spec.cells());
  for (auto& x : m) x = on(rng) ? 1 : 0;
  return GridSet2D(spec, std::move(m));
}

std::vector<double> random_nonincreasing(Rng& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<StaircaseSet> enumerate_staircases(std::size_t max_cols,
                                               std::size_t max_height, double dx,
                                               double dy) {
  std::vector<StaircaseSet> out;
  std::vector<std::size_t> heights;
  // Depth-first over nonincreasing sequences with entries in [1, max_height].
  std::function<void(std::size_t)> extend = [&](std::size_t cap) {
    if (!heights.empty()) out.emplace_back(dx, dy, heights);
    if (heights.size() == max_cols) return;
    for (std::size_t h = 1; h <= cap; ++h) {
      heights.push_back(h);
      extend(h);
      heights.pop_back();
    }
  };
  extend(max_height);
  return out;
}

StaircaseSet random_staircase(Rng& rng, std::size_t max_cols, std::size_t max_height,
                              double dx, double dy) {
  std::uniform_int_distribution<std::size_t> cols(1, max_cols);
  std::uniform_int_distribution<std::size_t> hs(1, max_height);
  std::vector<std::size_t> h(cols(rng));
  for (auto& x : h) x = hs(rng);
  std::sort(h.begin(), h.end(), std::greater<>());
  return StaircaseSet(dx, dy, std::move(h));
}

Decreasing2DGridFunction random_decreasing_function(Rng& rng, std::size_t cols,
                                                    std::size_t rows, int max_integer,
                                                    double dx, double dy) {
  RandomGridOptions opts;
  opts.max_integer = max_integer;
  opts.zero_fraction = 0.2;
  return rearrange_iterative(
      random_grid_function(rng, GridSpec::anchored(dx, dy, cols, rows), opts));
}

namespace {

GridSet2D from_columns(const GridSpec& spec,
                       const std::vector<std::pair<std::size_t, std::size_t>>& runs) {
  // runs[i] = [first row, end row) switched on in column i
  std::vector<std::uint8_t> m(spec.cells(), 0);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = runs[i].first; j < runs[i].second; ++j) m[spec.index(i, j)] = 1;
  }
  return GridSet2D(spec, std::move(m));
}

}  // namespace

std::vector<SetPair> submodularity_constructions(std::size_t s, std::size_t t,
                                                 std::size_t a, std::size_t b,
                                                 double dx, double dy) {
  if (s < 3 || t < 2 || a < 1 || a >= b) {
    throw_domain("construction needs s >= 3, t >= 2 and 1 <= a < b (in cells)");
  }
  using Run = std::pair<std::size_t, std::size_t>;
  std::vector<SetPair> out;
  {
    const GridSpec spec = GridSpec::anchored(dx, dy, s, t);
    std::vector<Run> ra(s, Run{0, t - 1});
    std::vector<Run> rb(s, Run{0, t});
    ra[0] = {0, t};
    rb[0] = {0, t - 1};
    out.emplace_back(from_columns(spec, ra), from_columns(spec, rb));
  }
  {
    const GridSpec spec = GridSpec::anchored(dx, dy, s, t + 1);
    std::vector<Run> ra(s, Run{0, t});
    std::vector<Run> rb(s, Run{0, t});
    rb[0] = {1, t + 1};
    rb[s - 1] = {0, t - 1};
    out.emplace_back(from_columns(spec, ra), from_columns(spec, rb));
  }
  {
    const GridSpec spec = GridSpec::anchored(dx, dy, 1, b);
    out.emplace_back(from_columns(spec, {Run{0, a}}), from_columns(spec, {Run{1, b}}));
  }
  return out;
}

std::vector<SetPair> random_set_pairs(Rng& rng, std::size_t count, std::size_t max_cols,
                                      std::size_t max_rows, double dx, double dy) {
  std::uniform_int_distribution<std::size_t> cols(1, max_cols);
  std::uniform_int_distribution<std::size_t> rows(1, max_rows);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::vector<SetPair> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t c = cols(rng);
    const std::size_t r = rows(rng);
    const GridSpec spec = GridSpec::anchored(dx, dy, c, r);
    GridSet2D a = random_set(rng, spec, density(rng));
    GridSet2D b = random_set(rng, spec, density(rng));
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace mdr
