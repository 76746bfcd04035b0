#include "mdr/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "mdr/error.hpp"

namespace mdr::kernels {

namespace {

struct Table {
  double (*sum)(std::span<const double>);
  double (*dot)(std::span<const double>, std::span<const double>);
  std::size_t (*count_greater)(std::span<const double>, double);
  double (*max_value)(std::span<const double>);
  bool (*all_less_equal)(std::span<const double>, std::span<const double>);
};

constexpr Table kScalar{&scalar::sum, &scalar::dot, &scalar::count_greater,
                        &scalar::max_value, &scalar::all_less_equal};

#ifdef MDR_HAVE_AVX2_KERNELS
constexpr Table kAvx2{&avx2::sum, &avx2::dot, &avx2::count_greater,
                      &avx2::max_value, &avx2::all_less_equal};
#endif

bool cpu_has_avx2() {
#if defined(MDR_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("MDR_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2" && cpu_has_avx2()) return Backend::Avx2;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}

const Table& table() {
#ifdef MDR_HAVE_AVX2_KERNELS
  if (current().load(std::memory_order_relaxed) == Backend::Avx2) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  return b == Backend::Scalar || (b == Backend::Avx2 && cpu_has_avx2());
}

Backend active_backend() { return current().load(); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw_domain("kernel backend '" + std::string(backend_name(b)) +
                 "' is not available on this CPU");
  }
  current().store(b);
}

void reset_backend() { current().store(initial_backend()); }

double sum(std::span<const double> x) { return table().sum(x); }

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw_domain("dot: size mismatch");
  return table().dot(x, y);
}

std::size_t count_greater(std::span<const double> x, double threshold) {
  return table().count_greater(x, threshold);
}

double max_value(std::span<const double> x) { return table().max_value(x); }

bool all_less_equal(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw_domain("all_less_equal: size mismatch");
  return table().all_less_equal(x, y);
}

}  // namespace mdr::kernels
