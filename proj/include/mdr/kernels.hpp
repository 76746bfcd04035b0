#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference in
// mdr::kernels::scalar; wider variants are compiled separately and picked at
// runtime from the CPU's feature bits. The dispatched entry points in
// mdr::kernels forward to the active backend.
//
// Counting and comparison kernels are bit-identical across backends. Sums and
// dot products may differ in the last bits because the lanes reassociate the
// additions; they are exact whenever every partial sum is representable
// (e.g. integer data below 2^53).

#include <cstddef>
#include <span>
#include <string_view>

namespace mdr::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
// Throws DomainError if the backend is not available on this machine.
void set_backend(Backend b);
// Picks the widest available backend, honouring MDR_KERNELS=scalar|avx2.
void reset_backend();

double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
std::size_t count_greater(std::span<const double> x, double threshold);
double max_value(std::span<const double> x);
// x[k] <= y[k] for every k (sizes must match).
bool all_less_equal(std::span<const double> x, std::span<const double> y);

namespace scalar {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
std::size_t count_greater(std::span<const double> x, double threshold);
double max_value(std::span<const double> x);
bool all_less_equal(std::span<const double> x, std::span<const double> y);
}  // namespace scalar

namespace avx2 {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
std::size_t count_greater(std::span<const double> x, double threshold);
double max_value(std::span<const double> x);
bool all_less_equal(std::span<const double> x, std::span<const double> y);
}  // namespace avx2

// RAII override of the active backend, for equivalence tests.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend b) : previous_(active_backend()) {
    set_backend(b);
  }
  ~ScopedBackend() { set_backend(previous_); }
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend previous_;
};

}  // namespace mdr::kernels
