#pragma once

// Data-parallel inner loops of the optimizer and the benchmark objectives.
//
// Each kernel has a portable scalar reference and, where the target allows,
// an AVX2 variant. The variant is picked once at startup from CPU features;
// setting GCDVSS_SIMD=scalar in the environment forces the reference path.
//
// Reductions in every variant use four interleaved partial sums combined as
// (s0 + s1) + (s2 + s3), followed by the tail in index order. The scalar
// reference follows the same order, so all variants agree bit for bit.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace gcdvss::kernels {

enum class Isa { scalar, avx2 };

// Relative size, in units of epsilon, below which a negative sum of two
// terms counts as cancellation residue.
inline constexpr double kCancellationUlps = 8.0;

// a + b, except that a negative result within rounding of zero becomes +0.
// Moving a coordinate's whole mass (p_l - s with p_l == s in exact
// arithmetic) then lands on the boundary instead of a hair outside it.
inline double settle(double a, double b) noexcept {
  const double r = a + b;
  if (r < 0.0 &&
      -r <= kCancellationUlps * std::numeric_limits<double>::epsilon() *
                std::fmax(std::fabs(a), std::fabs(b)))
    return 0.0;
  return r;
}

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  double (*sum)(const double* x, std::size_t n);
  // Smallest element; +inf for n == 0.
  double (*min)(const double* x, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  // Number of elements strictly greater than threshold.
  std::size_t (*count_above)(const double* x, std::size_t n, double threshold);
  // Sum of the elements at or below threshold.
  double (*sum_at_or_below)(const double* x, std::size_t n, double threshold);
  // out[l] = settle(x[l], delta) where x[l] > threshold and l != skip, else x[l].
  void (*shift_above)(const double* x, double* out, std::size_t n, std::size_t skip,
                      double threshold, double delta);
  // out[l] = x[l] + share where x[l] > threshold, else 0.
  void (*redistribute)(const double* x, double* out, std::size_t n, double threshold,
                       double share);
  // sum over l of (l + 1) * x[l]^4
  double (*weighted_fourth_power_sum)(const double* x, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa) noexcept;

// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

// The table selected for this process.
const KernelTable& active() noexcept;

inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

inline double min(std::span<const double> x) { return active().min(x.data(), x.size()); }

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  return active().squared_distance(a.data(), b.data(), a.size());
}

inline std::size_t count_above(std::span<const double> x, double threshold) {
  return active().count_above(x.data(), x.size(), threshold);
}

inline double sum_at_or_below(std::span<const double> x, double threshold) {
  return active().sum_at_or_below(x.data(), x.size(), threshold);
}

inline double weighted_fourth_power_sum(std::span<const double> x) {
  return active().weighted_fourth_power_sum(x.data(), x.size());
}

}  // namespace gcdvss::kernels
