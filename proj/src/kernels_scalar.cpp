#include "gcdvss/kernels.hpp"

#include <limits>

namespace gcdvss::kernels {
namespace {

constexpr std::size_t kLanes = 4;

double sum_scalar(const double* x, std::size_t n) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    for (std::size_t k = 0; k < kLanes; ++k) acc[k] += x[i + k];
  double s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (; i < n; ++i) s += x[i];
  return s;
}

double min_scalar(const double* x, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] < m) m = x[i];
  return m;
}

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    for (std::size_t k = 0; k < kLanes; ++k) {
      const double d = a[i + k] - b[i + k];
      acc[k] += d * d;
    }
  double s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

std::size_t count_above_scalar(const double* x, std::size_t n, double threshold) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += x[i] > threshold ? 1 : 0;
  return c;
}

double sum_at_or_below_scalar(const double* x, std::size_t n, double threshold) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    for (std::size_t k = 0; k < kLanes; ++k)
      acc[k] += x[i + k] > threshold ? 0.0 : x[i + k];
  double s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (; i < n; ++i) s += x[i] > threshold ? 0.0 : x[i];
  return s;
}

void shift_above_scalar(const double* x, double* out, std::size_t n, std::size_t skip,
                        double threshold, double delta) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = (i != skip && x[i] > threshold) ? settle(x[i], delta) : x[i];
}

void redistribute_scalar(const double* x, double* out, std::size_t n, double threshold,
                         double share) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] > threshold ? x[i] + share : 0.0;
}

double weighted_fourth_power_sum_scalar(const double* x, std::size_t n) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  auto term = [x](std::size_t j) {
    const double sq = x[j] * x[j];
    return static_cast<double>(j + 1) * (sq * sq);
  };
  for (; i + kLanes <= n; i += kLanes)
    for (std::size_t k = 0; k < kLanes; ++k) acc[k] += term(i + k);
  double s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (; i < n; ++i) s += term(i);
  return s;
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{
      Isa::scalar,
      sum_scalar,
      min_scalar,
      squared_distance_scalar,
      count_above_scalar,
      sum_at_or_below_scalar,
      shift_above_scalar,
      redistribute_scalar,
      weighted_fourth_power_sum_scalar,
  };
  return table;
}

}  // namespace gcdvss::kernels
