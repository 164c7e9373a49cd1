#include <bit>

#include "swim/kernels/kernels.hpp"

namespace swim::kernels {
namespace {

inline bool covered_bit(UserId id, const std::uint64_t* covered, std::size_t words) {
  const std::size_t w = id >> 6;
  return w < words && ((covered[w] >> (id & 63)) & 1u) != 0;
}

std::size_t count_uncovered_scalar(const UserId* ids, std::size_t n, const std::uint64_t* covered,
                                   std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ids[i] != kTombstone && !covered_bit(ids[i], covered, words)) ++c;
  }
  return c;
}

double sum_uncovered_scalar(const UserId* ids, std::size_t n, const std::uint64_t* covered,
                            std::size_t words, const double* weights) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ids[i] != kTombstone && !covered_bit(ids[i], covered, words)) s += weights[ids[i]];
  }
  return s;
}

std::size_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t popcount_andnot_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return c;
}

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

}  // namespace

double weighted_popcount_scalar(const std::uint64_t* a, std::size_t n, const double* weights) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint64_t w = a[i]; w != 0; w &= w - 1) {
      s += weights[i * 64 + static_cast<std::size_t>(std::countr_zero(w))];
    }
  }
  return s;
}

const KernelTable& scalar() {
  static const KernelTable table{
      "scalar",          count_uncovered_scalar, sum_uncovered_scalar,    popcount_scalar,
      popcount_andnot_scalar, or_into_scalar,    weighted_popcount_scalar,
  };
  return table;
}

}  // namespace swim::kernels
