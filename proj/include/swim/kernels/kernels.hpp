#pragma once

// Data-parallel inner loops of the coverage computations.
//
// Every kernel has a portable scalar reference in kernels_scalar.cpp; x86-64
// builds also compile an AVX2 variant that is picked at runtime when the CPU
// supports it. Set SWIM_KERNELS=scalar in the environment to force the
// reference path.

#include <cstddef>
#include <cstdint>
#include <span>

#include "swim/common.hpp"

namespace swim::kernels {

/// Member-list slot that no longer holds a member. Kernels skip it.
inline constexpr UserId kTombstone = 0xFFFFFFFFu;

struct KernelTable {
  const char* name;

  /// Number of non-tombstone ids whose bit is clear in `covered`. Ids past the
  /// end of the bitset count as uncovered.
  std::size_t (*count_uncovered)(const UserId* ids, std::size_t n, const std::uint64_t* covered,
                                 std::size_t covered_words);

  /// Weighted variant: sum of weights[id] over the same ids. `weights` must be
  /// indexable by every non-tombstone id.
  double (*sum_uncovered)(const UserId* ids, std::size_t n, const std::uint64_t* covered,
                          std::size_t covered_words, const double* weights);

  std::size_t (*popcount)(const std::uint64_t* a, std::size_t n);

  /// |a \ b| over n words.
  std::size_t (*popcount_andnot)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);

  /// dst |= src over n words.
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

  /// Sum of weights[i] over set bits i of a.
  double (*weighted_popcount)(const std::uint64_t* a, std::size_t n, const double* weights);
};

const KernelTable& scalar();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2();

/// The table used by the library: AVX2 when available unless overridden.
const KernelTable& active();

// Span conveniences over active().

inline std::size_t count_uncovered(std::span<const UserId> ids, std::span<const std::uint64_t> covered) {
  return active().count_uncovered(ids.data(), ids.size(), covered.data(), covered.size());
}

inline double sum_uncovered(std::span<const UserId> ids, std::span<const std::uint64_t> covered,
                            std::span<const double> weights) {
  return active().sum_uncovered(ids.data(), ids.size(), covered.data(), covered.size(),
                                weights.data());
}

}  // namespace swim::kernels
