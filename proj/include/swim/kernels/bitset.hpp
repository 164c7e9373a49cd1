#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace swim {

/// Growable bitset over dense ids. Reading past the end yields 0.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  bool test(std::size_t i) const {
    const std::size_t w = i >> 6;
    return w < words_.size() && ((words_[w] >> (i & 63)) & 1u) != 0;
  }

  /// Returns true if the bit was clear before.
  bool set(std::size_t i) {
    const std::size_t w = i >> 6;
    if (w >= words_.size()) words_.resize(std::max(w + 1, 2 * words_.size()), 0);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    const bool fresh = (words_[w] & mask) == 0;
    words_[w] |= mask;
    return fresh;
  }

  void reserve_bits(std::size_t bits) {
    const std::size_t n = (bits + 63) / 64;
    if (n > words_.size()) words_.resize(n, 0);
  }

  void clear() { words_.assign(words_.size(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  std::size_t word_count() const { return words_.size(); }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace swim
