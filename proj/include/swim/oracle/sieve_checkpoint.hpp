#pragma once

#include <vector>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/inlined_vector.h"
#include "swim/common.hpp"
#include "swim/influence/influence_function.hpp"
#include "swim/influence/influence_log.hpp"
#include "swim/kernels/bitset.hpp"

namespace swim {

/// Checkpoint oracle over the append-only action suffix starting at `start`.
///
/// Runs SieveStreaming over the set stream produced by mapping each action to
/// the updated influence sets of its chain owners. One sieve instance is kept
/// per threshold (1+beta)^j with m <= (1+beta)^j <= 2km, where m is the largest
/// single-owner view value offered so far. An instance admits an owner while it
/// holds fewer than k users and the owner's marginal gain is at least
/// (T/2 - value) / (k - |CX|). Selected users are never evicted; when their
/// views grow the instance coverage is refreshed instead.
///
/// The reported value never decreases. If raising m would discard the instance
/// holding the best value, that instance is kept aside (refreshed, closed to
/// admissions) until some lattice instance overtakes it.
class SieveCheckpoint {
 public:
  struct InstanceInfo {
    int exponent;
    double threshold;
    std::span<const UserId> candidates;  // admission order
    double value;
  };

  SieveCheckpoint(Position start, std::size_t k, double beta, const InfluenceFunction& f);

  SieveCheckpoint(SieveCheckpoint&&) noexcept = default;
  SieveCheckpoint& operator=(SieveCheckpoint&&) noexcept = default;

  Position start() const { return views_.start(); }

  /// Feeds one action: `member` acted with ancestor chain `chain`; `prev` is the
  /// output of InfluenceLog::record for this action. Updates the views, then
  /// offers every chain owner's view.
  void process(UserId member, std::span<const UserId> chain, std::span<const Position> prev,
               const InfluenceLog& log);

  /// Lattice maintenance for a newly observed single-owner value.
  void raise_m(double single_value);

  /// Offers the owner's current view to every instance. Returns the best value.
  double offer(UserId owner, const InfluenceLog& log);

  /// Best instance's seeds (ascending ids) and value; (∅, 0) before any action.
  SeedResult solution() const;

  double value() const { return best_value_; }
  double max_single() const { return m_; }
  std::size_t offers() const { return offers_; }

  /// Exponents currently tiling [m, 2km], ascending. Empty while m = 0.
  std::vector<int> exponents() const;
  std::vector<InstanceInfo> instances() const;
  /// Exponent of the instance that solution() reports; nullopt when it is the
  /// retained off-lattice instance or nothing has been admitted.
  std::optional<int> best_exponent() const;

  const SuffixViews& views() const { return views_; }

 private:
  struct Instance {
    int exponent;
    double half_threshold;  // T / 2
    std::vector<UserId> cx;
    DynamicBitset covered;
    double value = 0.0;
  };

  static constexpr int kRetained = std::numeric_limits<int>::min();

  Instance* instance(int exponent);
  const Instance* best_instance() const;
  void admit(Instance& inst, UserId owner, std::span<const UserId> members);
  void note_value(const Instance& inst);
  void forget_selection(const Instance& inst);

  std::size_t k_;
  double base_;  // 1 + beta
  InfluenceFunction f_;
  SuffixViews views_;
  double m_ = 0.0;
  // m may grow up to lo_limit_ and 2km up to just below hi_limit_ before the
  // lattice bounds change.
  double lo_limit_ = -1.0;
  double hi_limit_ = -1.0;
  std::vector<Instance> lattice_;  // ascending exponents, contiguous
  std::vector<std::uint32_t> open_;  // lattice_ indices with fewer than k users
  std::optional<Instance> retained_;
  absl::flat_hash_map<UserId, absl::InlinedVector<int, 4>> selected_;
  double best_value_ = 0.0;
  int best_exponent_ = 0;
  bool has_best_ = false;
  std::size_t offers_ = 0;
  std::vector<OwnerGain> gains_;
};

/// Smallest j with base^j >= x, and largest j with base^j <= x.
int ceil_log(double x, double base);
int floor_log(double x, double base);

}  // namespace swim
