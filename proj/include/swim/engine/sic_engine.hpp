#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swim/engine/engine.hpp"
#include "swim/influence/influence_log.hpp"
#include "swim/oracle/sieve_checkpoint.hpp"

namespace swim {

struct SicOptions {
  bool prune = true;
};

/// Position, start and value of one live checkpoint. Position is relative to
/// the current window (1 = window start, <= 0 = expired).
struct CheckpointState {
  std::int64_t x;
  Position start;
  double value;
};

/// Sparse Influential Checkpoints.
///
/// Keeps a value-pruned subset of the dense checkpoints plus at most one
/// expired checkpoint x_0 that still tracks the longer suffix. Queries are
/// answered by the earliest non-expired checkpoint x_1.
class SicEngine final : public Engine {
 public:
  SicEngine(const PropagationIndex& index, const WindowConfig& cfg, const InfluenceFunction& f,
            SicOptions opts = {});

  void slide(std::span<const Position> batch) override;
  SeedResult query() const override;
  std::size_t checkpoint_count() const override { return list_.size(); }
  std::string_view name() const override { return "sic"; }

  /// Applies prune_indices to the live list. Returns the start positions deleted.
  /// Runs automatically inside slide() when pruning is enabled.
  std::vector<Position> prune();

  const std::vector<SieveCheckpoint>& checkpoints() const { return list_; }
  std::vector<CheckpointState> snapshot() const;
  /// Start positions deleted by pruning during the last slide.
  const std::vector<Position>& last_pruned() const { return last_pruned_; }
  Position window_lo() const;
  const WindowConfig& config() const { return cfg_; }

 private:
  const PropagationIndex& index_;
  WindowConfig cfg_;
  InfluenceFunction f_;
  SicOptions opts_;
  InfluenceLog log_;
  std::vector<SieveCheckpoint> list_;
  detail::BatchCursor cursor_;
  Position first_ = kNoPosition;
  std::vector<Position> last_pruned_;
  std::vector<Position> prev_;
};

/// Indices (ascending) that SIC pruning removes from a checkpoint list with the
/// given values. For each anchor i in order, the maximal run of successors j
/// with both v[j] and v[j+1] >= (1-beta)v[i] is deleted at once; passes repeat
/// until stable. The last checkpoint is never deleted.
std::vector<std::size_t> prune_indices(std::span<const double> values, double beta);

/// A consecutive checkpoint pair or triple that satisfies none of the three
/// neighbor conditions that SIC pruning maintains.
struct NeighborViolation {
  std::size_t index;  // position of x_i in the checkpoint list
  std::string reason;
};

/// Checks, for every i: (1) if v[i+1] >= (1-beta)v[i] then v[i+2] < (1-beta)v[i];
/// otherwise either (3) x_{i+1} directly follows x_i (start gap == slide), or
/// (2) eps(1-beta)/2 * OPT(suffix from x_i) <= v[i+1]. Condition (2) is only
/// verified when `suffix_opt` is given; without it the gap case is accepted.
std::vector<NeighborViolation> check_neighbor_conditions(
    std::span<const CheckpointState> cps, std::size_t slide, double beta,
    const std::function<double(Position start)>& suffix_opt = {}, double epsilon = 0.0);

}  // namespace swim
