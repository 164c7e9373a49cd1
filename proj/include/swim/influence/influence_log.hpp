#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "swim/common.hpp"
#include "swim/influence/influence_function.hpp"

namespace swim {

/// Shared evidence log behind every checkpoint's influence views.
///
/// For each pair (owner u, member v) the log keeps the latest position at
/// which v acted under u. A checkpoint starting at s has v in its view of u
/// iff that position is >= s, so one log serves all checkpoints: per owner the
/// members are kept in order of latest evidence and the view of a suffix is a
/// tail of that list. Superseded slots are overwritten with kernels::kTombstone.
class InfluenceLog {
 public:
  /// Records `member` acting at `pos` under every owner of `chain`. prev[i]
  /// receives the previous evidence position for (chain[i], member), or
  /// kNoPosition. `pos` must not decrease between calls.
  void record(Position pos, UserId member, std::span<const UserId> chain, std::vector<Position>& prev);

  /// Members of the owner's view over the suffix starting at `start`. May
  /// contain tombstones; live ids are distinct.
  std::span<const UserId> members_since(UserId owner, Position start) const;

  /// Evidence older than `horizon` is no longer needed by any checkpoint and
  /// may be dropped during compaction.
  void set_horizon(Position horizon) { horizon_ = horizon; }
  Position horizon() const { return horizon_; }

  std::size_t pair_count() const { return slot_.size(); }

 private:
  struct OwnerLog {
    std::vector<UserId> members;
    std::vector<Position> positions;
    std::size_t dead = 0;  // tombstones
  };

  void compact(UserId owner, OwnerLog& log);

  std::vector<OwnerLog> owners_;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> slot_;
  Position horizon_ = 1;
};

struct OwnerGain {
  UserId owner;
  bool gained;
};

/// Per-checkpoint view values f(I[start](u)) for every owner seen in the suffix.
class SuffixViews {
 public:
  explicit SuffixViews(Position start) : start_(start) {}

  Position start() const { return start_; }

  double value(UserId owner) const {
    auto it = values_.find(owner);
    return it == values_.end() ? 0.0 : it->second;
  }

  std::size_t owners() const { return values_.size(); }

 private:
  friend void apply_action(SuffixViews&, const InfluenceFunction&, UserId, std::span<const UserId>,
                           std::span<const Position>, std::vector<OwnerGain>&);

  Position start_;
  absl::flat_hash_map<UserId, double> values_;
};

/// Inserts `influenced` into the checkpoint's view of every chain owner.
/// `prev` comes from InfluenceLog::record for the same action; an owner gains
/// the member iff its previous evidence predates the checkpoint start.
void apply_action(SuffixViews& views, const InfluenceFunction& f, UserId influenced,
                  std::span<const UserId> chain, std::span<const Position> prev,
                  std::vector<OwnerGain>& out);

}  // namespace swim
