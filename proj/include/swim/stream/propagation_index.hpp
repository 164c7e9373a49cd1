#pragma once

#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "swim/common.hpp"

namespace swim {

/// Ancestor-user chains for every ingested action.
///
/// The chain of an action lists the acting user followed by the users of all
/// transitive parents, first occurrence kept. Every user on the chain gains the
/// acting user in their influence set, including the actor itself.
class PropagationIndex {
 public:
  struct Ingested {
    Position pos = kNoPosition;
    std::span<const UserId> chain;
    bool orphaned = false;
  };

  /// Throws StreamError if `seq` does not exceed the last ingested seq or if
  /// `parent >= seq`. A parent that was never seen (or was evicted) degrades
  /// the action to a root and counts it as orphaned.
  Ingested ingest(Seq seq, UserId user, std::optional<Seq> parent);

  std::span<const UserId> chain(Position p) const { return at(p).chain; }
  UserId user(Position p) const { return at(p).user; }
  Seq seq(Position p) const { return at(p).seq; }
  bool orphaned(Position p) const { return at(p).orphaned; }

  /// Position of a retained action with this seq.
  std::optional<Position> find(Seq seq) const;

  /// First retained position (1 until something is evicted).
  Position first() const { return base_; }
  /// Last ingested position, kNoPosition when empty.
  Position last() const { return base_ + entries_.size() - 1; }
  std::size_t ingested() const { return ingested_; }
  bool empty() const { return ingested_ == 0; }

  /// Drops entries with position < horizon. Chains already computed for live
  /// actions are unaffected; later replies to dropped actions become orphans.
  void evict_before(Position horizon);

  std::size_t orphan_count() const { return orphans_; }
  /// Mean chain length over everything ingested so far.
  double mean_chain_length() const;

 private:
  struct Entry {
    Seq seq;
    UserId user;
    bool orphaned;
    std::vector<UserId> chain;
  };

  const Entry& at(Position p) const;

  std::deque<Entry> entries_;
  Position base_ = 1;
  std::size_t ingested_ = 0;
  std::size_t orphans_ = 0;
  std::size_t chain_total_ = 0;
  std::optional<Seq> last_seq_;
};

}  // namespace swim
