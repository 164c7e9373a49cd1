#pragma once

#include <deque>
#include <vector>

#include "swim/engine/engine.hpp"
#include "swim/influence/influence_log.hpp"
#include "swim/oracle/sieve_checkpoint.hpp"

namespace swim {

/// Influential Checkpoints: one oracle per slide position, ceil(N/L) in steady
/// state. The oldest checkpoint covers exactly the current window and answers
/// queries.
class IcEngine final : public Engine {
 public:
  IcEngine(const PropagationIndex& index, const WindowConfig& cfg, const InfluenceFunction& f);

  void slide(std::span<const Position> batch) override;
  SeedResult query() const override;
  std::size_t checkpoint_count() const override { return ring_.size(); }
  std::string_view name() const override { return "ic"; }

  const std::deque<SieveCheckpoint>& checkpoints() const { return ring_; }
  /// Total oracle offers so far, summed over live and deleted checkpoints.
  std::size_t offers() const;

 private:
  const PropagationIndex& index_;
  WindowConfig cfg_;
  InfluenceFunction f_;
  InfluenceLog log_;
  std::deque<SieveCheckpoint> ring_;
  detail::BatchCursor cursor_;
  std::size_t retired_offers_ = 0;
  std::vector<Position> prev_;
};

}  // namespace swim
