#pragma once

#include <cstdint>

#include "swim/engine/engine.hpp"

namespace swim {

/// Baseline engine that keeps no state beyond the index and solves every query
/// from scratch over the current window, with greedy or exact search.
class RecomputeEngine final : public Engine {
 public:
  enum class Mode { Greedy, Exact };

  RecomputeEngine(const PropagationIndex& index, const WindowConfig& cfg, const InfluenceFunction& f, Mode mode,
                  std::uint64_t exact_budget = 1'000'000);

  void slide(std::span<const Position> batch) override;
  SeedResult query() const override;
  std::size_t checkpoint_count() const override { return 0; }
  std::string_view name() const override { return mode_ == Mode::Greedy ? "greedy" : "exact"; }

  /// Inclusive positions of the current window.
  std::pair<Position, Position> window() const;

 private:
  const PropagationIndex& index_;
  WindowConfig cfg_;
  InfluenceFunction f_;
  Mode mode_;
  std::uint64_t budget_;
  detail::BatchCursor cursor_;
  Position first_ = kNoPosition;
};

}  // namespace swim
