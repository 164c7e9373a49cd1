#include "swim/engine/recompute_engine.hpp"

#include "swim/baselines/baselines.hpp"
#include "swim/influence/views.hpp"

namespace swim {

RecomputeEngine::RecomputeEngine(const PropagationIndex& index, const WindowConfig& cfg,
                                 const InfluenceFunction& f, Mode mode, std::uint64_t exact_budget)
    : index_(index), cfg_(cfg), f_(f), mode_(mode), budget_(exact_budget) {
  cfg_.validate();
}

void RecomputeEngine::slide(std::span<const Position> batch) {
  cursor_.advance(batch, cfg_.slide);
  if (first_ == kNoPosition) first_ = batch.front();
}

std::pair<Position, Position> RecomputeEngine::window() const {
  if (cursor_.last() == kNoPosition) throw Error("query before any action");
  return window_bounds(cursor_.last(), cfg_, first_);
}

SeedResult RecomputeEngine::query() const {
  const auto [lo, hi] = window();
  const WindowViews views = WindowViews::build(index_, lo, hi);
  if (mode_ == Mode::Greedy) return greedy(f_, views, cfg_.k);
  ExactResult r = exact(f_, views, cfg_.k, budget_);
  return SeedResult{std::move(r.seeds), r.value, "exact"};
}

}  // namespace swim
