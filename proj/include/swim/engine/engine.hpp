#pragma once

#include <memory>
#include <span>
#include <string_view>

#include "swim/common.hpp"
#include "swim/influence/influence_function.hpp"
#include "swim/stream/action.hpp"
#include "swim/stream/propagation_index.hpp"

namespace swim {

/// A sliding-window SIM engine. Actions are ingested into a shared
/// PropagationIndex first; the engine then receives their positions one batch
/// (one window slide) at a time.
class Engine {
 public:
  virtual ~Engine() = default;

  /// Next batch of at most L consecutive positions. Throws StreamError if the
  /// batch does not continue directly after the previous one.
  virtual void slide(std::span<const Position> batch) = 0;

  /// Current answer for the window ending at the last slid position.
  virtual SeedResult query() const = 0;

  /// Live checkpoint oracles (0 for recomputing baselines).
  virtual std::size_t checkpoint_count() const = 0;

  virtual std::string_view name() const = 0;
};

enum class EngineKind { Ic, Sic, Greedy, Exact };

EngineKind parse_engine_kind(std::string_view name);
std::string_view engine_name(EngineKind kind);

struct EngineOptions {
  std::size_t exact_budget = 1'000'000;
  bool sic_prune = true;
};

std::unique_ptr<Engine> make_engine(EngineKind kind, const PropagationIndex& index, const WindowConfig& cfg,
                                    const InfluenceFunction& f, const EngineOptions& opts = {});

namespace detail {

/// Shared batch bookkeeping: checks contiguity and tracks the last position.
class BatchCursor {
 public:
  void advance(std::span<const Position> batch, std::size_t max_len);
  Position last() const { return last_; }

 private:
  Position last_ = kNoPosition;
};

}  // namespace detail

}  // namespace swim
