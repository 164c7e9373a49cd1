#include "swim/engine/ic_engine.hpp"

#include <string>

#include "swim/engine/sic_engine.hpp"
#include "swim/engine/recompute_engine.hpp"

namespace swim {

EngineKind parse_engine_kind(std::string_view name) {
  if (name == "ic") return EngineKind::Ic;
  if (name == "sic") return EngineKind::Sic;
  if (name == "greedy") return EngineKind::Greedy;
  if (name == "exact") return EngineKind::Exact;
  throw ConfigError("unknown engine '" + std::string(name) + "' (expected ic, sic, greedy or exact)");
}

std::string_view engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::Ic: return "ic";
    case EngineKind::Sic: return "sic";
    case EngineKind::Greedy: return "greedy";
    case EngineKind::Exact: return "exact";
  }
  return "?";
}

std::unique_ptr<Engine> make_engine(EngineKind kind, const PropagationIndex& index, const WindowConfig& cfg,
                                    const InfluenceFunction& f, const EngineOptions& opts) {
  cfg.validate();
  switch (kind) {
    case EngineKind::Ic: return std::make_unique<IcEngine>(index, cfg, f);
    case EngineKind::Sic: return std::make_unique<SicEngine>(index, cfg, f, SicOptions{opts.sic_prune});
    case EngineKind::Greedy:
      return std::make_unique<RecomputeEngine>(index, cfg, f, RecomputeEngine::Mode::Greedy, opts.exact_budget);
    case EngineKind::Exact:
      return std::make_unique<RecomputeEngine>(index, cfg, f, RecomputeEngine::Mode::Exact, opts.exact_budget);
  }
  throw ConfigError("unknown engine kind");
}

namespace detail {

void BatchCursor::advance(std::span<const Position> batch, std::size_t max_len) {
  if (batch.empty()) throw StreamError("empty batch");
  if (batch.size() > max_len) {
    throw StreamError("batch of " + std::to_string(batch.size()) + " exceeds slide length " +
                      std::to_string(max_len));
  }
  Position expect = last_ == kNoPosition ? batch.front() : last_ + 1;
  for (Position p : batch) {
    if (p != expect) {
      throw StreamError("out-of-order batch: expected position " + std::to_string(expect) + ", got " +
                        std::to_string(p));
    }
    ++expect;
  }
  last_ = batch.back();
}

}  // namespace detail

IcEngine::IcEngine(const PropagationIndex& index, const WindowConfig& cfg, const InfluenceFunction& f)
    : index_(index), cfg_(cfg), f_(f) {
  cfg_.validate();
}

void IcEngine::slide(std::span<const Position> batch) {
  cursor_.advance(batch, cfg_.slide);

  if (ring_.size() == cfg_.checkpoints_per_window()) {
    retired_offers_ += ring_.front().offers();
    ring_.pop_front();
  }
  ring_.emplace_back(batch.front(), cfg_.k, cfg_.beta, f_);
  log_.set_horizon(ring_.front().start());

  for (Position p : batch) {
    const UserId member = index_.user(p);
    const auto chain = index_.chain(p);
    log_.record(p, member, chain, prev_);
    for (SieveCheckpoint& cp : ring_) cp.process(member, chain, prev_, log_);
  }
}

SeedResult IcEngine::query() const {
  if (ring_.empty()) throw Error("query before any action");
  SeedResult r = ring_.front().solution();
  r.provenance = "ic " + r.provenance;
  return r;
}

std::size_t IcEngine::offers() const {
  std::size_t total = retired_offers_;
  for (const auto& cp : ring_) total += cp.offers();
  return total;
}

}  // namespace swim
