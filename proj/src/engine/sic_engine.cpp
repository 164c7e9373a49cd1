#include "swim/engine/sic_engine.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace swim {

SicEngine::SicEngine(const PropagationIndex& index, const WindowConfig& cfg, const InfluenceFunction& f,
                     SicOptions opts)
    : index_(index), cfg_(cfg), f_(f), opts_(opts) {
  cfg_.validate();
}

Position SicEngine::window_lo() const {
  if (cursor_.last() == kNoPosition) return kNoPosition;
  return window_bounds(cursor_.last(), cfg_, first_).first;
}

void SicEngine::slide(std::span<const Position> batch) {
  cursor_.advance(batch, cfg_.slide);
  if (first_ == kNoPosition) first_ = batch.front();

  list_.emplace_back(batch.front(), cfg_.k, cfg_.beta, f_);
  for (Position p : batch) {
    const UserId member = index_.user(p);
    const auto chain = index_.chain(p);
    log_.record(p, member, chain, prev_);
    for (SieveCheckpoint& cp : list_) cp.process(member, chain, prev_, log_);
  }

  last_pruned_.clear();
  if (opts_.prune) last_pruned_ = prune();

  // Keep a single expired checkpoint: drop x_0 once x_1 has expired too.
  const Position lo = window_lo();
  std::size_t drop = 0;
  while (list_.size() - drop >= 2 && list_[drop + 1].start() < lo) ++drop;
  list_.erase(list_.begin(), list_.begin() + static_cast<std::ptrdiff_t>(drop));

  log_.set_horizon(list_.front().start());
}

std::vector<Position> SicEngine::prune() {
  std::vector<double> values;
  values.reserve(list_.size());
  for (const SieveCheckpoint& cp : list_) values.push_back(cp.value());
  const std::vector<std::size_t> gone = prune_indices(values, cfg_.beta);

  std::vector<Position> deleted;
  deleted.reserve(gone.size());
  std::size_t next = 0, out = 0;
  for (std::size_t i = 0; i < list_.size(); ++i) {
    if (next < gone.size() && gone[next] == i) {
      deleted.push_back(list_[i].start());
      ++next;
      continue;
    }
    if (out != i) list_[out] = std::move(list_[i]);
    ++out;
  }
  while (list_.size() > out) list_.pop_back();
  return deleted;
}

std::vector<std::size_t> prune_indices(std::span<const double> values, double beta) {
  std::vector<std::size_t> alive(values.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::vector<std::size_t> gone;
  const double keep = 1.0 - beta;
  // Sequential anchor scan; a later anchor's deletions can re-open an earlier
  // triple, so passes repeat until nothing more is removed.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      const double bar = keep * values[alive[i]];
      std::size_t j = i + 1;
      while (j + 1 < alive.size() && values[alive[j]] >= bar && values[alive[j + 1]] >= bar) ++j;
      if (j > i + 1) {
        gone.insert(gone.end(), alive.begin() + static_cast<std::ptrdiff_t>(i + 1),
                    alive.begin() + static_cast<std::ptrdiff_t>(j));
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(i + 1), alive.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
  std::sort(gone.begin(), gone.end());
  return gone;
}

SeedResult SicEngine::query() const {
  const Position lo = window_lo();
  for (const SieveCheckpoint& cp : list_) {
    if (cp.start() >= lo) {
      SeedResult r = cp.solution();
      r.provenance = "sic " + r.provenance;
      return r;
    }
  }
  throw Error("no live checkpoint to answer the query");
}

std::vector<CheckpointState> SicEngine::snapshot() const {
  std::vector<CheckpointState> out;
  out.reserve(list_.size());
  const auto lo = static_cast<std::int64_t>(window_lo());
  for (const SieveCheckpoint& cp : list_) {
    out.push_back({static_cast<std::int64_t>(cp.start()) - lo + 1, cp.start(), cp.value()});
  }
  return out;
}

std::vector<NeighborViolation> check_neighbor_conditions(std::span<const CheckpointState> cps,
                                                         std::size_t slide, double beta,
                                                         const std::function<double(Position)>& suffix_opt,
                                                         double epsilon) {
  std::vector<NeighborViolation> out;
  const double keep = 1.0 - beta;
  for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
    const double bar = keep * cps[i].value;
    if (cps[i + 1].value >= bar) {
      if (i + 2 < cps.size() && cps[i + 2].value >= bar) {
        out.push_back({i, fmt::format("v[i+1]={} and v[i+2]={} both >= (1-beta)v[i]={}", cps[i + 1].value,
                                      cps[i + 2].value, bar)});
      }
      continue;
    }
    if (cps[i + 1].start - cps[i].start == slide) continue;
    if (suffix_opt) {
      const double opt = suffix_opt(cps[i].start);
      const double floor = epsilon * keep / 2.0 * opt;
      if (cps[i + 1].value < floor - 1e-9) {
        out.push_back({i, fmt::format("gap successor value {} < eps(1-beta)/2 * OPT = {}", cps[i + 1].value,
                                      floor)});
      }
    }
  }
  return out;
}

}  // namespace swim
