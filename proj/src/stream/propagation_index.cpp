#include "swim/stream/propagation_index.hpp"

#include <algorithm>
#include <string>

#include "swim/stream/action.hpp"

namespace swim {

void WindowConfig::validate() const {
  if (window < 1) throw ConfigError("window size N must be >= 1");
  if (slide < 1 || slide > window) throw ConfigError("slide L must satisfy 1 <= L <= N");
  if (window % slide != 0) throw ConfigError("window size N must be a multiple of slide L");
  if (k < 1) throw ConfigError("k must be >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
}

std::pair<Position, Position> window_bounds(Position current, const WindowConfig& cfg,
                                            Position first) {
  const Position lo = current >= cfg.window ? current - cfg.window + 1 : 1;
  return {std::max(lo, first), current};
}

PropagationIndex::Ingested PropagationIndex::ingest(Seq seq, UserId user,
                                                    std::optional<Seq> parent) {
  if (last_seq_ && seq <= *last_seq_) {
    throw StreamError(seq == *last_seq_ ? "duplicate seq " + std::to_string(seq)
                                        : "seq " + std::to_string(seq) + " arrives after " +
                                              std::to_string(*last_seq_));
  }
  if (parent && *parent >= seq) {
    throw StreamError("parent " + std::to_string(*parent) + " of seq " + std::to_string(seq) +
                      " is not earlier");
  }

  Entry e{seq, user, false, {user}};
  if (parent) {
    if (auto p = find(*parent)) {
      for (UserId u : at(*p).chain) {
        if (std::find(e.chain.begin(), e.chain.end(), u) == e.chain.end()) e.chain.push_back(u);
      }
    } else {
      e.orphaned = true;
      ++orphans_;
    }
  }

  last_seq_ = seq;
  ++ingested_;
  chain_total_ += e.chain.size();
  entries_.push_back(std::move(e));
  const Position pos = last();
  return {pos, entries_.back().chain, entries_.back().orphaned};
}

std::optional<Position> PropagationIndex::find(Seq seq) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), seq,
                             [](const Entry& e, Seq s) { return e.seq < s; });
  if (it == entries_.end() || it->seq != seq) return std::nullopt;
  return base_ + static_cast<Position>(it - entries_.begin());
}

void PropagationIndex::evict_before(Position horizon) {
  while (!entries_.empty() && base_ < horizon) {
    entries_.pop_front();
    ++base_;
  }
}

double PropagationIndex::mean_chain_length() const {
  return ingested_ == 0 ? 0.0 : static_cast<double>(chain_total_) / static_cast<double>(ingested_);
}

const PropagationIndex::Entry& PropagationIndex::at(Position p) const {
  if (p < base_ || p - base_ >= entries_.size()) {
    throw InternalError("position " + std::to_string(p) + " is not retained");
  }
  return entries_[p - base_];
}

}  // namespace swim
