#include "swim/influence/influence_log.hpp"

#include <algorithm>

namespace swim {
namespace {

inline std::uint64_t pair_key(UserId owner, UserId member) {
  return (std::uint64_t{owner} << 32) | member;
}

}  // namespace

void InfluenceLog::record(Position pos, UserId member, std::span<const UserId> chain,
                          std::vector<Position>& prev) {
  prev.assign(chain.size(), kNoPosition);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const UserId owner = chain[i];
    if (owner >= owners_.size()) owners_.resize(static_cast<std::size_t>(owner) + 1);
    OwnerLog& log = owners_[owner];

    auto [it, inserted] = slot_.try_emplace(pair_key(owner, member), 0);
    if (!inserted) {
      const std::uint32_t old = it->second;
      prev[i] = log.positions[old];
      log.members[old] = kernels::kTombstone;
      ++log.dead;
    }
    it->second = static_cast<std::uint32_t>(log.members.size());
    log.members.push_back(member);
    log.positions.push_back(pos);

    if (log.members.size() >= 64) {
      const auto expired = static_cast<std::size_t>(
          std::lower_bound(log.positions.begin(), log.positions.end(), horizon_) - log.positions.begin());
      if (2 * (log.dead + expired) > log.members.size()) compact(owner, log);
    }
  }
}

void InfluenceLog::compact(UserId owner, OwnerLog& log) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < log.members.size(); ++i) {
    const UserId m = log.members[i];
    if (m == kernels::kTombstone) continue;
    if (log.positions[i] < horizon_) {
      slot_.erase(pair_key(owner, m));
      continue;
    }
    log.members[out] = m;
    log.positions[out] = log.positions[i];
    slot_[pair_key(owner, m)] = static_cast<std::uint32_t>(out);
    ++out;
  }
  log.members.resize(out);
  log.positions.resize(out);
  log.dead = 0;
}

std::span<const UserId> InfluenceLog::members_since(UserId owner, Position start) const {
  if (owner >= owners_.size()) return {};
  const OwnerLog& log = owners_[owner];
  const auto first = std::lower_bound(log.positions.begin(), log.positions.end(), start);
  const auto offset = static_cast<std::size_t>(first - log.positions.begin());
  return std::span<const UserId>(log.members).subspan(offset);
}

void apply_action(SuffixViews& views, const InfluenceFunction& f, UserId influenced,
                  std::span<const UserId> chain, std::span<const Position> prev,
                  std::vector<OwnerGain>& out) {
  out.clear();
  const double w = f.weight(influenced);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const bool gained = prev[i] < views.start_;
    if (gained) views.values_[chain[i]] += w;
    out.push_back({chain[i], gained});
  }
}

}  // namespace swim
