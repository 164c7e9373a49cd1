#include "swim/influence/views.hpp"

#include <algorithm>

#include "absl/container/flat_hash_map.h"

namespace swim {
namespace {

using RawViews = absl::flat_hash_map<UserId, std::vector<UserId>>;

void sort_unique(std::vector<UserId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

WindowViews WindowViews::build(const PropagationIndex& index, Position lo, Position hi) {
  std::vector<std::pair<UserId, std::vector<UserId>>> events;
  for (Position p = lo; p <= hi && p != kNoPosition; ++p) {
    auto chain = index.chain(p);
    events.emplace_back(index.user(p), std::vector<UserId>(chain.begin(), chain.end()));
  }
  return from_events(events);
}

WindowViews WindowViews::from_events(std::span<const std::pair<UserId, std::vector<UserId>>> events) {
  RawViews raw;
  WindowViews v;
  for (const auto& [member, chain] : events) {
    v.active_.push_back(member);
    for (UserId owner : chain) raw[owner].push_back(member);
  }
  sort_unique(v.active_);
  v.owners_.reserve(raw.size());
  for (const auto& entry : raw) v.owners_.push_back(entry.first);
  std::sort(v.owners_.begin(), v.owners_.end());
  v.members_.reserve(v.owners_.size());
  for (UserId o : v.owners_) {
    auto& m = raw[o];
    sort_unique(m);
    v.members_.push_back(std::move(m));
  }
  return v;
}

std::span<const UserId> WindowViews::members(UserId owner) const {
  auto it = std::lower_bound(owners_.begin(), owners_.end(), owner);
  if (it == owners_.end() || *it != owner) return {};
  return members_[static_cast<std::size_t>(it - owners_.begin())];
}

double eval(const InfluenceFunction& f, const WindowViews& views, std::span<const UserId> seeds) {
  std::vector<UserId> all;
  for (UserId s : seeds) {
    auto m = views.members(s);
    all.insert(all.end(), m.begin(), m.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return f.eval(all);
}

double marginal(const InfluenceFunction& f, const WindowViews& views, std::span<const UserId> base,
                UserId candidate) {
  DynamicBitset covered;
  for (UserId s : base) {
    for (UserId m : views.members(s)) covered.set(m);
  }
  return f.gain(views.members(candidate), covered);
}

}  // namespace swim
