#pragma once

#include <span>
#include <vector>

#include "swim/common.hpp"
#include "swim/influence/influence_function.hpp"
#include "swim/stream/propagation_index.hpp"

namespace swim {

/// Influence sets I(u) recomputed from scratch over a contiguous range of
/// positions. Owners and members are sorted ascending.
class WindowViews {
 public:
  WindowViews() = default;

  /// Views over positions [lo, hi] of the index.
  static WindowViews build(const PropagationIndex& index, Position lo, Position hi);

  /// Views of explicit (member, chain) events, for fixtures that bypass an index.
  static WindowViews from_events(std::span<const std::pair<UserId, std::vector<UserId>>> events);

  std::span<const UserId> owners() const { return owners_; }
  /// Empty span for users with no influence in the range.
  std::span<const UserId> members(UserId owner) const;

  /// Every user who acted in the range (A_t).
  std::span<const UserId> active() const { return active_; }

 private:
  std::vector<UserId> owners_;
  std::vector<std::vector<UserId>> members_;
  std::vector<UserId> active_;
};

/// f(I(seeds)) over the given views.
double eval(const InfluenceFunction& f, const WindowViews& views, std::span<const UserId> seeds);

/// f(I(base ∪ {candidate})) − f(I(base)).
double marginal(const InfluenceFunction& f, const WindowViews& views, std::span<const UserId> base,
                UserId candidate);

}  // namespace swim
