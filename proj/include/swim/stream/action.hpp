#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swim/common.hpp"

namespace swim {

/// One social action as read from input. A missing parent marks a root action.
struct Action {
  Seq seq = 0;
  std::string user;
  std::optional<Seq> parent;
  std::vector<std::string> tags;
  std::optional<std::array<double, 2>> pos;
};

struct WindowConfig {
  std::size_t window = 1;  // N, in actions
  std::size_t slide = 1;   // L, actions per slide
  std::size_t k = 1;
  double beta = 0.2;

  /// Throws ConfigError. N must be a multiple of L so that checkpoint starts
  /// line up with window boundaries.
  void validate() const;

  /// ceil(N / L), the number of checkpoints a dense engine keeps.
  std::size_t checkpoints_per_window() const { return (window + slide - 1) / slide; }
};

/// Inclusive position range [lo, hi] of the window ending at `current`.
std::pair<Position, Position> window_bounds(Position current, const WindowConfig& cfg,
                                            Position first = 1);

}  // namespace swim
