#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "swim/stream/action.hpp"

namespace swim {

struct RmatParams {
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
};

struct GenConfig {
  std::size_t num_users = 1024;
  std::size_t num_actions = 10'000;
  double follow_fraction = 0.6;
  double lambda = 2.0e-4;  // response distance ~ exp(lambda), mean 1/lambda
  RmatParams rmat;
  std::optional<std::size_t> edges;  // R-MAT edge count; default 10 * num_users
  std::uint64_t seed = 1;

  /// Throws ConfigError.
  void validate() const;
  std::size_t edge_count() const { return edges.value_or(10 * num_users); }
};

/// Mean response distance 500,000.
GenConfig syn_o(std::size_t num_users, std::size_t num_actions, std::uint64_t seed);
/// Mean response distance 5,000.
GenConfig syn_n(std::size_t num_users, std::size_t num_actions, std::uint64_t seed);

/// R-MAT out-degree of every user, used as selection weight. Ids are drawn in
/// the next power of two and redrawn when they land past num_users. With
/// edges == 0 every user gets weight 1.
std::vector<double> rmat_degrees(std::size_t num_users, std::size_t edges, const RmatParams& p,
                                 std::uint64_t seed);

struct GenStats {
  std::size_t follows = 0;
  std::size_t clamped = 0;           // follows whose distance reached past the stream start
  double mean_sampled_delta = 0.0;   // before clamping
  double mean_realized_delta = 0.0;  // after clamping
  double mean_depth = 0.0;           // parent-chain length including the action itself
};

struct GeneratedStream {
  std::vector<Action> actions;  // seq 1..num_actions
  GenStats stats;
};

GeneratedStream generate(const GenConfig& cfg);

void write_ndjson(std::ostream& out, const std::vector<Action>& actions);
/// Config, seed and summary stats as one JSON document.
void write_gen_manifest(std::ostream& out, const GenConfig& cfg, const GenStats& stats);

}  // namespace swim
