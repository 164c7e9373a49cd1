#include "swim/gen/streamgen.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <random>

#include "json.hpp"
#include "swim/stream/action_io.hpp"

namespace swim {

void GenConfig::validate() const {
  if (num_users == 0) throw ConfigError("num_users must be positive");
  if (!(follow_fraction >= 0.0 && follow_fraction <= 1.0)) throw ConfigError("follow_fraction must lie in [0, 1]");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("lambda must be positive");
  const double ps[] = {rmat.a, rmat.b, rmat.c, rmat.d};
  for (double p : ps) {
    if (!(p >= 0.0)) throw ConfigError("R-MAT probabilities must be non-negative");
  }
  if (std::abs(rmat.a + rmat.b + rmat.c + rmat.d - 1.0) > 1e-9) throw ConfigError("R-MAT probabilities must sum to 1");
}

GenConfig syn_o(std::size_t num_users, std::size_t num_actions, std::uint64_t seed) {
  GenConfig c;
  c.num_users = num_users;
  c.num_actions = num_actions;
  c.lambda = 2.0e-6;
  c.seed = seed;
  return c;
}

GenConfig syn_n(std::size_t num_users, std::size_t num_actions, std::uint64_t seed) {
  GenConfig c = syn_o(num_users, num_actions, seed);
  c.lambda = 2.0e-4;
  return c;
}

std::vector<double> rmat_degrees(std::size_t num_users, std::size_t edges, const RmatParams& p, std::uint64_t seed) {
  GenConfig probe;
  probe.num_users = num_users;
  probe.rmat = p;
  probe.validate();

  std::vector<double> deg(num_users, edges == 0 ? 1.0 : 0.0);
  if (edges == 0) return deg;

  const std::size_t scale = std::bit_width(std::bit_ceil(num_users)) - 1;
  std::mt19937_64 rng(seed);
  const double ab = p.a + p.b;
  for (std::size_t e = 0; e < edges;) {
    std::size_t src = 0;
    for (std::size_t level = 0; level < scale; ++level) {
      const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      // Only the source matters: quadrants c and d set the next source bit.
      src = (src << 1) | (r >= ab ? 1u : 0u);
    }
    if (src >= num_users) continue;
    deg[src] += 1.0;
    ++e;
  }
  return deg;
}

GeneratedStream generate(const GenConfig& cfg) {
  cfg.validate();
  std::vector<double> weights = rmat_degrees(cfg.num_users, cfg.edge_count(), cfg.rmat, cfg.seed);
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::bernoulli_distribution follow(cfg.follow_fraction);
  std::exponential_distribution<double> distance(cfg.lambda);

  GeneratedStream out;
  out.actions.reserve(cfg.num_actions);
  std::vector<std::uint32_t> depth(cfg.num_actions + 1, 0);
  double sampled = 0.0, realized = 0.0, depth_sum = 0.0;
  for (std::size_t t = 1; t <= cfg.num_actions; ++t) {
    Action a;
    a.seq = static_cast<Seq>(t);
    a.user = "u" + std::to_string(pick(rng));
    depth[t] = 1;
    if (follow(rng) && t > 1) {
      const double x = distance(rng);
      const std::size_t delta = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(x)));
      std::size_t parent = 1;
      if (delta < t) {
        parent = t - delta;
      } else {
        ++out.stats.clamped;
      }
      a.parent = static_cast<Seq>(parent);
      depth[t] = depth[parent] + 1;
      ++out.stats.follows;
      sampled += static_cast<double>(delta);
      realized += static_cast<double>(t - parent);
    }
    depth_sum += depth[t];
    out.actions.push_back(std::move(a));
  }
  if (out.stats.follows > 0) {
    out.stats.mean_sampled_delta = sampled / static_cast<double>(out.stats.follows);
    out.stats.mean_realized_delta = realized / static_cast<double>(out.stats.follows);
  }
  if (cfg.num_actions > 0) out.stats.mean_depth = depth_sum / static_cast<double>(cfg.num_actions);
  return out;
}

void write_ndjson(std::ostream& out, const std::vector<Action>& actions) {
  for (const Action& a : actions) out << to_ndjson(a) << '\n';
}

void write_gen_manifest(std::ostream& out, const GenConfig& cfg, const GenStats& stats) {
  nlohmann::ordered_json j;
  j["generator"] = "rmat-exp";
  j["num_users"] = cfg.num_users;
  j["num_actions"] = cfg.num_actions;
  j["follow_fraction"] = cfg.follow_fraction;
  j["lambda"] = cfg.lambda;
  j["rmat"] = {{"a", cfg.rmat.a}, {"b", cfg.rmat.b}, {"c", cfg.rmat.c}, {"d", cfg.rmat.d}};
  j["edges"] = cfg.edge_count();
  j["seed"] = cfg.seed;
  j["stats"] = {{"follows", stats.follows},
                {"clamped", stats.clamped},
                {"mean_sampled_delta", stats.mean_sampled_delta},
                {"mean_realized_delta", stats.mean_realized_delta},
                {"mean_depth", stats.mean_depth}};
  out << j.dump(2) << '\n';
}

}  // namespace swim
