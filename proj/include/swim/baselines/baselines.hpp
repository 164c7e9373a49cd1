#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swim/common.hpp"
#include "swim/influence/influence_function.hpp"
#include "swim/influence/views.hpp"
#include "swim/stream/action.hpp"

namespace swim {

/// k rounds of argmax marginal gain over views built for one window. Ties go
/// to the lowest user id; stops early once no candidate adds anything.
SeedResult greedy(const InfluenceFunction& f, const WindowViews& views, std::size_t k);

struct ExactResult {
  std::vector<UserId> seeds;
  double value = 0.0;
  std::uint64_t enumerated = 0;
};

/// Exhaustive maximum of f over all seed sets of size <= k. Candidates are the
/// owners with a nonempty view. Among equal values the lexicographically
/// smallest id set wins. Throws BudgetExceeded when C(n, k) > budget.
ExactResult exact(const InfluenceFunction& f, const WindowViews& views, std::size_t k,
                  std::uint64_t budget = 1'000'000);

/// C(n, k), saturating at `cap + 1`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

/// Stream form of a Max-k-Coverage instance: one root post per set owner
/// followed by one reply to it per element.
struct ReducedStream {
  std::vector<Action> actions;
  std::vector<std::string> owners;  // owners[i] stands for sets[i]
  std::size_t window = 0;           // N covering the whole stream
};

/// Owner names are "set<i>"; throws ConfigError if one collides with an
/// element name or a set is empty.
ReducedStream reduce_max_k_coverage(const std::vector<std::vector<std::string>>& sets);

}  // namespace swim
