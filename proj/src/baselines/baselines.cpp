#include "swim/baselines/baselines.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "swim/kernels/bitset.hpp"

namespace swim {

SeedResult greedy(const InfluenceFunction& f, const WindowViews& views, std::size_t k) {
  SeedResult out;
  DynamicBitset covered;
  std::vector<char> taken(views.owners().size(), 0);
  for (std::size_t round = 0; round < k; ++round) {
    double best_gain = 0.0;
    std::size_t best = taken.size();
    for (std::size_t i = 0; i < views.owners().size(); ++i) {
      if (taken[i]) continue;
      const double g = f.gain(views.members(views.owners()[i]), covered);
      if (g > best_gain) {  // owners are sorted, so the first maximum has the lowest id
        best_gain = g;
        best = i;
      }
    }
    if (best == taken.size()) break;
    taken[best] = 1;
    const UserId u = views.owners()[best];
    out.seeds.push_back(u);
    out.value += best_gain;
    for (UserId v : views.members(u)) covered.set(v);
  }
  std::sort(out.seeds.begin(), out.seeds.end());
  out.provenance = "greedy";
  return out;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact in 128 bits: each prefix product r * C(n, i) / (i+1) stays integral.
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

ExactResult exact(const InfluenceFunction& f, const WindowViews& views, std::size_t k, std::uint64_t budget) {
  ExactResult best;
  std::vector<UserId> cand;
  for (UserId u : views.owners()) {
    if (!views.members(u).empty()) cand.push_back(u);
  }
  const std::size_t n = cand.size();
  const std::size_t size = std::min(k, n);
  if (size == 0) return best;

  const std::uint64_t total = binomial_capped(n, size, budget);
  if (total > budget) {
    throw BudgetExceeded(fmt::format("exact search over C({}, {}) subsets exceeds the budget of {}", n, size,
                                     budget));
  }

  // Monotone f: some size-min(k, n) set is optimal, so only those are scanned.
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  DynamicBitset covered;
  bool first = true;
  while (true) {
    covered.clear();
    double value = 0.0;
    for (std::size_t i : idx) {
      const auto members = views.members(cand[i]);
      value += f.gain(members, covered);
      for (UserId v : members) covered.set(v);
    }
    ++best.enumerated;
    if (first || value > best.value) {
      first = false;
      best.value = value;
      best.seeds.clear();
      for (std::size_t i : idx) best.seeds.push_back(cand[i]);
    }

    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  return best;
}

}  // namespace swim
