#include <absl/container/flat_hash_set.h>

#include "swim/baselines/baselines.hpp"

namespace swim {

ReducedStream reduce_max_k_coverage(const std::vector<std::vector<std::string>>& sets) {
  absl::flat_hash_set<std::string> elements;
  for (const auto& s : sets) {
    if (s.empty()) throw ConfigError("coverage sets must be non-empty");
    elements.insert(s.begin(), s.end());
  }

  ReducedStream out;
  Seq seq = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string owner = "set" + std::to_string(i);
    if (elements.contains(owner)) throw ConfigError("element name '" + owner + "' collides with a set owner");
    const Seq root = ++seq;
    out.actions.push_back(Action{root, owner, std::nullopt, {}, std::nullopt});
    for (const std::string& e : sets[i]) out.actions.push_back(Action{++seq, e, root, {}, std::nullopt});
    out.owners.push_back(std::move(owner));
  }
  out.window = out.actions.size();
  return out;
}

}  // namespace swim
