#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/string_view.h"
#include "swim/common.hpp"

namespace swim {

/// Interns user names to dense ids and carries the per-user weight used by the
/// weighted influence function. Weights default to 1 and are fixed at intern
/// time from the loaded weight table.
class UserTable {
 public:
  UserId intern(std::string_view name);
  bool contains(std::string_view name) const { return ids_.contains(key(name)); }
  /// Throws ConfigError for unknown names.
  UserId find(std::string_view name) const;

  const std::string& name(UserId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

  double weight(UserId id) const { return weights_[id]; }
  std::span<const double> weights() const { return weights_; }

  /// Registers weights by name; applies to already-interned users too.
  /// Throws ConfigError on negative or non-finite weights.
  void set_weight(std::string_view name, double w);

  /// Loads a `user,weight` CSV (optional header row).
  void load_weights_csv(const std::string& path);

 private:
  // The system absl is built without std::string_view aliasing.
  static absl::string_view key(std::string_view s) { return {s.data(), s.size()}; }

  absl::flat_hash_map<std::string, UserId> ids_;
  absl::flat_hash_map<std::string, double> pending_weights_;
  std::vector<std::string> names_;
  std::vector<double> weights_;
};

}  // namespace swim
