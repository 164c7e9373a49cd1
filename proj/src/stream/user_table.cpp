#include "swim/stream/user_table.hpp"

#include <cmath>
#include <fstream>

#include "swim/stream/action_io.hpp"

namespace swim {

UserId UserTable::intern(std::string_view name) {
  auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<UserId>(names_.size()));
  if (inserted) {
    names_.emplace_back(name);
    auto w = pending_weights_.find(key(name));
    weights_.push_back(w == pending_weights_.end() ? 1.0 : w->second);
  }
  return it->second;
}

UserId UserTable::find(std::string_view name) const {
  auto it = ids_.find(key(name));
  if (it == ids_.end()) throw ConfigError("unknown user '" + std::string(name) + "'");
  return it->second;
}

void UserTable::set_weight(std::string_view name, double w) {
  if (!std::isfinite(w) || w < 0.0) {
    throw ConfigError("weight for user '" + std::string(name) + "' must be finite and >= 0");
  }
  pending_weights_[std::string(name)] = w;
  if (auto it = ids_.find(key(name)); it != ids_.end()) weights_[it->second] = w;
}

void UserTable::load_weights_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open weight table '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 2) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected user,weight");
    if (lineno == 1 && fields[0] == "user" && fields[1] == "weight") continue;
    double w = 0.0;
    try {
      std::size_t used = 0;
      w = std::stod(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": bad weight '" + fields[1] + "'");
    }
    set_weight(fields[0], w);
  }
}

}  // namespace swim
