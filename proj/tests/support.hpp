#pragma once

// Test fixtures plus a brute-force reference model of influence sets and
// optima. The reference walks parent pointers directly and enumerates user
// subsets, sharing no code with the library's index, views or solvers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "swim/engine/engine.hpp"
#include "swim/stream/action.hpp"
#include "swim/stream/propagation_index.hpp"
#include "swim/stream/user_table.hpp"

namespace swim::testing {

/// Raw stream: action i (0-based, position i+1) by user[i], replying to the
/// 0-based index parent[i] or -1.
struct RawStream {
  std::vector<int> user;
  std::vector<int> parent;
  int num_users = 0;
  int name_offset = 0;  // user u is named "u<u + name_offset>"

  std::size_t size() const { return user.size(); }
  std::string name(int u) const { return "u" + std::to_string(u + name_offset); }
};

/// The 10-action example stream; users u1..u6 map to ids 0..5.
inline RawStream worked_stream() {
  RawStream s;
  s.num_users = 6;
  s.name_offset = 1;
  const int users[] = {1, 2, 3, 3, 4, 1, 5, 2, 6, 5};
  const int parents[] = {0, 1, 0, 1, 3, 3, 3, 0, 8, 7};  // 1-based, 0 = root
  for (int i = 0; i < 10; ++i) {
    s.user.push_back(users[i] - 1);
    s.parent.push_back(parents[i] - 1);
  }
  return s;
}

inline std::vector<Action> to_actions(const RawStream& s) {
  std::vector<Action> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Action a;
    a.seq = static_cast<Seq>(i + 1);
    a.user = s.name(s.user[i]);
    if (s.parent[i] >= 0) a.parent = s.parent[i] + 1;
    out.push_back(std::move(a));
  }
  return out;
}

/// Random stream; each action replies with probability `reply` to a uniformly
/// chosen earlier action.
inline RawStream random_stream(std::mt19937_64& rng, int num_users, int num_actions, double reply = 0.6) {
  RawStream s;
  s.num_users = num_users;
  std::uniform_int_distribution<int> pick_user(0, num_users - 1);
  std::bernoulli_distribution is_reply(reply);
  for (int i = 0; i < num_actions; ++i) {
    s.user.push_back(pick_user(rng));
    if (i > 0 && is_reply(rng)) {
      s.parent.push_back(std::uniform_int_distribution<int>(0, i - 1)(rng));
    } else {
      s.parent.push_back(-1);
    }
  }
  return s;
}

/// Library-side state for a raw stream. User id i is interned first so that
/// UserId == raw user index.
struct Loaded {
  UserTable users;
  PropagationIndex index;
};

inline void load(const RawStream& s, Loaded& out) {
  for (int u = 0; u < s.num_users; ++u) out.users.intern(s.name(u));
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::optional<Seq> parent;
    if (s.parent[i] >= 0) parent = s.parent[i] + 1;
    out.index.ingest(static_cast<Seq>(i + 1), static_cast<UserId>(s.user[i]), parent);
  }
}

inline void load_actions(const std::vector<Action>& actions, Loaded& out) {
  for (const Action& a : actions) out.index.ingest(a.seq, out.users.intern(a.user), a.parent);
}

/// Owner -> influenced users over positions [lo, hi] (1-based, inclusive).
inline std::map<int, std::set<int>> ref_views(const RawStream& s, std::size_t lo, std::size_t hi) {
  std::map<int, std::set<int>> v;
  for (std::size_t p = lo; p <= hi; ++p) {
    const int member = s.user[p - 1];
    for (int a = static_cast<int>(p - 1); a >= 0; a = s.parent[a]) v[s.user[a]].insert(member);
  }
  return v;
}

inline double ref_value(const std::map<int, std::set<int>>& views, const std::vector<int>& seeds,
                        const std::vector<double>* weights = nullptr) {
  std::set<int> covered;
  for (int u : seeds) {
    auto it = views.find(u);
    if (it != views.end()) covered.insert(it->second.begin(), it->second.end());
  }
  double total = 0.0;
  for (int m : covered) total += weights ? (*weights)[m] : 1.0;
  return total;
}

struct RefOpt {
  double value = 0.0;
  std::vector<int> seeds;
};

/// Best set of at most k owners by full enumeration over every subset size.
inline RefOpt ref_opt(const std::map<int, std::set<int>>& views, std::size_t k,
                      const std::vector<double>* weights = nullptr) {
  std::vector<int> owners;
  for (const auto& [u, m] : views) owners.push_back(u);
  RefOpt best;
  const std::size_t n = owners.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
    std::vector<int> seeds;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) seeds.push_back(owners[i]);
    }
    const double v = ref_value(views, seeds, weights);
    if (v > best.value) best = {v, seeds};
  }
  return best;
}

inline double ref_opt_value(const RawStream& s, std::size_t lo, std::size_t hi, std::size_t k) {
  if (lo > hi) return 0.0;
  return ref_opt(ref_views(s, lo, hi), k).value;
}

/// Slides an engine over every ingested position in batches of cfg.slide and
/// calls on_slide(last position) after each slide.
template <class F>
void drive(Engine& engine, const PropagationIndex& idx, std::size_t slide, F&& on_slide) {
  std::vector<Position> batch;
  for (Position p = 1; p <= idx.last(); ++p) {
    batch.push_back(p);
    if (batch.size() == slide || p == idx.last()) {
      engine.slide(batch);
      on_slide(p);
      batch.clear();
    }
  }
}

template <class T>
std::vector<int> as_ints(const T& ids) {
  return std::vector<int>(ids.begin(), ids.end());
}

}  // namespace swim::testing
