#include "swim/oracle/sieve_checkpoint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace swim {

int ceil_log(double x, double base) {
  int j = static_cast<int>(std::ceil(std::log(x) / std::log(base)));
  while (std::pow(base, j - 1) >= x) --j;
  while (std::pow(base, j) < x) ++j;
  return j;
}

int floor_log(double x, double base) {
  int j = static_cast<int>(std::floor(std::log(x) / std::log(base)));
  while (std::pow(base, j + 1) <= x) ++j;
  while (std::pow(base, j) > x) --j;
  return j;
}

SieveCheckpoint::SieveCheckpoint(Position start, std::size_t k, double beta, const InfluenceFunction& f)
    : k_(k), base_(1.0 + beta), f_(f), views_(start) {
  if (k == 0) throw ConfigError("checkpoint needs k >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
}

void SieveCheckpoint::process(UserId member, std::span<const UserId> chain,
                              std::span<const Position> prev, const InfluenceLog& log) {
  apply_action(views_, f_, member, chain, prev, gains_);

  // A selected owner's view just grew by `member`: every instance holding it
  // now covers `member` too.
  for (const OwnerGain& g : gains_) {
    if (!g.gained) continue;
    auto it = selected_.find(g.owner);
    if (it == selected_.end()) continue;
    for (int j : it->second) {
      Instance* inst = instance(j);
      if (inst != nullptr && inst->covered.set(member)) {
        inst->value += f_.weight(member);
        note_value(*inst);
      }
    }
  }

  for (UserId owner : chain) offer(owner, log);
}

void SieveCheckpoint::raise_m(double single_value) {
  if (single_value <= m_) return;
  m_ = single_value;
  const double span = 2.0 * static_cast<double>(k_) * m_;
  if (m_ <= lo_limit_ && span < hi_limit_) return;  // same lattice bounds
  const int lo = ceil_log(m_, base_);
  const int hi = floor_log(span, base_);
  lo_limit_ = std::pow(base_, lo);
  hi_limit_ = std::pow(base_, hi + 1);

  std::size_t drop = 0;
  for (; drop < lattice_.size() && lattice_[drop].exponent < lo; ++drop) {
    Instance& dropped = lattice_[drop];
    if (has_best_ && best_exponent_ == dropped.exponent) {
      for (UserId u : dropped.cx) {
        auto& js = selected_[u];
        std::replace(js.begin(), js.end(), dropped.exponent, kRetained);
      }
      dropped.exponent = kRetained;
      best_exponent_ = kRetained;
      retained_ = std::move(dropped);
    } else {
      forget_selection(dropped);
    }
  }
  lattice_.erase(lattice_.begin(), lattice_.begin() + static_cast<std::ptrdiff_t>(drop));

  const int next = lattice_.empty() ? lo : std::max(lo, lattice_.back().exponent + 1);
  for (int j = next; j <= hi; ++j) {
    Instance& inst = lattice_.emplace_back(Instance{j, std::pow(base_, j) / 2.0, {}, {}, 0.0});
    inst.cx.reserve(k_);
  }
  open_.clear();
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    if (lattice_[i].cx.size() < k_) open_.push_back(static_cast<std::uint32_t>(i));
  }
}

double SieveCheckpoint::offer(UserId owner, const InfluenceLog& log) {
  ++offers_;
  const double fu = views_.value(owner);
  raise_m(fu);
  if (fu <= 0.0 || lattice_.empty()) return best_value_;

  std::span<const UserId> members;
  bool fetched = false, filled = false;
  for (std::uint32_t i : open_) {
    Instance& inst = lattice_[i];
    // Admission needs gain >= (T/2 - value) / free; compared multiplied out.
    const double free = static_cast<double>(k_ - inst.cx.size());
    const double need = inst.half_threshold - inst.value;
    if (fu * free < need) continue;  // the gain can never exceed f of the view itself
    if (std::find(inst.cx.begin(), inst.cx.end(), owner) != inst.cx.end()) continue;
    if (!fetched) {
      members = log.members_since(owner, start());
      fetched = true;
    }
    if (f_.gain(members, inst.covered) * free >= need) {
      admit(inst, owner, members);
      filled |= inst.cx.size() == k_;
    }
  }
  if (filled) {
    std::erase_if(open_, [&](std::uint32_t i) { return lattice_[i].cx.size() >= k_; });
  }
  return best_value_;
}

void SieveCheckpoint::admit(Instance& inst, UserId owner, std::span<const UserId> members) {
  inst.cx.push_back(owner);
  for (UserId m : members) {
    if (m != kernels::kTombstone && inst.covered.set(m)) inst.value += f_.weight(m);
  }
  selected_[owner].push_back(inst.exponent);
  note_value(inst);
}

void SieveCheckpoint::note_value(const Instance& inst) {
  if (!has_best_ || inst.value > best_value_ ||
      (inst.value == best_value_ && inst.exponent < best_exponent_)) {
    best_value_ = inst.value;
    best_exponent_ = inst.exponent;
    has_best_ = true;
  }
  if (retained_ && inst.exponent != kRetained && inst.value > retained_->value) {
    forget_selection(*retained_);
    retained_.reset();
  }
}

void SieveCheckpoint::forget_selection(const Instance& inst) {
  for (UserId u : inst.cx) {
    auto it = selected_.find(u);
    if (it == selected_.end()) continue;
    auto& js = it->second;
    js.erase(std::remove(js.begin(), js.end(), inst.exponent), js.end());
    if (js.empty()) selected_.erase(it);
  }
}

SieveCheckpoint::Instance* SieveCheckpoint::instance(int exponent) {
  if (exponent == kRetained) return retained_ ? &*retained_ : nullptr;
  if (lattice_.empty() || exponent < lattice_.front().exponent || exponent > lattice_.back().exponent) {
    return nullptr;
  }
  return &lattice_[static_cast<std::size_t>(exponent - lattice_.front().exponent)];
}

const SieveCheckpoint::Instance* SieveCheckpoint::best_instance() const {
  if (!has_best_) return nullptr;
  return const_cast<SieveCheckpoint*>(this)->instance(best_exponent_);
}

SeedResult SieveCheckpoint::solution() const {
  SeedResult r;
  r.provenance = "start=" + std::to_string(start());
  const Instance* best = best_instance();
  if (best == nullptr) return r;
  r.seeds = best->cx;
  std::sort(r.seeds.begin(), r.seeds.end());
  r.value = best->value;
  r.provenance += best->exponent == kRetained ? " retained" : " j=" + std::to_string(best->exponent);
  return r;
}

std::vector<int> SieveCheckpoint::exponents() const {
  std::vector<int> out;
  out.reserve(lattice_.size());
  for (const Instance& inst : lattice_) out.push_back(inst.exponent);
  return out;
}

std::vector<SieveCheckpoint::InstanceInfo> SieveCheckpoint::instances() const {
  std::vector<InstanceInfo> out;
  out.reserve(lattice_.size());
  for (const Instance& inst : lattice_) {
    out.push_back({inst.exponent, 2.0 * inst.half_threshold, inst.cx, inst.value});
  }
  return out;
}

std::optional<int> SieveCheckpoint::best_exponent() const {
  if (!has_best_ || best_exponent_ == kRetained) return std::nullopt;
  return best_exponent_;
}

}  // namespace swim
