#pragma once

#include <span>

#include "swim/kernels/bitset.hpp"
#include "swim/kernels/kernels.hpp"
#include "swim/stream/user_table.hpp"

namespace swim {

/// Monotone submodular function of an influenced-user set: plain cardinality,
/// or a sum of fixed per-user weights taken from the user table.
class InfluenceFunction {
 public:
  enum class Kind { Cardinality, Weighted };

  static InfluenceFunction cardinality() { return InfluenceFunction(Kind::Cardinality, nullptr); }
  static InfluenceFunction weighted(const UserTable& users) { return InfluenceFunction(Kind::Weighted, &users); }

  Kind kind() const { return kind_; }

  double weight(UserId u) const { return kind_ == Kind::Cardinality ? 1.0 : users_->weight(u); }

  /// f(ids) for a duplicate-free id list (tombstones allowed).
  double eval(std::span<const UserId> ids) const {
    static const DynamicBitset empty;
    return gain(ids, empty);
  }

  /// f(covered ∪ ids) − f(covered) for a duplicate-free id list.
  double gain(std::span<const UserId> ids, const DynamicBitset& covered) const {
    if (kind_ == Kind::Cardinality) {
      return static_cast<double>(kernels::count_uncovered(ids, covered.words()));
    }
    return kernels::sum_uncovered(ids, covered.words(), users_->weights());
  }

 private:
  InfluenceFunction(Kind kind, const UserTable* users) : kind_(kind), users_(users) {}

  Kind kind_;
  const UserTable* users_;
};

}  // namespace swim
