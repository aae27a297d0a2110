#pragma once

// Index-level view of an AbelianGroup for the hot loops: elements are
// mixed-radix integers in [0, order), first factor most significant.

#include <cstdint>
#include <vector>

#include "onefact/abelian_group.hpp"

namespace onefact {

using Index = std::uint32_t;

class IndexedGroup {
 public:
  explicit IndexedGroup(const AbelianGroup& group);

  Index order() const { return order_; }

  Index add(Index a, Index b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return add_digits(a, b);
  }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg_[b]); }
  bool is_involution(Index a) const { return a != 0 && neg_[a] == a; }

  /// Membership mask of a subgroup, indexed by element index.
  std::vector<char> mask(const AbelianGroup& group, const Subgroup& h) const;
  /// Coset id per element; ids are assigned in order of the least element.
  std::vector<Index> coset_ids(const std::vector<char>& subgroup_mask, Index& coset_count) const;

 private:
  Index add_digits(Index a, Index b) const;

  Index order_ = 0;
  std::vector<Index> radices_;
  std::vector<Index> weights_;
  std::vector<Index> neg_;
  std::vector<Index> table_;
};

}  // namespace onefact
