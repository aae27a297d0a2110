#include "onefact/indexed_group.hpp"

#include <stdexcept>

namespace onefact {

namespace {
constexpr Index kTableLimit = 1024;
}

IndexedGroup::IndexedGroup(const AbelianGroup& group) {
  if (group.order() > (std::int64_t{1} << 31)) throw std::invalid_argument("group too large for indexing");
  order_ = static_cast<Index>(group.order());
  for (std::int64_t c : group.cyclic_orders()) radices_.push_back(static_cast<Index>(c));
  weights_.assign(radices_.size(), 1);
  for (std::size_t i = radices_.size() - 1; i-- > 0;) weights_[i] = weights_[i + 1] * radices_[i + 1];

  neg_.resize(order_);
  for (Index a = 0; a < order_; ++a) {
    Index r = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      const Index d = (a / weights_[i]) % radices_[i];
      r += ((radices_[i] - d) % radices_[i]) * weights_[i];
    }
    neg_[a] = r;
  }
  if (order_ <= kTableLimit) {
    table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Index a = 0; a < order_; ++a) {
      for (Index b = 0; b < order_; ++b) table_[static_cast<std::size_t>(a) * order_ + b] = add_digits(a, b);
    }
  }
}

Index IndexedGroup::add_digits(Index a, Index b) const {
  Index r = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    const Index da = (a / weights_[i]) % radices_[i];
    const Index db = (b / weights_[i]) % radices_[i];
    r += ((da + db) % radices_[i]) * weights_[i];
  }
  return r;
}

std::vector<char> IndexedGroup::mask(const AbelianGroup& group, const Subgroup& h) const {
  std::vector<char> m(order_, 0);
  for (const Element& e : h.elements()) m[static_cast<std::size_t>(group.index_of(e))] = 1;
  return m;
}

std::vector<Index> IndexedGroup::coset_ids(const std::vector<char>& subgroup_mask, Index& coset_count) const {
  std::vector<Index> members;
  for (Index x = 0; x < order_; ++x) {
    if (subgroup_mask[x]) members.push_back(x);
  }
  constexpr Index kUnset = ~Index{0};
  std::vector<Index> ids(order_, kUnset);
  coset_count = 0;
  for (Index x = 0; x < order_; ++x) {
    if (ids[x] != kUnset) continue;
    for (Index h : members) ids[add(x, h)] = coset_count;
    ++coset_count;
  }
  return ids;
}

}  // namespace onefact
