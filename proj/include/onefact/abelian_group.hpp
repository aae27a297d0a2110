#pragma once

// Finite abelian groups presented as direct products of cyclic groups.
//
// Elements are residue tuples, one coordinate per cyclic factor. Ordering is
// lexicographic on coordinates, which coincides with the mixed-radix index
// (first factor most significant) used for vertex export.

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace onefact {

struct Element {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;
};

class AbelianGroup {
 public:
  /// Throws std::invalid_argument on an empty presentation or a factor < 2.
  explicit AbelianGroup(std::vector<std::int64_t> cyclic_orders);

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::int64_t order() const { return order_; }
  std::size_t rank() const { return orders_.size(); }
  bool is_cyclic() const { return orders_.size() == 1; }

  Element identity() const;
  /// Reduces every coordinate into range; rejects arity mismatch.
  Element make_element(std::vector<std::int64_t> coords) const;
  /// True iff the arity matches and every coordinate is already reduced.
  bool contains(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const Element& a, std::int64_t k) const;
  std::int64_t element_order(const Element& a) const;

  std::int64_t index_of(const Element& a) const;
  Element element_at(std::int64_t index) const;
  /// All elements in lexicographic (= index) order.
  std::vector<Element> elements() const;
  /// One generator per cyclic factor: the unit vectors.
  std::vector<Element> standard_generators() const;

  /// Sorted prime-power orders of the elementary divisor decomposition.
  /// Two groups are isomorphic iff their keys are equal.
  std::vector<std::int64_t> isomorphism_key() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  void check_arity(const Element& a) const;

  std::vector<std::int64_t> orders_;
  std::int64_t order_ = 1;
};

AbelianGroup make_group(std::vector<std::int64_t> cyclic_orders);

/// A subgroup given by generators together with its full element set.
/// Equality is decided by the element set alone.
class Subgroup {
 public:
  Subgroup(std::vector<Element> generators, std::vector<Element> sorted_elements);

  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  bool contains(const Element& a) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Element> generators_;
  std::vector<Element> elements_;
};

Subgroup subgroup_from_generators(const AbelianGroup& group, std::span<const Element> gens);
/// The whole group as a subgroup of itself.
Subgroup whole_group(const AbelianGroup& group);

/// Lexicographically least element of each coset, ascending.
std::vector<Element> cosets(const AbelianGroup& group, const Subgroup& h);

/// All elements of order exactly two, ascending.
std::vector<Element> involutions(const AbelianGroup& group);

/// Every subgroup of the group, ordered by (order, element list).
std::vector<Subgroup> subgroup_lattice(const AbelianGroup& group);

/// One presentation per isomorphism class: primes ascending, and for each
/// prime the exponent partitions from coarsest to finest, parts descending.
std::vector<AbelianGroup> enumerate_abelian_groups(std::int64_t order);

// Number theory helpers shared by the constructions.
bool is_prime(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
/// Partitions of n with parts in non-increasing order, coarsest first.
std::vector<std::vector<int>> integer_partitions(int n);

}  // namespace onefact
