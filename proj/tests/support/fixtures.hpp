#pragma once

#include <initializer_list>
#include <vector>

#include "onefact/abelian_group.hpp"
#include "onefact/cayley_model.hpp"
#include "onefact/starter.hpp"

namespace fixtures {

inline onefact::Element E(std::initializer_list<std::int64_t> c) { return onefact::Element{std::vector<std::int64_t>(c)}; }

inline onefact::AbelianGroup G(std::initializer_list<std::int64_t> orders) {
  return onefact::AbelianGroup(std::vector<std::int64_t>(orders));
}

inline onefact::Subgroup gen(const onefact::AbelianGroup& g, std::initializer_list<onefact::Element> gens) {
  const std::vector<onefact::Element> v(gens);
  return onefact::subgroup_from_generators(g, v);
}

// K_{2x2} over Z_4: S = {[0,1]} with companion {0,2}.
inline onefact::Starter four_cycle_starter() {
  const auto g = G({4});
  const auto h = gen(g, {E({2})});
  onefact::CayleyModel model(g, h);
  onefact::StarterSet set{{model.make_edge(E({0}), E({1}))}, h};
  return onefact::Starter{model, {set}, std::nullopt};
}

}  // namespace fixtures
