#pragma once

// Data-parallel kernels over translates. Each kernel has a serial reference
// and an OpenMP version; both must produce identical results.

#include <span>
#include <vector>

#include "onefact/cayley_model.hpp"
#include "onefact/indexed_group.hpp"

namespace onefact {

using Factor = std::vector<IndexEdge>;

enum class Execution { serial, parallel };

/// Factor + g, canonical and sorted.
Factor translate_factor(const IndexedGroup& group, const Factor& f, Index g);

/// base[i] + g for every g in shifts[i], all distinct results sorted
/// lexicographically. Passing coset representatives of a subgroup fixing
/// base[i] yields each translate once.
std::vector<Factor> expand_translates_serial(const IndexedGroup& group, std::span<const Factor> base,
                                             std::span<const std::vector<Index>> shifts);
std::vector<Factor> expand_translates_parallel(const IndexedGroup& group, std::span<const Factor> base,
                                               std::span<const std::vector<Index>> shifts);

/// Every index 0..order-1, i.e. all of G as a shift list.
std::vector<Index> all_shifts(const IndexedGroup& group);

/// True iff F + g is again one of the factors for every factor F and every
/// g in `generators`. Closure under a generating set is closure under G.
/// `factors` must be sorted and each factor sorted.
bool translation_closed_serial(const IndexedGroup& group, std::span<const Factor> factors,
                               std::span<const Index> generators);
bool translation_closed_parallel(const IndexedGroup& group, std::span<const Factor> factors,
                                 std::span<const Index> generators);

}  // namespace onefact
