#pragma once

// Direct enumeration of 1-factorizations of tiny models, matching by
// matching. Independent of the starter machinery; used as an oracle.

#include <cstdint>
#include <vector>

#include "onefact/cayley_model.hpp"
#include "onefact/factorization.hpp"

namespace onefact {

inline constexpr std::int64_t kBruteForceMaxOrder = 12;

struct BruteForceOptions {
  bool require_invariance = false;
  bool stop_at_first = false;
  std::size_t max_witnesses = 1;
};

struct BruteForceResult {
  std::uint64_t count = 0;  // exact unless stop_at_first cut the run short
  bool stopped_early = false;
  std::vector<OneFactorization> witnesses;
};

/// Throws std::invalid_argument when the model has more than
/// kBruteForceMaxOrder vertices.
BruteForceResult brute_force_factorizations(const CayleyModel& model, const BruteForceOptions& options = {});

}  // namespace onefact
