#pragma once

// Exhaustive backtracking over starter space.
//
// The search covers Omega one difference class at a time, always the least
// uncovered element first. Each step either extends an open set with an edge
// realizing that difference, or opens a new set with a companion subgroup
// from the subgroup lattice. Every newly opened set is translated so that its
// first edge is [0, w]; the starter conditions are invariant under
// translating one set, so no starter is lost. Sets are opened in the order
// of their least difference, so set permutations are never revisited.

#include <cstdint>
#include <optional>
#include <vector>

#include "onefact/abelian_group.hpp"
#include "onefact/starter.hpp"

namespace onefact {

enum class SearchMode { first, exhaust, all };
enum class SearchStatus { found, none_exists, budget_exceeded };

struct SearchOptions {
  SearchMode mode = SearchMode::first;
  std::uint64_t budget = 0;  // node limit, 0 = unlimited
  int workers = 1;
  std::size_t max_witnesses = 64;  // stored witnesses in `all` mode
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<Starter> witness;
  std::vector<Starter> witnesses;  // `all` mode only
  std::uint64_t witness_count = 0;
  std::uint64_t nodes_explored = 0;
  std::vector<Subgroup> subgroups_tried;
};

SearchOutcome search_starter(const AbelianGroup& group, const Subgroup& h, const SearchOptions& options = {});

struct PairStatistics {
  AbelianGroup group;
  Subgroup subgroup;
  SearchStatus status;
  std::uint64_t nodes = 0;
};

struct NonexistenceSearchCertificate {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<PairStatistics> groups_checked;
};

enum class CertificationStatus { certified, witness_found, budget_exceeded };

struct CertificationResult {
  CertificationStatus status = CertificationStatus::certified;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::optional<NonexistenceSearchCertificate> certificate;
  std::optional<Starter> witness;
  std::vector<PairStatistics> pairs;  // every pair searched, in order
};

/// Runs an exhaustive search on every (abelian group of order mn, subgroup
/// of order n) pair. Rejects odd mn with std::invalid_argument. Stops at the
/// first witness or the first budget cutoff; never certifies after a cutoff.
CertificationResult certify_nonexistence(std::int64_t m, std::int64_t n, const SearchOptions& options = {});

std::string to_string(SearchStatus s);
std::string to_string(CertificationStatus s);

}  // namespace onefact
