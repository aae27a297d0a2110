#pragma once

// Starters: families of edge sets with companion subgroups whose
// differences cover Omega exactly once.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onefact/abelian_group.hpp"
#include "onefact/cayley_model.hpp"

namespace onefact {

struct StarterSet {
  std::vector<Edge> edges;
  Subgroup subgroup;
};

/// Where a starter came from. Serialized alongside the starter.
struct Provenance {
  std::string construction;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::vector<std::string> typo_resolutions;
};

struct Starter {
  CayleyModel model;
  std::vector<StarterSet> sets;
  std::optional<Provenance> provenance;
};

struct Verdict {
  std::string name;
  bool holds = true;
  std::vector<std::string> violations;
};

struct VerificationReport {
  bool passed = true;
  std::vector<Verdict> verdicts;

  /// Throws std::out_of_range for an unknown name.
  const Verdict& verdict(const std::string& name) const;
};

// Verdict names used by verify_starter.
inline constexpr const char* kDifferenceCover = "difference_cover";
inline constexpr const char* kCosetTransversal = "coset_transversal";
inline constexpr const char* kShortEdgeSubgroup = "short_edge_subgroup";

/// Checks all three starter conditions and lists every violation.
/// Illegal edges are reported under the difference-cover verdict.
VerificationReport verify_starter(const Starter& starter);

/// Checks only the per-set conditions (transversal, short edges) and
/// that the differences are free of repetitions; coverage is not required.
VerificationReport verify_partial_starter(const Starter& partial);

std::string to_string(const Element& e);
std::string to_string(const Edge& e);

}  // namespace onefact
