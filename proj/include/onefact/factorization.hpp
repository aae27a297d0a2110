#pragma once

#include <stdexcept>
#include <vector>

#include "onefact/cayley_model.hpp"
#include "onefact/kernels.hpp"
#include "onefact/starter.hpp"

namespace onefact {

/// Ordered list of perfect matchings over mixed-radix vertex indices.
/// Factors are sorted edge lists, and the list is sorted lexicographically.
struct OneFactorization {
  CayleyModel model;
  std::vector<Factor> factors;
};

/// Thrown when an operation needs a valid starter and gets something else.
class InvalidStarter : public std::invalid_argument {
 public:
  InvalidStarter(const std::string& what, VerificationReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// Base factor of one set: the union of its translates by the companion subgroup.
Factor base_factor(const CayleyModel& model, const StarterSet& set);

/// Develops a verified starter into the full G-invariant 1-factorization.
/// Throws InvalidStarter if verification fails.
OneFactorization develop_factorization(const Starter& starter, Execution exec = Execution::parallel);

inline constexpr const char* kPerfectMatchings = "perfect_matchings";
inline constexpr const char* kEdgePartition = "edge_partition";
inline constexpr const char* kFactorCount = "factor_count";

VerificationReport verify_factorization(const CayleyModel& model, const OneFactorization& f);

/// True iff every translate F + g of every factor is again a factor.
bool check_invariance(const CayleyModel& model, const OneFactorization& f, Execution exec = Execution::parallel);

}  // namespace onefact
