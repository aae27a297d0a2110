#pragma once

// Randomized algebra checks shared by the unit tests and the acceptance run.
// Seeds are fixed so every run sees the same cases.

#include <cstdint>
#include <string>
#include <vector>

namespace properties {

struct Result {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

Result commutativity(int cases, std::uint64_t seed);
Result inverse_and_indexing(int cases, std::uint64_t seed);
Result coset_partition(int cases, std::uint64_t seed);
Result involution_count(int cases, std::uint64_t seed);
Result subgroup_idempotence(int cases, std::uint64_t seed);
// Orders 2..max_order; one case per order.
Result class_enumeration(int max_order);

std::vector<Result> algebra_suite(int cases, std::uint64_t seed);

}  // namespace properties
