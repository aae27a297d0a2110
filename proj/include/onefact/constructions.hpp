#pragma once

// Explicit starter constructions, the parity non-existence certificate and
// the existence classification table.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "onefact/starter.hpp"

namespace onefact {

class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what, std::optional<VerificationReport> report = std::nullopt)
      : std::runtime_error(what), report_(std::move(report)) {}
  const std::optional<VerificationReport>& report() const { return report_; }

 private:
  std::optional<VerificationReport> report_;
};

/// Lifts a starter for K_{m x n} over a cyclic group G to a starter for
/// K_{m x 2n} over G x Z_2. Each set S yields two sets, {[(a,0),(b,0)]} and
/// {[(a,0),(b,1)]}, both with companion subgroup H_S x Z_2.
Starter double_starter(const Starter& starter);

struct PrimePowerParams {
  std::int64_t p = 0;
  int v = 0;
  std::int64_t t = 0;        // (p - 1) / 4
  std::int64_t t_prime = 0;  // (p^(v-1) - 1) / 4

  /// Throws std::invalid_argument unless p is a prime = 1 (mod 4) and v >= 2.
  static PrimePowerParams make(std::int64_t p, int v);
  std::int64_t p_pow() const;  // p^(v-1)
};

/// Partial starter over Z_{p^(v-1)} x Z_p x Z_2 with H = <(0,0,1)>: the special
/// set, the 2t' middle sets and the final set. Every Omega element with last
/// coordinate 0 is covered exactly once; this is checked, and the alternative
/// candidates are tried in a fixed order until it holds. The choices made are
/// recorded in the provenance. Throws ConstructionError if no candidate works.
Starter build_prime_power_starter(std::int64_t p, int v);

/// The index-2 subgroup {last coordinate = 0} of Z_{p^(v-1)} x Z_p x Z_2.
Subgroup prime_power_index2_subgroup(const AbelianGroup& group);

/// Closes a partial starter whose uncovered differences all avoid the index-2
/// subgroup `a`: each uncovered pair {w, -w} gets the singleton set {[0, w]}
/// with companion `a`, each uncovered involution w gets {[0, w]} with
/// companion G. The result is verified before it is returned.
Starter complete_via_index2(const Starter& partial, const Subgroup& a);

/// build_prime_power_starter followed by complete_via_index2.
Starter prime_power_starter(std::int64_t p, int v);

struct NonexistenceCertificate {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t type_zero_count = 0;  // d(m - 1)
  std::int64_t residue_mod_4 = 0;
  // The counting argument, materialized.
  std::int64_t omega_size = 0;             // 2d(m - 1)
  std::int64_t involutions_in_omega = 0;   // always 0: the unique involution lies in H
  bool all_edges_long = true;
  std::int64_t per_set_type_zero_mod_4 = 0;  // each set covers 4r type-zero elements
};

/// Certificate for m = 3 (mod 4), n = 2d with d odd; nullopt otherwise.
std::optional<NonexistenceCertificate> parity_nonexistence(std::int64_t m, std::int64_t n);

enum class Existence { exists, not_exists, unknown };

struct ExistenceVerdict {
  Existence status = Existence::unknown;
  std::string source;       // rule id, empty for unknown
  std::string explanation;  // human-readable statement of the rule
};

ExistenceVerdict classify_existence(std::int64_t m, std::int64_t n);

std::string to_string(Existence e);

}  // namespace onefact
