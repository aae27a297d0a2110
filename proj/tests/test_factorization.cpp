#include <doctest.h>

#include <set>

#include "onefact/constructions.hpp"
#include "onefact/factorization.hpp"
#include "onefact/kernels.hpp"
#include "onefact/search.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace onefact;
using fixtures::E;
using fixtures::G;
using fixtures::gen;

namespace {

std::set<std::set<std::pair<std::int64_t, std::int64_t>>> as_sets(const OneFactorization& f) {
  std::set<std::set<std::pair<std::int64_t, std::int64_t>>> out;
  for (const Factor& x : f.factors) {
    std::set<std::pair<std::int64_t, std::int64_t>> s;
    for (const IndexEdge& e : x) s.insert({e.u, e.v});
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("the 4-cycle develops into two matchings") {
  const Starter s = fixtures::four_cycle_starter();
  const OneFactorization f = develop_factorization(s);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == Factor{{0, 1}, {2, 3}});
  CHECK(f.factors[1] == Factor{{0, 3}, {1, 2}});
  CHECK(verify_factorization(s.model, f).passed);
  CHECK(check_invariance(s.model, f));
  CHECK(as_sets(f) == oracle::develop(s));
}

TEST_CASE("development refuses invalid starters") {
  Starter s = fixtures::four_cycle_starter();
  s.sets[0].subgroup = gen(s.model.group(), {});
  CHECK_THROWS_AS(develop_factorization(s), InvalidStarter);
}

TEST_CASE("factorization validator") {
  const Starter s = fixtures::four_cycle_starter();
  OneFactorization f = develop_factorization(s);
  // Move [2,3] into the other factor.
  f.factors[0] = Factor{{0, 1}};
  f.factors[1] = Factor{{0, 3}, {1, 2}, {2, 3}};
  const VerificationReport r = verify_factorization(s.model, f);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.verdict(kPerfectMatchings).holds);

  OneFactorization dup = develop_factorization(s);
  dup.factors[1] = dup.factors[0];
  const VerificationReport rd = verify_factorization(s.model, dup);
  CHECK_FALSE(rd.verdict(kEdgePartition).holds);

  OneFactorization inside = develop_factorization(s);
  inside.factors[0] = Factor{{0, 2}, {1, 3}};
  CHECK_FALSE(verify_factorization(s.model, inside).verdict(kPerfectMatchings).holds);

  OneFactorization short_count = develop_factorization(s);
  short_count.factors.pop_back();
  const VerificationReport rc = verify_factorization(s.model, short_count);
  CHECK_FALSE(rc.verdict(kFactorCount).holds);
  CHECK_FALSE(rc.verdict(kEdgePartition).holds);
}

TEST_CASE("invariance depends only on the set of factors") {
  const Starter s = fixtures::four_cycle_starter();
  OneFactorization f = develop_factorization(s);
  std::swap(f.factors[0], f.factors[1]);
  std::swap(f.factors[0][0].u, f.factors[0][0].v);
  CHECK(check_invariance(s.model, f, Execution::serial));
  CHECK(check_invariance(s.model, f, Execution::parallel));
  OneFactorization bad = f;
  bad.factors[0][0].u = 99;
  CHECK_FALSE(check_invariance(s.model, bad));
}

TEST_CASE("p = 5 development matches the oracle and the degree count") {
  const Starter s = prime_power_starter(5, 2);
  const OneFactorization f = develop_factorization(s, Execution::serial);
  CHECK(f.factors.size() == 48);
  std::size_t total = 0;
  for (const Factor& x : f.factors) {
    CHECK(x.size() == 25);
    total += x.size();
  }
  CHECK(total == 1200);
  CHECK(verify_factorization(s.model, f).passed);
  CHECK(check_invariance(s.model, f));
  CHECK(as_sets(f) == oracle::develop(s));
}

TEST_CASE("serial and parallel kernels agree") {
  for (const Starter& s : {prime_power_starter(5, 2), prime_power_starter(13, 2), fixtures::four_cycle_starter()}) {
    const OneFactorization a = develop_factorization(s, Execution::serial);
    const OneFactorization b = develop_factorization(s, Execution::parallel);
    CHECK(a.factors == b.factors);
    CHECK(check_invariance(s.model, a, Execution::serial) == check_invariance(s.model, a, Execution::parallel));
  }
}

TEST_CASE("kernels on hand-made input") {
  const auto z4 = G({4});
  const IndexedGroup ig(z4);
  CHECK(translate_factor(ig, Factor{{0, 1}, {2, 3}}, 1) == Factor{{0, 3}, {1, 2}});
  const std::vector<Factor> base{Factor{{0, 1}, {2, 3}}};
  const std::vector<std::vector<Index>> everything{all_shifts(ig)};
  const auto expanded = expand_translates_serial(ig, base, everything);
  CHECK(expanded == std::vector<Factor>{Factor{{0, 1}, {2, 3}}, Factor{{0, 3}, {1, 2}}});
  CHECK(expand_translates_parallel(ig, base, everything) == expanded);
  // {0, 1} are coset representatives of {0, 2}, which fixes the base factor.
  const std::vector<std::vector<Index>> reps{{0, 1}};
  CHECK(expand_translates_serial(ig, base, reps) == expanded);
  const std::vector<Index> gen1{1};
  CHECK(translation_closed_serial(ig, expanded, gen1));
  CHECK_FALSE(translation_closed_serial(ig, base, gen1));
  CHECK_FALSE(translation_closed_parallel(ig, base, gen1));
  // Shifting by 2 fixes the base factor, but 2 does not generate Z_4.
  const std::vector<Index> gen2{2};
  CHECK(translation_closed_serial(ig, base, gen2));
}

TEST_CASE("search witnesses develop the same way the oracle does") {
  for (std::int64_t order = 4; order <= 12; order += 2) {
    for (const AbelianGroup& g : enumerate_abelian_groups(order)) {
      for (const Subgroup& h : subgroup_lattice(g)) {
        if (h.order() < 2 || h.order() == g.order()) continue;
        const SearchOutcome o = search_starter(g, h);
        if (o.status != SearchStatus::found) continue;
        const Starter& s = *o.witness;
        CHECK(oracle::starter_defect(s).empty());
        const OneFactorization f = develop_factorization(s);
        CHECK(verify_factorization(s.model, f).passed);
        CHECK(check_invariance(s.model, f));
        CHECK(as_sets(f) == oracle::develop(s));
      }
    }
  }
}
