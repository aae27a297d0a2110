#include "onefact/factorization.hpp"

#include <algorithm>
#include <string>

namespace onefact {

Factor base_factor(const CayleyModel& model, const StarterSet& set) {
  const IndexedGroup& ig = model.indexed();
  Factor f;
  for (const Element& h : set.subgroup.elements()) {
    const Index hi = model.vertex_index(h);
    for (const Edge& e : set.edges) {
      const Index a = ig.add(model.vertex_index(e.u), hi);
      const Index b = ig.add(model.vertex_index(e.v), hi);
      f.push_back(a < b ? IndexEdge{a, b} : IndexEdge{b, a});
    }
  }
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

OneFactorization develop_factorization(const Starter& starter, Execution exec) {
  VerificationReport report = verify_starter(starter);
  if (!report.passed) throw InvalidStarter("refusing to develop an invalid starter", std::move(report));

  // F_i is fixed by its companion subgroup, so coset representatives of it
  // give every distinct translate exactly once.
  std::vector<Factor> base;
  std::vector<std::vector<Index>> shifts;
  base.reserve(starter.sets.size());
  for (const StarterSet& set : starter.sets) {
    base.push_back(base_factor(starter.model, set));
    std::vector<Index> reps;
    for (const Element& r : cosets(starter.model.group(), set.subgroup)) reps.push_back(starter.model.vertex_index(r));
    shifts.push_back(std::move(reps));
  }

  const IndexedGroup& ig = starter.model.indexed();
  OneFactorization f{starter.model, {}};
  f.factors = exec == Execution::parallel ? expand_translates_parallel(ig, base, shifts)
                                          : expand_translates_serial(ig, base, shifts);
  return f;
}

VerificationReport verify_factorization(const CayleyModel& model, const OneFactorization& f) {
  Verdict matchings{kPerfectMatchings, true, {}};
  Verdict partition{kEdgePartition, true, {}};
  Verdict count{kFactorCount, true, {}};

  const Index order = model.indexed().order();
  const auto& omega = model.omega_mask();
  std::vector<IndexEdge> all;
  all.reserve(static_cast<std::size_t>(model.edge_count()));

  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const std::string where = "factor " + std::to_string(i) + ": ";
    std::vector<int> degree(order, 0);
    for (const IndexEdge& e : f.factors[i]) {
      if (e.u >= order || e.v >= order || e.u == e.v) {
        matchings.holds = false;
        matchings.violations.push_back(where + "malformed edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        continue;
      }
      const IndexEdge c = e.u < e.v ? e : IndexEdge{e.v, e.u};
      if (!omega[model.indexed().sub(c.v, c.u)]) {
        matchings.holds = false;
        matchings.violations.push_back(where + "edge " + std::to_string(c.u) + "-" + std::to_string(c.v) +
                                       " joins two vertices of the same part");
        continue;
      }
      ++degree[c.u];
      ++degree[c.v];
      all.push_back(c);
    }
    for (Index v = 0; v < order; ++v) {
      if (degree[v] != 1) {
        matchings.holds = false;
        matchings.violations.push_back(where + "vertex " + std::to_string(v) + " has degree " +
                                       std::to_string(degree[v]));
      }
    }
  }

  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i] == all[i - 1] && (i == 1 || all[i - 2] != all[i])) {
      partition.holds = false;
      partition.violations.push_back("edge " + std::to_string(all[i].u) + "-" + std::to_string(all[i].v) +
                                     " appears in more than one factor");
    }
  }
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (static_cast<std::int64_t>(all.size()) != model.edge_count()) {
    partition.holds = false;
    partition.violations.push_back("factors cover " + std::to_string(all.size()) + " of " +
                                   std::to_string(model.edge_count()) + " edges");
  }

  if (static_cast<std::int64_t>(f.factors.size()) != model.degree()) {
    count.holds = false;
    count.violations.push_back("expected " + std::to_string(model.degree()) + " factors, found " +
                               std::to_string(f.factors.size()));
  }

  VerificationReport r;
  r.passed = matchings.holds && partition.holds && count.holds;
  r.verdicts = {std::move(matchings), std::move(partition), std::move(count)};
  return r;
}

bool check_invariance(const CayleyModel& model, const OneFactorization& f, Execution exec) {
  std::vector<Factor> factors = f.factors;
  const Index order = model.indexed().order();
  for (Factor& x : factors) {
    for (IndexEdge& e : x) {
      if (e.u >= order || e.v >= order) return false;
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(x.begin(), x.end());
  }
  std::sort(factors.begin(), factors.end());
  std::vector<Index> gens;
  for (const Element& g : model.group().standard_generators()) gens.push_back(model.vertex_index(g));
  const IndexedGroup& ig = model.indexed();
  return exec == Execution::parallel ? translation_closed_parallel(ig, factors, gens)
                                     : translation_closed_serial(ig, factors, gens);
}

}  // namespace onefact
