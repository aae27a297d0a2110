// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Runtime limits are part of each criterion; a slow pass is a failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "onefact/brute_force.hpp"
#include "onefact/constructions.hpp"
#include "onefact/factorization.hpp"
#include "onefact/json_io.hpp"
#include "onefact/search.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

namespace {

using namespace onefact;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Byte artifacts from criteria 1-4, keyed by name, for the determinism check.
using Artifacts = std::map<std::string, std::string>;

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SearchOptions single_worker(SearchMode mode) {
  SearchOptions o;
  o.mode = mode;
  o.workers = 1;
  return o;
}

Subgroup cyclic_subgroup(const AbelianGroup& g, std::int64_t generator) {
  const std::vector<Element> gens{Element{{generator}}};
  return subgroup_from_generators(g, gens);
}

// Prime-power pipeline shared by criteria 1 and 2.
Outcome prime_power_pipeline(std::int64_t p, std::size_t factors, std::size_t edges, Artifacts& art) {
  Outcome o;
  const Starter partial = build_prime_power_starter(p, 2);
  const Starter s = complete_via_index2(partial, prime_power_index2_subgroup(partial.model.group()));
  require(o, s.model.group().cyclic_orders() == std::vector<std::int64_t>{p, p, 2}, "unexpected group");
  const VerificationReport r = verify_starter(s);
  for (const Verdict& v : r.verdicts) require(o, v.holds, "starter condition " + v.name + " fails");
  require(o, oracle::starter_defect(s).empty(), "reference checker rejects the starter");
  const OneFactorization f = develop_factorization(s, Execution::serial);
  require(o, f.factors.size() == factors, "factor count " + std::to_string(f.factors.size()));
  std::size_t total = 0;
  for (const Factor& x : f.factors) {
    require(o, x.size() == edges, "factor of size " + std::to_string(x.size()));
    total += x.size();
  }
  require(o, total == factors * edges, "edge total");
  require(o, static_cast<std::int64_t>(total) == s.model.edge_count(), "edge total vs model");
  require(o, verify_factorization(s.model, f).passed, "verify_factorization fails");
  require(o, check_invariance(s.model, f, Execution::serial), "invariance fails");
  const std::string tag = "p" + std::to_string(p);
  art[tag + ".starter"] = io::dump_pretty(io::starter_to_json(s));
  art[tag + ".factorization"] = io::dump_compact(io::factorization_to_json(f));
  if (o.pass) {
    o.detail = std::to_string(s.sets.size()) + " sets, " + std::to_string(f.factors.size()) + " factors x " +
               std::to_string(edges) + " edges = " + std::to_string(total);
  }
  return o;
}

Outcome criterion1(Artifacts& art) { return prime_power_pipeline(5, 48, 25, art); }
Outcome criterion2(Artifacts& art) { return prime_power_pipeline(13, 336, 169, art); }

Outcome doubling_case(const Starter& base, const std::vector<std::int64_t>& orders, std::int64_t m, std::int64_t n,
                      const std::string& tag, Artifacts& art) {
  Outcome o;
  const Starter d = double_starter(base);
  require(o, d.model.group().cyclic_orders() == orders, tag + ": unexpected group");
  require(o, d.model.m() == m && d.model.n() == n, tag + ": unexpected K_{m x n}");
  require(o, verify_starter(d).passed, tag + ": doubled starter fails verification");
  require(o, oracle::starter_defect(d).empty(), tag + ": reference checker rejects the doubled starter");
  const OneFactorization f = develop_factorization(d, Execution::serial);
  require(o, verify_factorization(d.model, f).passed, tag + ": factorization fails verification");
  require(o, static_cast<std::int64_t>(f.factors.size()) == d.model.degree(), tag + ": factor count");
  require(o, check_invariance(d.model, f, Execution::serial), tag + ": invariance fails");
  art[tag + ".starter"] = io::dump_pretty(io::starter_to_json(d));
  art[tag + ".factorization"] = io::dump_compact(io::factorization_to_json(f));
  return o;
}

Outcome criterion3(Artifacts& art) {
  Outcome o;
  const AbelianGroup z4({4});
  const CayleyModel c4(z4, cyclic_subgroup(z4, 2));
  const Starter four{c4, {StarterSet{{c4.make_edge(Element{{0}}, Element{{1}})}, cyclic_subgroup(z4, 2)}}, std::nullopt};
  const Outcome a = doubling_case(four, {4, 2}, 2, 4, "k2x4", art);
  require(o, a.pass, a.detail);

  const AbelianGroup z12({12});
  const SearchOutcome found = search_starter(z12, cyclic_subgroup(z12, 4), single_worker(SearchMode::first));
  require(o, found.status == SearchStatus::found, "no cyclic starter found for K_{4x3}");
  if (found.witness) {
    art["k4x3.starter"] = io::dump_pretty(io::starter_to_json(*found.witness));
    const Outcome b = doubling_case(*found.witness, {12, 2}, 4, 6, "k4x6", art);
    require(o, b.pass, b.detail);
  }
  if (o.pass) o.detail = "K_{2x4} over [4,2] and K_{4x6} over [12,2] verify and are invariant";
  return o;
}

Outcome certify_case(std::int64_t m, std::int64_t n, Artifacts& art, double& worst) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const CertificationResult c = certify_nonexistence(m, n, single_worker(SearchMode::exhaust));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  worst = std::max(worst, secs);
  const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  require(o, c.status == CertificationStatus::certified, tag + ": status " + to_string(c.status));
  require(o, c.certificate.has_value(), tag + ": no certificate");
  require(o, secs < 60.0, tag + ": took " + std::to_string(secs) + " s");
  if (c.certificate) {
    require(o, !c.certificate->groups_checked.empty(), tag + ": no pairs checked");
    for (const PairStatistics& ps : c.certificate->groups_checked)
      require(o, ps.status == SearchStatus::none_exists, tag + ": a pair is not none_exists");
    // Every (group class, subgroup of order n) pair must be covered.
    std::size_t expected = 0;
    for (const AbelianGroup& g : enumerate_abelian_groups(m * n))
      for (const Subgroup& h : subgroup_lattice(g)) expected += h.order() == n;
    require(o, c.certificate->groups_checked.size() == expected, tag + ": pairs missing");
  }
  art["certify" + tag] = io::dump_pretty(io::certification_to_json(c));
  return o;
}

Outcome criterion4(Artifacts& art) {
  Outcome o;
  double worst = 0;
  for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {5, 2}, {7, 2}}) {
    const Outcome c = certify_case(m, n, art, worst);
    require(o, c.pass, c.detail);
  }
  if (o.pass) {
    std::ostringstream ss;
    ss << "(3,2) (5,2) (7,2) certified, slowest " << worst << " s";
    o.detail = ss.str();
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  int checked = 0;
  for (std::int64_t m = 2; m <= 7; ++m) {
    for (std::int64_t n = 2; m * n <= 14; ++n) {
      const auto cert = parity_nonexistence(m, n);
      const bool applies = m % 4 == 3 && n % 2 == 0 && (n / 2) % 2 == 1;
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      require(o, cert.has_value() == applies, tag + ": certificate presence");
      if (!applies || !cert) continue;
      ++checked;
      const std::int64_t d = n / 2;
      require(o, cert->type_zero_count == d * (m - 1), tag + ": count != d(m-1)");
      require(o, cert->type_zero_count % 4 == 2 && cert->residue_mod_4 == 2, tag + ": count not 2 mod 4");
      const CertificationResult c = certify_nonexistence(m, n, single_worker(SearchMode::exhaust));
      require(o, c.status == CertificationStatus::certified, tag + ": search does not confirm emptiness");
    }
  }
  require(o, checked == 2, "expected (3,2) and (7,2), checked " + std::to_string(checked));
  if (o.pass) o.detail = "(3,2) and (7,2): d(m-1) = 2 and 6, both 2 mod 4, search confirms";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int pairs = 0, found = 0;
  for (std::int64_t order = 2; order <= 12; ++order) {
    for (const AbelianGroup& g : enumerate_abelian_groups(order)) {
      for (const Subgroup& h : subgroup_lattice(g)) {
        if (h.order() < 2 || h.order() == g.order()) continue;
        ++pairs;
        const CayleyModel model(g, h);
        const SearchOutcome s = search_starter(g, h, single_worker(SearchMode::exhaust));
        BruteForceOptions bo;
        bo.require_invariance = true;
        bo.stop_at_first = true;
        const BruteForceResult b = brute_force_factorizations(model, bo);
        std::ostringstream tag;
        tag << "[";
        for (std::size_t i = 0; i < g.rank(); ++i) tag << (i ? "," : "") << g.cyclic_orders()[i];
        tag << "] |H|=" << h.order();
        require(o, s.status != SearchStatus::budget_exceeded, tag.str() + ": search cut off");
        // Starter found => its development is a sharply transitive factorization.
        if (s.witness) {
          ++found;
          const OneFactorization f = develop_factorization(*s.witness, Execution::serial);
          require(o, verify_factorization(model, f).passed && check_invariance(model, f),
                  tag.str() + ": developed witness is not an invariant factorization");
          require(o, b.count > 0, tag.str() + ": starter exists but brute force finds no invariant factorization");
        }
        // Invariant factorization found => search must find a starter.
        if (b.count > 0) {
          require(o, check_invariance(model, b.witnesses.at(0)), tag.str() + ": brute-force witness not invariant");
          require(o, s.status == SearchStatus::found, tag.str() + ": invariant factorization exists but no starter");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs agree (" + std::to_string(found) + " with starters)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int cases = 0;
  for (const properties::Result& r : properties::algebra_suite(1000, 20240601)) {
    require(o, r.ok(), r.name + ": " + std::to_string(r.failures) + " failures, first: " + r.first_failure);
    if (r.name != "abelian classes vs partition products") require(o, r.cases >= 1000, r.name + ": too few cases");
    cases += r.cases;
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases across 6 properties, orders up to 128";
  return o;
}

Outcome criterion8(const Artifacts& first) {
  Outcome o;
  Artifacts second;
  criterion1(second);
  criterion2(second);
  criterion3(second);
  criterion4(second);
  require(o, first.size() == second.size() && !first.empty(), "artifact sets differ");
  for (const auto& [name, bytes] : first) {
    const auto it = second.find(name);
    require(o, it != second.end() && it->second == bytes, name + " differs between runs");
  }
  // The OpenMP kernels must reproduce the serial bytes as well.
  const Starter s = prime_power_starter(5, 2);
  const std::string par = io::dump_compact(io::factorization_to_json(develop_factorization(s, Execution::parallel)));
  require(o, par == first.at("p5.factorization"), "parallel development differs from serial");
  if (o.pass) {
    std::uint64_t h = 0;
    for (const auto& [name, bytes] : first) h ^= fnv1a(name + bytes);
    std::ostringstream ss;
    ss << first.size() << " artifacts identical across runs, digest " << std::hex << h;
    o.detail = ss.str();
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  Artifacts artifacts;
  const std::vector<Criterion> criteria{
      {1, "prime-power pipeline p=5 v=2", 5.0, [&] { return criterion1(artifacts); }},
      {2, "prime-power pipeline p=13 v=2", 60.0, [&] { return criterion2(artifacts); }},
      {3, "doubling K_{2x2} and K_{4x3}", 10.0, [&] { return criterion3(artifacts); }},
      {4, "non-existence certificates (3,2) (5,2) (7,2)", 180.0, [&] { return criterion4(artifacts); }},
      {5, "parity certificate agrees with search", 60.0, criterion5},
      {6, "starter search vs brute-force oracle, order <= 12", 120.0, criterion6},
      {7, "algebra property suite", 10.0, criterion7},
      {8, "byte-identical artifacts", 600.0, [&] { return criterion8(artifacts); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    failed += !o.pass;
    std::printf("%s criterion %d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
