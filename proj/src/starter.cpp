#include "onefact/starter.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace onefact {

std::string to_string(const Element& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.coords.size(); ++i) os << (i ? "," : "") << e.coords[i];
  os << ')';
  return os.str();
}

std::string to_string(const Edge& e) { return "[" + to_string(e.u) + "," + to_string(e.v) + "]"; }

const Verdict& VerificationReport::verdict(const std::string& name) const {
  for (const Verdict& v : verdicts) {
    if (v.name == name) return v;
  }
  throw std::out_of_range("no verdict named " + name);
}

namespace {

struct CosetTable {
  std::vector<Index> ids;
  Index count = 0;
  bool valid = true;
};

class CosetCache {
 public:
  explicit CosetCache(const CayleyModel& model) : model_(model) {}

  const CosetTable& get(const Subgroup& h) {
    auto it = cache_.find(h.elements());
    if (it != cache_.end()) return it->second;
    CosetTable t;
    const AbelianGroup& g = model_.group();
    for (const Element& a : h.elements()) t.valid = t.valid && g.contains(a);
    if (t.valid && !h.elements().empty() && h.elements().front() == g.identity() && g.order() % h.order() == 0) {
      for (const Element& a : h.elements()) {
        for (const Element& b : h.elements()) t.valid = t.valid && h.contains(g.add(a, b));
      }
    } else {
      t.valid = false;
    }
    if (t.valid) {
      const IndexedGroup& ig = model_.indexed();
      t.ids = ig.coset_ids(ig.mask(g, h), t.count);
    }
    return cache_.emplace(h.elements(), std::move(t)).first->second;
  }

 private:
  const CayleyModel& model_;
  std::map<std::vector<Element>, CosetTable> cache_;
};

void check_per_set(const Starter& s, Verdict& transversal, Verdict& short_edges) {
  const AbelianGroup& g = s.model.group();
  CosetCache cache(s.model);
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    const StarterSet& set = s.sets[i];
    const std::string where = "set " + std::to_string(i) + ": ";
    const CosetTable& table = cache.get(set.subgroup);
    if (!table.valid) {
      transversal.holds = false;
      transversal.violations.push_back(where + "companion is not a subgroup of the group");
      continue;
    }
    std::vector<int> hits(table.count, 0);
    for (const Edge& e : set.edges) {
      if (!g.contains(e.u) || !g.contains(e.v)) continue;
      const bool is_short = g.element_order(g.sub(e.v, e.u)) == 2;
      if (is_short && !set.subgroup.contains(g.sub(e.v, e.u))) {
        short_edges.holds = false;
        short_edges.violations.push_back(where + "involution " + to_string(g.sub(e.v, e.u)) + " of short edge " +
                                         to_string(e) + " is not in the companion subgroup");
      }
      ++hits[table.ids[s.model.vertex_index(e.u)]];
      if (!is_short) ++hits[table.ids[s.model.vertex_index(e.v)]];
    }
    for (Index c = 0; c < table.count; ++c) {
      if (hits[c] == 1) continue;
      transversal.holds = false;
      // Name the coset by its least element.
      Index rep = 0;
      while (table.ids[rep] != c) ++rep;
      const std::string coset = to_string(g.element_at(rep)) + "+H";
      if (hits[c] == 0) {
        transversal.violations.push_back(where + "coset " + coset + " has no representative");
      } else {
        transversal.violations.push_back(where + "coset " + coset + " has " + std::to_string(hits[c]) +
                                         " representatives");
      }
    }
  }
}

// Accumulates the difference multiset. Returns counts indexed by element.
std::vector<int> difference_counts(const Starter& s, Verdict& cover) {
  const AbelianGroup& g = s.model.group();
  std::vector<int> counts(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    for (const Edge& e : s.sets[i].edges) {
      if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v) {
        cover.holds = false;
        cover.violations.push_back("set " + std::to_string(i) + ": malformed edge " + to_string(e));
        continue;
      }
      if (!s.model.is_legal(e)) {
        cover.holds = false;
        cover.violations.push_back("set " + std::to_string(i) + ": illegal edge " + to_string(e) +
                                   ", difference " + to_string(g.sub(e.u, e.v)) + " lies in H");
        continue;
      }
      for (const Element& d : edge_difference(s.model, e)) ++counts[static_cast<std::size_t>(g.index_of(d))];
    }
  }
  return counts;
}

}  // namespace

VerificationReport verify_starter(const Starter& starter) {
  Verdict cover{kDifferenceCover, true, {}};
  Verdict transversal{kCosetTransversal, true, {}};
  Verdict short_edges{kShortEdgeSubgroup, true, {}};

  const std::vector<int> counts = difference_counts(starter, cover);
  const auto& mask = starter.model.omega_mask();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (!mask[i]) continue;
    const Element w = starter.model.group().element_at(static_cast<std::int64_t>(i));
    if (counts[i] == 0) {
      cover.holds = false;
      cover.violations.push_back("difference " + to_string(w) + " is not covered");
    } else if (counts[i] > 1) {
      cover.holds = false;
      cover.violations.push_back("difference " + to_string(w) + " is covered " + std::to_string(counts[i]) +
                                 " times");
    }
  }
  check_per_set(starter, transversal, short_edges);

  VerificationReport r;
  r.passed = cover.holds && transversal.holds && short_edges.holds;
  r.verdicts = {std::move(cover), std::move(transversal), std::move(short_edges)};
  return r;
}

VerificationReport verify_partial_starter(const Starter& partial) {
  Verdict cover{kDifferenceCover, true, {}};
  Verdict transversal{kCosetTransversal, true, {}};
  Verdict short_edges{kShortEdgeSubgroup, true, {}};

  const std::vector<int> counts = difference_counts(partial, cover);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 1) {
      cover.holds = false;
      cover.violations.push_back("difference " +
                                 to_string(partial.model.group().element_at(static_cast<std::int64_t>(i))) +
                                 " is covered " + std::to_string(counts[i]) + " times");
    }
  }
  check_per_set(partial, transversal, short_edges);

  VerificationReport r;
  r.passed = cover.holds && transversal.holds && short_edges.holds;
  r.verdicts = {std::move(cover), std::move(transversal), std::move(short_edges)};
  return r;
}

}  // namespace onefact
