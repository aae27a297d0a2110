#include "oracles.hpp"

#include <map>

namespace oracle {

std::int64_t Group::order() const {
  std::int64_t n = 1;
  for (std::int64_t o : orders) n *= o;
  return n;
}

std::vector<Tuple> Group::all() const {
  std::vector<Tuple> out{Tuple{}};
  for (std::int64_t o : orders) {
    std::vector<Tuple> next;
    for (const Tuple& t : out) {
      for (std::int64_t x = 0; x < o; ++x) {
        Tuple u = t;
        u.push_back(x);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

Tuple Group::add(const Tuple& a, const Tuple& b) const {
  Tuple c(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) c[i] = (a[i] + b[i]) % orders[i];
  return c;
}

Tuple Group::neg(const Tuple& a) const {
  Tuple c(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) c[i] = (orders[i] - a[i]) % orders[i];
  return c;
}

bool Group::is_zero(const Tuple& a) const {
  for (std::int64_t x : a)
    if (x != 0) return false;
  return true;
}

std::int64_t Group::index(const Tuple& a) const {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) r = r * orders[i] + a[i];
  return r;
}

std::set<Tuple> Group::closure(const std::vector<Tuple>& gens) const {
  std::set<Tuple> s{Tuple(orders.size(), 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Tuple> cur(s.begin(), s.end());
    for (const Tuple& x : cur)
      for (const Tuple& g : gens)
        if (s.insert(add(x, g)).second) grew = true;
  }
  return s;
}

namespace {

Group group_of(const onefact::Starter& s) { return Group{s.model.group().cyclic_orders()}; }

std::vector<Tuple> gens_of(const onefact::Subgroup& h) {
  std::vector<Tuple> out;
  for (const auto& e : h.generators()) out.push_back(e.coords);
  return out;
}

}  // namespace

std::string starter_defect(const onefact::Starter& s) {
  const Group g = group_of(s);
  const std::set<Tuple> h = g.closure(gens_of(s.model.H()));

  std::map<Tuple, int> seen;
  for (const auto& set : s.sets) {
    const std::set<Tuple> k = g.closure(gens_of(set.subgroup));
    std::vector<Tuple> phi;
    for (const auto& e : set.edges) {
      const Tuple w = g.sub(e.v.coords, e.u.coords);
      if (g.is_zero(w) || h.count(w)) return "edge inside a part";
      const bool involution = g.is_zero(g.add(w, w));
      ++seen[w];
      if (!involution) ++seen[g.neg(w)];
      phi.push_back(e.u.coords);
      if (involution) {
        if (!k.count(w)) return "short edge outside its companion subgroup";
      } else {
        phi.push_back(e.v.coords);
      }
    }
    if (static_cast<std::int64_t>(phi.size() * k.size()) != g.order()) return "phi has the wrong size";
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = i + 1; j < phi.size(); ++j)
        if (k.count(g.sub(phi[i], phi[j]))) return "phi hits a coset twice";
  }
  for (const Tuple& x : g.all()) {
    const int want = h.count(x) ? 0 : 1;
    const auto it = seen.find(x);
    if ((it == seen.end() ? 0 : it->second) != want) return "differences do not cover omega exactly once";
  }
  return {};
}

std::set<std::set<std::pair<std::int64_t, std::int64_t>>> develop(const onefact::Starter& s) {
  const Group g = group_of(s);
  std::set<std::set<std::pair<std::int64_t, std::int64_t>>> out;
  for (const auto& set : s.sets) {
    const std::set<Tuple> k = g.closure(gens_of(set.subgroup));
    for (const Tuple& x : g.all()) {
      std::set<std::pair<std::int64_t, std::int64_t>> f;
      for (const Tuple& y : k) {
        const Tuple shift = g.add(x, y);
        for (const auto& e : set.edges) {
          const std::int64_t a = g.index(g.add(e.u.coords, shift));
          const std::int64_t b = g.index(g.add(e.v.coords, shift));
          f.insert({std::min(a, b), std::max(a, b)});
        }
      }
      out.insert(f);
    }
  }
  return out;
}

std::vector<std::int64_t> partition_numbers(int k) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int total = part; total <= k; ++total) p[total] += p[total - part];
  return p;
}

std::int64_t abelian_class_count(std::int64_t n) {
  const std::vector<std::int64_t> p = partition_numbers(64);
  std::int64_t count = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    count *= p[e];
  }
  return count;
}

}  // namespace oracle
