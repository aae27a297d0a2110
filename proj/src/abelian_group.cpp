#include "onefact/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace onefact {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw std::invalid_argument("abelian group needs at least one cyclic factor");
  for (std::int64_t c : orders_) {
    if (c < 2) throw std::invalid_argument("cyclic factor order must be >= 2, got " + std::to_string(c));
    if (order_ > (std::int64_t{1} << 40) / c) throw std::invalid_argument("group order too large");
    order_ *= c;
  }
}

AbelianGroup make_group(std::vector<std::int64_t> cyclic_orders) {
  return AbelianGroup(std::move(cyclic_orders));
}

void AbelianGroup::check_arity(const Element& a) const {
  if (a.coords.size() != orders_.size()) {
    throw std::invalid_argument("element arity " + std::to_string(a.coords.size()) +
                                " does not match group rank " + std::to_string(orders_.size()));
  }
}

Element AbelianGroup::identity() const { return Element{std::vector<std::int64_t>(orders_.size(), 0)}; }

Element AbelianGroup::make_element(std::vector<std::int64_t> coords) const {
  Element e{std::move(coords)};
  check_arity(e);
  for (std::size_t i = 0; i < orders_.size(); ++i) e.coords[i] = mod(e.coords[i], orders_[i]);
  return e;
}

bool AbelianGroup::contains(const Element& a) const {
  if (a.coords.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (a.coords[i] < 0 || a.coords[i] >= orders_[i]) return false;
  }
  return true;
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  check_arity(a);
  check_arity(b);
  Element r{std::vector<std::int64_t>(orders_.size())};
  for (std::size_t i = 0; i < orders_.size(); ++i) r.coords[i] = mod(a.coords[i] + b.coords[i], orders_[i]);
  return r;
}

Element AbelianGroup::neg(const Element& a) const {
  check_arity(a);
  Element r{std::vector<std::int64_t>(orders_.size())};
  for (std::size_t i = 0; i < orders_.size(); ++i) r.coords[i] = mod(-a.coords[i], orders_[i]);
  return r;
}

Element AbelianGroup::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element AbelianGroup::scale(const Element& a, std::int64_t k) const {
  check_arity(a);
  Element r{std::vector<std::int64_t>(orders_.size())};
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r.coords[i] = mod(mod(a.coords[i], orders_[i]) * mod(k, orders_[i]), orders_[i]);
  }
  return r;
}

std::int64_t AbelianGroup::element_order(const Element& a) const {
  check_arity(a);
  // lcm over factors of c / gcd(c, a_i)
  std::int64_t result = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::int64_t c = orders_[i];
    const std::int64_t k = c / std::gcd(c, mod(a.coords[i], c));
    result = std::lcm(result, k);
  }
  return result;
}

std::int64_t AbelianGroup::index_of(const Element& a) const {
  if (!contains(a)) throw std::invalid_argument("element does not belong to the group");
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + a.coords[i];
  return idx;
}

Element AbelianGroup::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
  Element e{std::vector<std::int64_t>(orders_.size())};
  for (std::size_t i = orders_.size(); i-- > 0;) {
    e.coords[i] = index % orders_[i];
    index /= orders_[i];
  }
  return e;
}

std::vector<Element> AbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<Element> AbelianGroup::standard_generators() const {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    Element e = identity();
    e.coords[i] = 1;
    gens.push_back(std::move(e));
  }
  return gens;
}

std::vector<std::int64_t> AbelianGroup::isomorphism_key() const {
  std::vector<std::int64_t> key;
  for (std::int64_t c : orders_) {
    for (auto [p, e] : factorize(c)) {
      std::int64_t q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      key.push_back(q);
    }
  }
  std::sort(key.begin(), key.end());
  return key;
}

Subgroup::Subgroup(std::vector<Element> generators, std::vector<Element> sorted_elements)
    : generators_(std::move(generators)), elements_(std::move(sorted_elements)) {}

bool Subgroup::contains(const Element& a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

Subgroup subgroup_from_generators(const AbelianGroup& group, std::span<const Element> gens) {
  for (const Element& g : gens) {
    if (!group.contains(g)) throw std::invalid_argument("generator does not belong to the group");
  }
  // Breadth-first closure on element indices.
  std::vector<char> seen(static_cast<std::size_t>(group.order()), 0);
  std::vector<Element> frontier{group.identity()};
  seen[0] = 1;
  std::vector<Element> all = frontier;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& x : frontier) {
      for (const Element& g : gens) {
        Element y = group.add(x, g);
        auto idx = static_cast<std::size_t>(group.index_of(y));
        if (!seen[idx]) {
          seen[idx] = 1;
          all.push_back(y);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return Subgroup(std::vector<Element>(gens.begin(), gens.end()), std::move(all));
}

Subgroup whole_group(const AbelianGroup& group) {
  return Subgroup(group.standard_generators(), group.elements());
}

std::vector<Element> cosets(const AbelianGroup& group, const Subgroup& h) {
  std::vector<char> assigned(static_cast<std::size_t>(group.order()), 0);
  std::vector<Element> reps;
  for (std::int64_t i = 0; i < group.order(); ++i) {
    if (assigned[static_cast<std::size_t>(i)]) continue;
    Element x = group.element_at(i);
    for (const Element& y : h.elements()) assigned[static_cast<std::size_t>(group.index_of(group.add(x, y)))] = 1;
    reps.push_back(std::move(x));
  }
  return reps;
}

std::vector<Element> involutions(const AbelianGroup& group) {
  std::vector<Element> out;
  for (Element& x : group.elements()) {
    if (group.element_order(x) == 2) out.push_back(std::move(x));
  }
  return out;
}

std::vector<Subgroup> subgroup_lattice(const AbelianGroup& group) {
  std::vector<Subgroup> found{subgroup_from_generators(group, std::span<const Element>{})};
  std::set<std::vector<Element>> known{found.front().elements()};
  const std::vector<Element> all = group.elements();
  std::vector<Subgroup> level = found;
  while (!level.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& k : level) {
      for (const Element& g : all) {
        if (k.contains(g)) continue;
        std::vector<Element> gens = k.generators();
        gens.push_back(g);
        Subgroup bigger = subgroup_from_generators(group, gens);
        if (known.insert(bigger.elements()).second) next.push_back(std::move(bigger));
      }
    }
    found.insert(found.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<AbelianGroup> enumerate_abelian_groups(std::int64_t order) {
  if (order < 2) throw std::invalid_argument("group order must be >= 2");
  const auto primes = factorize(order);
  std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
  for (auto [p, e] : primes) {
    std::vector<std::vector<std::int64_t>> options;
    for (const auto& parts : integer_partitions(e)) {
      std::vector<std::int64_t> factors;
      for (int part : parts) {
        std::int64_t q = 1;
        for (int i = 0; i < part; ++i) q *= p;
        factors.push_back(q);
      }
      options.push_back(std::move(factors));
    }
    per_prime.push_back(std::move(options));
  }
  // Odometer over the per-prime choices, first prime most significant.
  std::vector<AbelianGroup> out;
  std::vector<std::size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<std::int64_t> orders;
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& f = per_prime[i][pick[i]];
      orders.insert(orders.end(), f.begin(), f.end());
    }
    out.emplace_back(std::move(orders));
    std::size_t i = per_prime.size();
    while (i > 0) {
      --i;
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (per_prime.empty()) return out;
  }
}

}  // namespace onefact
