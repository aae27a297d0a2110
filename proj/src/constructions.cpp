#include "onefact/constructions.hpp"

#include <algorithm>
#include <array>

namespace onefact {

// ---------------------------------------------------------------- doubling

Starter double_starter(const Starter& starter) {
  if (!starter.model.group().is_cyclic()) {
    throw std::invalid_argument("doubling needs a starter over a cyclic group");
  }
  VerificationReport report = verify_starter(starter);
  if (!report.passed) throw ConstructionError("input starter does not verify", std::move(report));

  const std::int64_t order = starter.model.group().order();
  const AbelianGroup doubled = make_group({order, 2});
  auto lift = [&](const Element& a, std::int64_t c) { return Element{{a.coords[0], c}}; };
  auto lift_subgroup = [&](const Subgroup& k) {
    std::vector<Element> gens;
    for (const Element& g : k.generators()) gens.push_back(lift(g, 0));
    gens.push_back(Element{{0, 1}});
    return subgroup_from_generators(doubled, gens);
  };

  CayleyModel model = build_model(doubled, lift_subgroup(starter.model.H()));
  Starter out{model, {}, Provenance{"doubling", {{"m", starter.model.m()}, {"n", starter.model.n()}}, {}}};
  for (const StarterSet& set : starter.sets) {
    const Subgroup companion = lift_subgroup(set.subgroup);
    StarterSet same{{}, companion};
    StarterSet mixed{{}, companion};
    for (const Edge& e : set.edges) {
      same.edges.push_back(model.make_edge(lift(e.u, 0), lift(e.v, 0)));
      mixed.edges.push_back(model.make_edge(lift(e.u, 0), lift(e.v, 1)));
    }
    out.sets.push_back(std::move(same));
    out.sets.push_back(std::move(mixed));
  }

  report = verify_starter(out);
  if (!report.passed) throw ConstructionError("doubled starter does not verify", std::move(report));
  return out;
}

// ------------------------------------------------------------ prime power

PrimePowerParams PrimePowerParams::make(std::int64_t p, int v) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p % 4 != 1) throw std::invalid_argument("p must be 1 mod 4");
  if (v < 2) throw std::invalid_argument("v must be at least 2");
  PrimePowerParams r{p, v, (p - 1) / 4, 0};
  std::int64_t q = 1;
  for (int i = 0; i < v - 1; ++i) {
    if (q > (std::int64_t{1} << 24) / p) throw std::invalid_argument("p^v too large");
    q *= p;
  }
  r.t_prime = (q - 1) / 4;
  return r;
}

std::int64_t PrimePowerParams::p_pow() const { return 4 * t_prime + 1; }

namespace {

// The two places where the stated construction is underdetermined or does not close.
struct Reading {
  std::int64_t cross_tail_third;  // the dropped third coordinate of (t'+i, 0, ?)
  std::int64_t closing_head_mid;  // middle coordinate of (0, ?, 1) in the closing edge
};

std::vector<std::string> describe(const Reading& r) {
  std::vector<std::string> out;
  out.push_back("families renumbered: special set, 2t' middle sets, final set");
  out.push_back("final set cross edges: vertex (t'+i,0,?) completed with third coordinate " +
                std::to_string(r.cross_tail_third));
  if (r.closing_head_mid == 2) {
    out.push_back("final set closing edge: vertex (0,2,1) kept");
  } else {
    out.push_back("final set closing edge: vertex (0,2,1) replaced by (0," + std::to_string(r.closing_head_mid) +
                  ",1)");
  }
  return out;
}

Starter assemble(const CayleyModel& model, const PrimePowerParams& pp, const Reading& reading) {
  const AbelianGroup& g = model.group();
  const std::int64_t p = pp.p, t = pp.t, tp = pp.t_prime;
  auto el = [&](std::int64_t a, std::int64_t b, std::int64_t c) { return g.make_element({a, b, c}); };
  auto edge = [&](const Element& a, const Element& b) { return model.make_edge_unchecked(a, b); };

  const Subgroup h1 = subgroup_from_generators(g, std::vector<Element>{el(1, 0, 0)});
  const Subgroup h_final = subgroup_from_generators(g, std::vector<Element>{el(0, 1, 0)});

  Starter s{model, {}, std::nullopt};

  StarterSet special{{}, h1};
  for (std::int64_t i = 1; i <= t; ++i) special.edges.push_back(edge(el(0, i, 0), el(0, p - i, 0)));
  for (std::int64_t i = 1; i <= t; ++i) special.edges.push_back(edge(el(0, i - 1, 1), el(0, p - i, 1)));
  for (std::int64_t i = 1; i <= t; ++i) special.edges.push_back(edge(el(0, t + i, 0), el(0, p - t - i, 1)));
  for (std::int64_t i = 1; i <= t - 1; ++i) special.edges.push_back(edge(el(0, t + i + 1, 1), el(0, p - t - i, 0)));
  special.edges.push_back(edge(el(0, 0, 0), el(2, t, 1)));
  special.edges.push_back(edge(el(0, 2 * t + 1, 0), el(2, t + 1, 1)));
  s.sets.push_back(std::move(special));

  for (std::int64_t k = 1; k <= 2 * tp; ++k) {
    StarterSet middle{{}, h1};
    for (std::int64_t i = 1; i <= t; ++i) middle.edges.push_back(edge(el(0, i, 0), el(2 * k - 1, p - i, 0)));
    for (std::int64_t i = 1; i <= t; ++i) middle.edges.push_back(edge(el(0, i - 1, 1), el(2 * k - 1, p - i, 1)));
    for (std::int64_t i = 1; i <= t; ++i) middle.edges.push_back(edge(el(0, p - t - i, 0), el(2 * k, t + i, 0)));
    for (std::int64_t i = 1; i <= t; ++i) middle.edges.push_back(edge(el(0, p - t - i, 1), el(2 * k, t + i - 1, 1)));
    middle.edges.push_back(edge(el(0, 0, 0), el(2 * k - 1, 2 * t, 1)));
    s.sets.push_back(std::move(middle));
  }

  StarterSet last{{}, h_final};
  for (std::int64_t i = 1; i <= tp; ++i) last.edges.push_back(edge(el(1 - i, 0, 0), el(i, 0, 0)));
  for (std::int64_t i = 1; i <= tp; ++i) last.edges.push_back(edge(el(i, 0, 1), el(-i, 0, 1)));
  for (std::int64_t i = 1; i <= 2 * tp; ++i) {
    last.edges.push_back(edge(el(tp + i, 0, reading.cross_tail_third), el(-tp - i, 2 * t + 2, 1)));
  }
  last.edges.push_back(edge(el(0, reading.closing_head_mid, 1), el(-tp, 0, 0)));
  s.sets.push_back(std::move(last));
  return s;
}

// Empty when the partial starter meets its contract, else a description.
std::optional<std::string> partial_defect(const Starter& s) {
  const VerificationReport r = verify_partial_starter(s);
  if (!r.passed) {
    for (const Verdict& v : r.verdicts) {
      if (!v.holds) return v.name + ": " + v.violations.front();
    }
  }
  const AbelianGroup& g = s.model.group();
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const StarterSet& set : s.sets) {
    for (const Edge& e : set.edges) {
      for (const Element& d : edge_difference(s.model, e)) covered[static_cast<std::size_t>(g.index_of(d))] = 1;
    }
  }
  for (const Element& w : s.model.omega()) {
    if (w.coords[2] == 0 && !covered[static_cast<std::size_t>(g.index_of(w))]) {
      return "difference " + to_string(w) + " with last coordinate 0 is not covered";
    }
  }
  return std::nullopt;
}

}  // namespace

Subgroup prime_power_index2_subgroup(const AbelianGroup& group) {
  if (group.rank() != 3 || group.cyclic_orders()[2] != 2) {
    throw std::invalid_argument("expected a group of the form Z_a x Z_b x Z_2");
  }
  return subgroup_from_generators(group, std::vector<Element>{Element{{1, 0, 0}}, Element{{0, 1, 0}}});
}

Starter build_prime_power_starter(std::int64_t p, int v) {
  const PrimePowerParams pp = PrimePowerParams::make(p, v);
  const AbelianGroup g = make_group({pp.p_pow(), p, 2});
  const CayleyModel model = build_model(g, subgroup_from_generators(g, std::vector<Element>{Element{{0, 0, 1}}}));

  // Stated form first. The closing-edge substitute is needed when t = 1,
  // where (0,2,1) repeats a middle-set difference.
  const std::array<Reading, 4> readings{{{0, 2}, {1, 2}, {0, 0}, {1, 0}}};
  std::string last_defect;
  for (const Reading& r : readings) {
    Starter s = assemble(model, pp, r);
    if (auto defect = partial_defect(s)) {
      last_defect = *defect;
      continue;
    }
    s.provenance = Provenance{"prime_power", {{"p", p}, {"v", v}}, describe(r)};
    return s;
  }
  throw ConstructionError("no reading of the prime-power construction closes: " + last_defect,
                          verify_partial_starter(assemble(model, pp, readings.back())));
}

Starter complete_via_index2(const Starter& partial, const Subgroup& a) {
  const CayleyModel& model = partial.model;
  const AbelianGroup& g = model.group();
  if (a.order() * 2 != g.order()) throw std::invalid_argument("completion subgroup must have index 2");

  VerificationReport pre = verify_partial_starter(partial);
  if (!pre.passed) throw ConstructionError("partial starter violates its hypotheses", std::move(pre));

  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (const StarterSet& set : partial.sets) {
    for (const Edge& e : set.edges) {
      for (const Element& d : edge_difference(model, e)) covered[static_cast<std::size_t>(g.index_of(d))] = 1;
    }
  }

  Starter out = partial;
  const Subgroup all = whole_group(g);
  for (const Element& w : model.omega()) {
    const auto wi = static_cast<std::size_t>(g.index_of(w));
    if (covered[wi]) continue;
    if (a.contains(w)) {
      throw ConstructionError("uncovered difference " + to_string(w) + " lies in the index-2 subgroup");
    }
    const Element minus = g.neg(w);
    covered[wi] = 1;
    covered[static_cast<std::size_t>(g.index_of(minus))] = 1;
    const bool involution = minus == w;
    out.sets.push_back(StarterSet{{model.make_edge(g.identity(), w)}, involution ? all : a});
  }

  VerificationReport post = verify_starter(out);
  if (!post.passed) throw ConstructionError("completed starter does not verify", std::move(post));
  return out;
}

Starter prime_power_starter(std::int64_t p, int v) {
  Starter partial = build_prime_power_starter(p, v);
  return complete_via_index2(partial, prime_power_index2_subgroup(partial.model.group()));
}

// ------------------------------------------------------------- certificates

std::optional<NonexistenceCertificate> parity_nonexistence(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2) return std::nullopt;
  if (m % 4 != 3 || n % 2 != 0 || (n / 2) % 2 != 1) return std::nullopt;
  NonexistenceCertificate c;
  c.m = m;
  c.n = n;
  c.d = n / 2;
  c.type_zero_count = c.d * (m - 1);
  c.residue_mod_4 = c.type_zero_count % 4;
  c.omega_size = m * n - n;
  c.involutions_in_omega = 0;
  c.all_edges_long = true;
  c.per_set_type_zero_mod_4 = 0;
  return c;
}

namespace {

struct TwoAdic {
  int v = 0;
  std::int64_t odd = 1;
};

TwoAdic split2(std::int64_t x) {
  TwoAdic r;
  while (x % 2 == 0) {
    x /= 2;
    ++r.v;
  }
  r.odd = x;
  return r;
}

bool is_prime_power(std::int64_t x, std::int64_t* prime = nullptr, int* exponent = nullptr) {
  const auto f = factorize(x);
  if (f.size() != 1) return false;
  if (prime) *prime = f[0].first;
  if (exponent) *exponent = f[0].second;
  return true;
}

}  // namespace

ExistenceVerdict classify_existence(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2) throw std::invalid_argument("need m >= 2 and n >= 2");
  const TwoAdic mm = split2(m);
  const TwoAdic nn = split2(n);
  std::int64_t prime = 0;
  int exponent = 0;
  const bool prime_power = is_prime_power(m, &prime, &exponent);

  if ((m * n) % 2 == 1) {
    return {Existence::not_exists, "degree-parity", "mn odd: the graph has an odd number of vertices"};
  }
  if (m % 4 == 3 && nn.v == 1) {
    return {Existence::not_exists, "abelian-m3mod4-n2odd",
            "no abelian 1-factorization when m = 3 mod 4 and n = 2d with d odd"};
  }
  if (n == 2 && prime_power && exponent == 1 && prime % 4 == 1) {
    return {Existence::not_exists, "abelian-prime-n2", "no abelian 1-factorization when m = p prime, p = 1 mod 4, n = 2"};
  }
  if (mm.v >= 2 && nn.v == 1) {
    return {Existence::exists, "abelian-m4k-n2odd", "exists when m = 2^v d with v >= 2 and n = 2d', d, d' odd"};
  }
  if (n == 2 && prime_power && exponent >= 2 && prime % 4 == 1) {
    return {Existence::exists, "abelian-prime-power-n2", "exists when m = p^v, p = 1 mod 4, v >= 2, n = 2"};
  }
  if (mm.v == 1 && nn.v == 1) {
    return {Existence::exists, "cyclic-m2odd-n2odd", "cyclic exists when m = 2d and n = 2d', d, d' odd"};
  }
  if (mm.v >= 1 && nn.v >= 2) {
    return {Existence::exists, "cyclic-meven-n4k", "cyclic exists when m = 2^v d, v >= 1, and n = 2^u d', u > 1"};
  }
  if (mm.v >= 1 && nn.v == 0) {
    return {Existence::exists, "cyclic-meven-nodd", "cyclic exists when m = 2^v d, v >= 1, and n odd"};
  }
  if (n == 2 && m % 4 == 1 && !prime_power) {
    return {Existence::exists, "cyclic-m1mod4-n2", "cyclic exists when n = 2 and m = 1 mod 4 is not a prime power"};
  }
  if (m % 4 == 1 && nn.v == 1 && nn.odd > 1) {
    return {Existence::exists, "cyclic-m1mod4-n2odd", "cyclic exists when m = 1 mod 4 and n = 2d, d > 1 odd"};
  }
  return {Existence::unknown, "", "no known rule applies"};
}

std::string to_string(Existence e) {
  switch (e) {
    case Existence::exists:
      return "exists";
    case Existence::not_exists:
      return "not_exists";
    case Existence::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace onefact
