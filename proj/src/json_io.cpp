#include "onefact/json_io.hpp"

namespace onefact::io {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw FormatError(what);
}

Json generators_to_json(const std::vector<Element>& gens) {
  Json a = Json::array();
  for (const Element& g : gens) a.push_back(element_to_json(g));
  return a;
}

std::vector<Element> generators_from_json(const AbelianGroup& g, const Json& j, const std::string& field) {
  require(j.is_array(), field + " must be an array");
  std::vector<Element> gens;
  for (const Json& e : j) gens.push_back(element_from_json(g, e));
  return gens;
}

const Json& field(const Json& j, const char* name) {
  require(j.is_object() && j.contains(name), std::string("missing field \"") + name + "\"");
  return j.at(name);
}

CayleyModel model_from_json(const Json& j) {
  AbelianGroup g = group_from_json(field(j, "group"));
  const std::vector<Element> gens = generators_from_json(g, field(j, "H_generators"), "H_generators");
  try {
    return build_model(g, subgroup_from_generators(g, gens));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid model: ") + e.what());
  }
}

}  // namespace

Json group_to_json(const AbelianGroup& g) {
  Json j = Json::object();
  j["cyclic_orders"] = g.cyclic_orders();
  return j;
}

AbelianGroup group_from_json(const Json& j) {
  const Json& orders = field(j, "cyclic_orders");
  require(orders.is_array() && !orders.empty(), "cyclic_orders must be a non-empty array");
  std::vector<std::int64_t> v;
  for (const Json& o : orders) {
    require(o.is_number_integer(), "cyclic orders must be integers");
    v.push_back(o.get<std::int64_t>());
  }
  try {
    return AbelianGroup(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json element_to_json(const Element& e) { return Json(e.coords); }

Element element_from_json(const AbelianGroup& g, const Json& j) {
  require(j.is_array(), "element must be an array of integers");
  Element e;
  for (const Json& c : j) {
    require(c.is_number_integer(), "element coordinates must be integers");
    e.coords.push_back(c.get<std::int64_t>());
  }
  require(g.contains(e), "element " + to_string(e) + " does not belong to the group");
  return e;
}

Json starter_to_json(const Starter& s) {
  Json j = Json::object();
  j["group"] = group_to_json(s.model.group());
  j["H_generators"] = generators_to_json(s.model.H().generators());
  Json sets = Json::array();
  for (const StarterSet& set : s.sets) {
    Json js = Json::object();
    js["subgroup_generators"] = generators_to_json(set.subgroup.generators());
    Json edges = Json::array();
    for (const Edge& e : set.edges) edges.push_back(Json::array({element_to_json(e.u), element_to_json(e.v)}));
    js["edges"] = std::move(edges);
    sets.push_back(std::move(js));
  }
  j["sets"] = std::move(sets);
  if (s.provenance) {
    Json p = Json::object();
    p["construction"] = s.provenance->construction;
    for (const auto& [k, v] : s.provenance->parameters) p[k] = v;
    p["typo_resolutions"] = s.provenance->typo_resolutions;
    j["provenance"] = std::move(p);
  }
  return j;
}

Starter starter_from_json(const Json& j) {
  CayleyModel model = model_from_json(j);
  const AbelianGroup& g = model.group();
  Starter s{model, {}, std::nullopt};
  const Json& sets = field(j, "sets");
  require(sets.is_array(), "sets must be an array");
  for (const Json& js : sets) {
    const auto gens = generators_from_json(g, field(js, "subgroup_generators"), "subgroup_generators");
    StarterSet set{{}, subgroup_from_generators(g, gens)};
    const Json& edges = field(js, "edges");
    require(edges.is_array(), "edges must be an array");
    for (const Json& e : edges) {
      require(e.is_array() && e.size() == 2, "edge must be a pair of elements");
      try {
        set.edges.push_back(model.make_edge_unchecked(element_from_json(g, e[0]), element_from_json(g, e[1])));
      } catch (const std::invalid_argument& ex) {
        throw FormatError(ex.what());
      }
    }
    s.sets.push_back(std::move(set));
  }
  if (j.contains("provenance")) {
    const Json& p = j.at("provenance");
    require(p.is_object(), "provenance must be an object");
    Provenance prov;
    for (const auto& [k, v] : p.items()) {
      if (k == "construction") {
        prov.construction = v.get<std::string>();
      } else if (k == "typo_resolutions") {
        prov.typo_resolutions = v.get<std::vector<std::string>>();
      } else if (v.is_number_integer()) {
        prov.parameters.emplace_back(k, v.get<std::int64_t>());
      }
    }
    s.provenance = std::move(prov);
  }
  return s;
}

Json factorization_to_json(const OneFactorization& f) {
  Json j = Json::object();
  j["group"] = group_to_json(f.model.group());
  j["H_generators"] = generators_to_json(f.model.H().generators());
  Json factors = Json::array();
  for (const Factor& factor : f.factors) {
    Json jf = Json::array();
    for (const IndexEdge& e : factor) jf.push_back(Json::array({e.u, e.v}));
    factors.push_back(std::move(jf));
  }
  j["factors"] = std::move(factors);
  return j;
}

OneFactorization factorization_from_json(const Json& j) {
  OneFactorization f{model_from_json(j), {}};
  const Json& factors = field(j, "factors");
  require(factors.is_array(), "factors must be an array");
  for (const Json& jf : factors) {
    require(jf.is_array(), "factor must be an array of edges");
    Factor factor;
    for (const Json& e : jf) {
      require(e.is_array() && e.size() == 2 && e[0].is_number_unsigned() && e[1].is_number_unsigned(),
              "edge must be a pair of vertex indices");
      factor.push_back({e[0].get<Index>(), e[1].get<Index>()});
    }
    f.factors.push_back(std::move(factor));
  }
  return f;
}

Json report_to_json(const VerificationReport& r) {
  Json j = Json::object();
  j["passed"] = r.passed;
  Json checks = Json::array();
  for (const Verdict& v : r.verdicts) {
    Json jv = Json::object();
    jv["name"] = v.name;
    jv["holds"] = v.holds;
    jv["violations"] = v.violations;
    checks.push_back(std::move(jv));
  }
  j["conditions"] = std::move(checks);
  return j;
}

Json search_outcome_to_json(const SearchOutcome& o) {
  Json j = Json::object();
  j["status"] = to_string(o.status);
  j["nodes_explored"] = o.nodes_explored;
  j["witness_count"] = o.witness_count;
  Json tried = Json::array();
  for (const Subgroup& k : o.subgroups_tried) tried.push_back(generators_to_json(k.generators()));
  j["subgroups_tried"] = std::move(tried);
  j["witness"] = o.witness ? starter_to_json(*o.witness) : Json(nullptr);
  if (!o.witnesses.empty()) {
    Json all = Json::array();
    for (const Starter& s : o.witnesses) all.push_back(starter_to_json(s));
    j["witnesses"] = std::move(all);
  }
  return j;
}

Json certification_to_json(const CertificationResult& c) {
  Json j = Json::object();
  j["m"] = c.m;
  j["n"] = c.n;
  j["status"] = to_string(c.status);
  Json pairs = Json::array();
  for (const PairStatistics& p : c.pairs) {
    Json jp = Json::object();
    jp["group"] = group_to_json(p.group);
    jp["H_generators"] = generators_to_json(p.subgroup.generators());
    jp["status"] = to_string(p.status);
    jp["nodes"] = p.nodes;
    pairs.push_back(std::move(jp));
  }
  j["groups_checked"] = std::move(pairs);
  j["witness"] = c.witness ? starter_to_json(*c.witness) : Json(nullptr);
  return j;
}

Json parity_certificate_to_json(const NonexistenceCertificate& c) {
  Json j = Json::object();
  j["m"] = c.m;
  j["n"] = c.n;
  j["d"] = c.d;
  j["type_zero_count"] = c.type_zero_count;
  j["residue_mod_4"] = c.residue_mod_4;
  Json narrative = Json::object();
  narrative["omega_size"] = c.omega_size;
  narrative["involutions_in_omega"] = c.involutions_in_omega;
  narrative["all_edges_long"] = c.all_edges_long;
  narrative["companion_subgroups_odd_order"] = true;
  narrative["per_set_type_zero_mod_4"] = c.per_set_type_zero_mod_4;
  j["narrative"] = std::move(narrative);
  return j;
}

Json verdict_to_json(std::int64_t m, std::int64_t n, const ExistenceVerdict& v) {
  Json j = Json::object();
  j["m"] = m;
  j["n"] = n;
  j["status"] = to_string(v.status);
  j["source"] = v.source.empty() ? Json(nullptr) : Json(v.source);
  j["explanation"] = v.explanation;
  return j;
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }
std::string dump_compact(const Json& j) { return j.dump() + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace onefact::io
