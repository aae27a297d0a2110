// onefact: construct, verify, develop and search starters from the shell.
//
// Exit codes: 0 success / found / witness, 1 verification failed,
// 2 none exists / certified, 3 budget exceeded, 64 usage error,
// 65 invalid input or I/O failure, 70 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "onefact/abelian_group.hpp"
#include "onefact/constructions.hpp"
#include "onefact/factorization.hpp"
#include "onefact/json_io.hpp"
#include "onefact/search.hpp"

namespace {

using namespace onefact;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitNone = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;
constexpr int kExitInternal = 70;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_sink(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<std::int64_t> parse_ints(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const std::string& part : split(s, ',')) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < part.size() && part[used] == ' ') ++used;
    if (part.empty() || used != part.size()) throw InputError("malformed " + what + ": '" + s + "'");
    out.push_back(x);
  }
  if (out.empty()) throw InputError("empty " + what);
  return out;
}

AbelianGroup parse_group(const std::string& text) {
  try {
    return AbelianGroup(parse_ints(text, "group"));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid group: ") + e.what());
  }
}

Subgroup parse_subgroup(const AbelianGroup& g, const std::string& text) {
  std::vector<Element> gens;
  for (const std::string& tuple : split(text, ';')) {
    std::string t = tuple;
    if (!t.empty() && t.front() == '(') t.erase(0, 1);
    if (!t.empty() && t.back() == ')') t.pop_back();
    std::vector<std::int64_t> coords = parse_ints(t, "generator");
    Element e{coords};
    if (!g.contains(e)) throw InputError("generator '" + tuple + "' is not a reduced element of the group");
    gens.push_back(std::move(e));
  }
  return subgroup_from_generators(g, gens);
}

Starter load_starter(const std::string& path) { return io::starter_from_json(io::parse(read_source(path))); }

SearchMode parse_mode(const std::string& s) {
  if (s == "first") return SearchMode::first;
  if (s == "exhaust") return SearchMode::exhaust;
  return SearchMode::all;
}

int run(int argc, char** argv) {
  CLI::App app{"Starters of sharply transitive 1-factorizations of complete multipartite graphs"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build a starter from an explicit construction");
  std::string family;
  std::int64_t p = 0;
  int v = 0;
  std::string construct_input;
  std::string construct_out = "-";
  construct->add_option("--family", family, "prime-power or doubling")
      ->required()
      ->check(CLI::IsMember({"prime-power", "doubling"}));
  construct->add_option("--p", p, "prime = 1 (mod 4)");
  construct->add_option("--v", v, "exponent >= 2");
  construct->add_option("--input", construct_input, "cyclic starter JSON to double ('-' for stdin)");
  construct->add_option("-o,--output", construct_out, "output file ('-' for stdout)");

  auto* verify_starter_cmd = app.add_subcommand("verify-starter", "Check the three starter conditions");
  std::string verify_in;
  verify_starter_cmd->add_option("file", verify_in, "starter JSON ('-' for stdin)")->required();

  auto* develop = app.add_subcommand("develop", "Develop a starter into its 1-factorization");
  std::string develop_in;
  std::string develop_out;
  std::string emit_edges;
  develop->add_option("file", develop_in, "starter JSON ('-' for stdin)")->required();
  develop->add_option("-o,--output", develop_out, "factorization JSON ('-' for stdout)")->required();
  develop->add_option("--emit-edges", emit_edges, "also write the graph edge list");

  auto* verify_fact = app.add_subcommand("verify-factorization", "Check a 1-factorization");
  std::string fact_in;
  bool invariance = false;
  verify_fact->add_option("file", fact_in, "factorization JSON ('-' for stdin)")->required();
  verify_fact->add_flag("--invariance", invariance, "also require closure under translation");

  auto* search = app.add_subcommand("search", "Backtracking search for a starter over (G, H)");
  std::string group_text;
  std::string h_text;
  std::string mode = "first";
  std::uint64_t budget = 0;
  int workers = 1;
  search->add_option("--group", group_text, "cyclic orders, e.g. 5,5,2")->required();
  search->add_option("--H", h_text, "generators of H, e.g. 0,0,1 or 2,0;0,1")->required();
  search->add_option("--mode", mode, "first, exhaust or all")->check(CLI::IsMember({"first", "exhaust", "all"}));
  search->add_option("--budget", budget, "node limit, 0 for none");
  search->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);

  auto* certify = app.add_subcommand("certify-nonexist", "Exhaust every abelian (G, H) for K_{m x n}");
  std::int64_t cm = 0;
  std::int64_t cn = 0;
  std::uint64_t cbudget = 0;
  int cworkers = 1;
  certify->add_option("--m", cm, "number of parts")->required();
  certify->add_option("--n", cn, "part size")->required();
  certify->add_option("--budget", cbudget, "node limit per pair, 0 for none");
  certify->add_option("--workers", cworkers, "parallel workers")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Look up the existence table");
  std::int64_t km = 0;
  std::int64_t kn = 0;
  classify->add_option("--m", km, "number of parts")->required();
  classify->add_option("--n", kn, "part size")->required();

  auto* groups = app.add_subcommand("groups", "List abelian groups of a given order");
  std::int64_t gorder = 0;
  groups->add_option("--order", gorder, "group order")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) {
      Starter s = [&] {
        if (family == "prime-power") {
          if (construct->count("--input")) throw CLI::ValidationError("--input", "not used by prime-power");
          if (!construct->count("--p") || !construct->count("--v"))
            throw CLI::RequiredError("--p and --v are required for prime-power");
          try {
            PrimePowerParams::make(p, v);
          } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
          }
          return prime_power_starter(p, v);
        }
        if (construct->count("--p") || construct->count("--v"))
          throw CLI::ValidationError("--p/--v", "not used by doubling");
        if (!construct->count("--input")) throw CLI::RequiredError("--input is required for doubling");
        return double_starter(load_starter(construct_input));
      }();
      write_sink(construct_out, io::dump_pretty(io::starter_to_json(s)));
      return kExitOk;
    }

    if (*verify_starter_cmd) {
      const VerificationReport r = verify_starter(load_starter(verify_in));
      std::cout << io::dump_pretty(io::report_to_json(r));
      return r.passed ? kExitOk : kExitFailed;
    }

    if (*develop) {
      const Starter s = load_starter(develop_in);
      const VerificationReport r = verify_starter(s);
      if (!r.passed) {
        std::cerr << "starter does not verify\n" << io::dump_pretty(io::report_to_json(r));
        return kExitFailed;
      }
      const OneFactorization f = develop_factorization(s, Execution::serial);
      write_sink(develop_out, io::dump_compact(io::factorization_to_json(f)));
      if (!emit_edges.empty()) write_sink(emit_edges, edge_list_text(s.model));
      return kExitOk;
    }

    if (*verify_fact) {
      const OneFactorization f = io::factorization_from_json(io::parse(read_source(fact_in)));
      VerificationReport r = verify_factorization(f.model, f);
      if (invariance) {
        Verdict inv{"invariance", check_invariance(f.model, f, Execution::serial), {}};
        if (!inv.holds) inv.violations.push_back("some translate F + g is not a factor");
        r.passed = r.passed && inv.holds;
        r.verdicts.push_back(std::move(inv));
      }
      std::cout << io::dump_pretty(io::report_to_json(r));
      return r.passed ? kExitOk : kExitFailed;
    }

    if (*search) {
      const AbelianGroup g = parse_group(group_text);
      const Subgroup h = parse_subgroup(g, h_text);
      const SearchOutcome o = search_starter(g, h, {parse_mode(mode), budget, workers});
      std::cout << io::dump_pretty(io::search_outcome_to_json(o));
      switch (o.status) {
        case SearchStatus::found: return kExitOk;
        case SearchStatus::none_exists: return kExitNone;
        case SearchStatus::budget_exceeded: return kExitBudget;
      }
    }

    if (*certify) {
      if (cm < 2 || cn < 2) throw InputError("m and n must both be at least 2");
      if ((cm * cn) % 2 != 0) {
        std::cout << io::dump_pretty(io::verdict_to_json(cm, cn, classify_existence(cm, cn)));
        std::cerr << "mn is odd: K_{m x n} has odd order and no perfect matching\n";
        return kExitInput;
      }
      const CertificationResult c = certify_nonexistence(cm, cn, {SearchMode::exhaust, cbudget, cworkers});
      std::cout << io::dump_pretty(io::certification_to_json(c));
      switch (c.status) {
        case CertificationStatus::certified: return kExitNone;
        case CertificationStatus::witness_found: return kExitOk;
        case CertificationStatus::budget_exceeded: return kExitBudget;
      }
    }

    if (*classify) {
      if (km < 2 || kn < 2) throw InputError("m and n must both be at least 2");
      const ExistenceVerdict verdict = classify_existence(km, kn);
      Json j = io::verdict_to_json(km, kn, verdict);
      if (const auto cert = parity_nonexistence(km, kn)) j["parity_certificate"] = io::parity_certificate_to_json(*cert);
      std::cout << io::dump_pretty(j);
      return kExitOk;
    }

    if (*groups) {
      Json list = Json::array();
      for (const AbelianGroup& g : enumerate_abelian_groups(gorder)) list.push_back(io::group_to_json(g));
      Json j;
      j["order"] = gorder;
      j["groups"] = std::move(list);
      std::cout << io::dump_pretty(j);
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidStarter& e) {
    std::cerr << e.what() << "\n" << io::dump_pretty(io::report_to_json(e.report()));
    return kExitFailed;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    if (e.report()) std::cerr << io::dump_pretty(io::report_to_json(*e.report()));
    return kExitFailed;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const io::FormatError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
