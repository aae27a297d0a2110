#include "onefact/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "onefact/indexed_group.hpp"

namespace onefact {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none_exists:
      return "none_exists";
    case SearchStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "none_exists";
}

std::string to_string(CertificationStatus s) {
  switch (s) {
    case CertificationStatus::certified:
      return "certified";
    case CertificationStatus::witness_found:
      return "witness_found";
    case CertificationStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "certified";
}

namespace {

struct LatticeEntry {
  Subgroup subgroup;
  std::vector<char> mask;
  std::vector<Index> coset;
  std::vector<Index> reps;  // least element of each coset, ascending
  Index coset_count = 0;
};

struct Problem {
  CayleyModel model;
  std::vector<LatticeEntry> lattice;
  std::vector<Index> omega;
  std::vector<Index> omega_involutions;
  std::vector<char> involution;

  Problem(const AbelianGroup& group, const Subgroup& h, const std::vector<Subgroup>& subgroups)
      : model(build_model(group, h)) {
    const IndexedGroup& ig = model.indexed();
    for (const Subgroup& k : subgroups) {
      LatticeEntry e{k, ig.mask(group, k), {}, {}, 0};
      e.coset = ig.coset_ids(e.mask, e.coset_count);
      e.reps.assign(e.coset_count, 0);
      for (Index x = ig.order(); x-- > 0;) e.reps[e.coset[x]] = x;
      std::sort(e.reps.begin(), e.reps.end());
      lattice.push_back(std::move(e));
    }
    involution.assign(ig.order(), 0);
    for (Index x = 0; x < ig.order(); ++x) {
      if (!model.omega_mask()[x]) continue;
      omega.push_back(x);
      if (ig.is_involution(x)) {
        involution[x] = 1;
        omega_involutions.push_back(x);
      }
    }
  }
};

struct OpenSet {
  std::uint32_t lattice = 0;
  std::vector<char> used;
  Index filled = 0;
  Index needed = 0;
  std::vector<IndexEdge> edges;
};

struct State {
  std::vector<char> covered;
  std::vector<OpenSet> sets;
  std::int64_t long_left = 0;
  std::int64_t short_left = 0;
  std::int64_t deficit = 0;
  std::size_t pos = 0;
};

// A placement of the edge {x, x + w}: into sets[set], or into a new set with
// companion lattice[lattice] when set == kNewSet.
struct Move {
  static constexpr std::size_t kNewSet = std::numeric_limits<std::size_t>::max();
  std::size_t set = kNewSet;
  std::uint32_t lattice = 0;
  Index x = 0;
};

class Engine {
 public:
  explicit Engine(const Problem& p) : p_(p), ig_(p.model.indexed()) {}

  State initial() const {
    State s;
    s.covered.assign(ig_.order(), 0);
    for (Index w : p_.omega) {
      if (p_.involution[w]) {
        ++s.short_left;
      } else if (w < ig_.neg(w)) {
        ++s.long_left;
      }
    }
    return s;
  }

  // Advances s.pos to the least uncovered difference; false when none is left.
  bool next_difference(State& s) const {
    while (s.pos < p_.omega.size() && s.covered[p_.omega[s.pos]]) ++s.pos;
    return s.pos < p_.omega.size();
  }
  Index difference_at(std::size_t pos) const { return p_.omega[pos]; }

  template <typename Visit>
  bool for_each_move(const State& s, Index w, Visit&& visit) const {
    const bool is_short = p_.involution[w] != 0;
    // `visit` may grow s.sets, so sets are re-read by index after each call.
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
      if (s.sets[i].filled == s.sets[i].needed) continue;
      const std::uint32_t l = s.sets[i].lattice;
      const LatticeEntry& k = p_.lattice[l];
      if ((k.mask[w] != 0) != is_short) continue;
      // Translating one edge by an element of the companion subgroup keeps
      // every condition, so the lesser endpoint is taken as a coset minimum.
      for (Index x : k.reps) {
        const std::vector<char>& used = s.sets[i].used;
        if (used[k.coset[x]]) continue;
        if (!is_short && used[k.coset[ig_.add(x, w)]]) continue;
        if (visit(Move{i, l, x})) return true;
      }
    }
    for (std::uint32_t l = 0; l < p_.lattice.size(); ++l) {
      if ((p_.lattice[l].mask[w] != 0) != is_short) continue;
      if (visit(Move{Move::kNewSet, l, 0})) return true;
    }
    return false;
  }

  void apply(State& s, Index w, const Move& mv) const {
    const bool is_short = p_.involution[w] != 0;
    std::size_t i = mv.set;
    if (i == Move::kNewSet) {
      const LatticeEntry& k = p_.lattice[mv.lattice];
      s.sets.push_back(OpenSet{mv.lattice, std::vector<char>(k.coset_count, 0), 0, k.coset_count, {}});
      s.deficit += k.coset_count;
      i = s.sets.size() - 1;
    }
    OpenSet& set = s.sets[i];
    const LatticeEntry& k = p_.lattice[set.lattice];
    const Index y = ig_.add(mv.x, w);
    set.used[k.coset[mv.x]] = 1;
    Index gained = 1;
    if (!is_short) {
      set.used[k.coset[y]] = 1;
      gained = 2;
    }
    set.filled += gained;
    s.deficit -= gained;
    set.edges.push_back(mv.x < y ? IndexEdge{mv.x, y} : IndexEdge{y, mv.x});
    s.covered[w] = 1;
    s.covered[ig_.neg(w)] = 1;
    if (is_short) {
      --s.short_left;
    } else {
      --s.long_left;
    }
  }

  void undo(State& s, Index w, const Move& mv) const {
    const bool is_short = p_.involution[w] != 0;
    const std::size_t i = mv.set == Move::kNewSet ? s.sets.size() - 1 : mv.set;
    OpenSet& set = s.sets[i];
    const LatticeEntry& k = p_.lattice[set.lattice];
    const Index y = ig_.add(mv.x, w);
    set.used[k.coset[mv.x]] = 0;
    Index gained = 1;
    if (!is_short) {
      set.used[k.coset[y]] = 0;
      gained = 2;
    }
    set.filled -= gained;
    s.deficit += gained;
    set.edges.pop_back();
    s.covered[w] = 0;
    s.covered[ig_.neg(w)] = 0;
    if (is_short) {
      ++s.short_left;
    } else {
      ++s.long_left;
    }
    if (mv.set == Move::kNewSet) {
      s.deficit -= set.needed;
      s.sets.pop_back();
    }
  }

  bool feasible(const State& s) const {
    if (s.deficit > 2 * s.long_left + s.short_left) return false;
    // A set with an odd number of missing cosets needs a short edge.
    std::int64_t odd_sets = 0;
    for (const OpenSet& set : s.sets) {
      if ((set.needed - set.filled) % 2 == 0) continue;
      ++odd_sets;
      const LatticeEntry& k = p_.lattice[set.lattice];
      bool available = false;
      for (Index w : p_.omega_involutions) {
        if (!s.covered[w] && k.mask[w]) {
          available = true;
          break;
        }
      }
      if (!available) return false;
    }
    return odd_sets <= s.short_left;
  }

  Starter to_starter(const State& s) const {
    const AbelianGroup& g = p_.model.group();
    Starter out{p_.model, {}, std::nullopt};
    for (const OpenSet& set : s.sets) {
      StarterSet ss{{}, p_.lattice[set.lattice].subgroup};
      for (const IndexEdge& e : set.edges) {
        ss.edges.push_back(p_.model.make_edge(g.element_at(e.u), g.element_at(e.v)));
      }
      out.sets.push_back(std::move(ss));
    }
    return out;
  }

 private:
  const Problem& p_;
  const IndexedGroup& ig_;
};

struct Context {
  SearchMode mode = SearchMode::first;
  std::uint64_t budget = 0;
  std::size_t max_witnesses = 0;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::vector<State> solutions;
  std::uint64_t solution_count = 0;
  // Parallel runs: shared node total and the least task index with a witness.
  std::atomic<std::uint64_t>* shared_nodes = nullptr;
  std::atomic<std::size_t>* best_task = nullptr;
  std::size_t task = 0;
};

// Returns true when the search must stop.
bool dfs(const Engine& engine, State& s, Context& ctx) {
  // A node refused by the budget is not counted as explored.
  const std::uint64_t seen = ctx.shared_nodes ? ctx.shared_nodes->fetch_add(1) + 1 : ctx.nodes + 1;
  if (ctx.budget != 0 && seen > ctx.budget) {
    if (ctx.shared_nodes) ctx.shared_nodes->fetch_sub(1);
    ctx.budget_hit = true;
    return true;
  }
  ++ctx.nodes;
  if (ctx.best_task && ctx.best_task->load(std::memory_order_relaxed) < ctx.task) return true;

  const std::size_t saved_pos = s.pos;
  if (!engine.next_difference(s)) {
    s.pos = saved_pos;
    if (s.deficit != 0) return false;
    ++ctx.solution_count;
    if (ctx.solutions.size() < std::max<std::size_t>(ctx.max_witnesses, 1)) ctx.solutions.push_back(s);
    return ctx.mode != SearchMode::all;
  }
  const Index w = engine.difference_at(s.pos);
  const bool stop = engine.for_each_move(s, w, [&](const Move& mv) {
    engine.apply(s, w, mv);
    bool halt = false;
    if (engine.feasible(s)) halt = dfs(engine, s, ctx);
    engine.undo(s, w, mv);
    return halt;
  });
  s.pos = saved_pos;
  return stop;
}

// Collects the states `depth` levels below `s` in depth-first order. States
// reached earlier with nothing left to place are collected as they are.
void expand(const Engine& engine, State& s, int depth, std::vector<State>& out, std::uint64_t& nodes) {
  const std::size_t saved_pos = s.pos;
  if (depth == 0 || !engine.next_difference(s)) {
    s.pos = saved_pos;
    out.push_back(s);
    return;
  }
  ++nodes;
  const Index w = engine.difference_at(s.pos);
  engine.for_each_move(s, w, [&](const Move& mv) {
    engine.apply(s, w, mv);
    if (engine.feasible(s)) expand(engine, s, depth - 1, out, nodes);
    engine.undo(s, w, mv);
    return false;
  });
  s.pos = saved_pos;
}

SearchOutcome run_search(const Problem& problem, const SearchOptions& options) {
  const Engine engine(problem);
  SearchOutcome outcome;
  for (const LatticeEntry& e : problem.lattice) outcome.subgroups_tried.push_back(e.subgroup);

  std::vector<State> found;
  bool budget_hit = false;

  if (options.workers <= 1) {
    Context ctx;
    ctx.mode = options.mode;
    ctx.budget = options.budget;
    ctx.max_witnesses = options.max_witnesses;
    State root = engine.initial();
    dfs(engine, root, ctx);
    outcome.nodes_explored = ctx.nodes;
    outcome.witness_count = ctx.solution_count;
    budget_hit = ctx.budget_hit;
    found = std::move(ctx.solutions);
  } else {
    // Split on the top of the tree; tasks keep depth-first order so the
    // least task index holding a witness gives the serial witness.
    std::vector<State> tasks;
    std::uint64_t expand_nodes = 0;
    for (int depth = 1; depth <= 4; ++depth) {
      tasks.clear();
      expand_nodes = 0;
      State root = engine.initial();
      expand(engine, root, depth, tasks, expand_nodes);
      if (tasks.size() >= static_cast<std::size_t>(8 * options.workers)) break;
    }
    std::atomic<std::uint64_t> shared_nodes{expand_nodes};
    std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
    std::vector<Context> contexts(tasks.size());
    const bool stop_early = options.mode != SearchMode::all;
    const auto task_count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.workers)
    for (std::int64_t t = 0; t < task_count; ++t) {
      const auto ti = static_cast<std::size_t>(t);
      Context& ctx = contexts[ti];
      ctx.mode = options.mode;
      ctx.budget = options.budget;
      ctx.max_witnesses = options.max_witnesses;
      ctx.shared_nodes = &shared_nodes;
      ctx.task = ti;
      if (stop_early) ctx.best_task = &best_task;
      if (stop_early && best_task.load() < ti) continue;
      dfs(engine, tasks[ti], ctx);
      if (stop_early && ctx.solution_count > 0) {
        std::size_t cur = best_task.load();
        while (ti < cur && !best_task.compare_exchange_weak(cur, ti)) {
        }
      }
    }
    outcome.nodes_explored = shared_nodes.load();
    const std::size_t best = best_task.load();
    for (std::size_t t = 0; t < contexts.size(); ++t) {
      Context& ctx = contexts[t];
      if (stop_early && t > best) break;
      // A cutoff only matters if it hit a task that could still change the answer.
      budget_hit = budget_hit || ctx.budget_hit;
      outcome.witness_count += ctx.solution_count;
      for (State& s : ctx.solutions) {
        if (found.size() < std::max<std::size_t>(options.max_witnesses, 1)) found.push_back(std::move(s));
      }
      if (stop_early && !found.empty()) break;
    }
  }

  if (!found.empty()) {
    outcome.status = SearchStatus::found;
    for (const State& s : found) {
      Starter st = engine.to_starter(s);
      VerificationReport r = verify_starter(st);
      if (!r.passed) throw std::logic_error("search produced a starter that does not verify");
      if (options.mode == SearchMode::all) {
        outcome.witnesses.push_back(st);
      }
      if (!outcome.witness) outcome.witness = std::move(st);
    }
    if (options.mode != SearchMode::all) outcome.witness_count = 1;
  } else if (budget_hit) {
    outcome.status = SearchStatus::budget_exceeded;
  } else {
    outcome.status = SearchStatus::none_exists;
  }
  return outcome;
}

}  // namespace

SearchOutcome search_starter(const AbelianGroup& group, const Subgroup& h, const SearchOptions& options) {
  const Problem problem(group, h, subgroup_lattice(group));
  return run_search(problem, options);
}

CertificationResult certify_nonexistence(std::int64_t m, std::int64_t n, const SearchOptions& options) {
  if (m < 2 || n < 2) throw std::invalid_argument("need m >= 2 and n >= 2");
  if ((m * n) % 2 != 0) {
    throw std::invalid_argument("mn is odd: K_{m x n} has an odd number of vertices and no perfect matching");
  }
  SearchOptions exhaust = options;
  exhaust.mode = SearchMode::exhaust;

  CertificationResult result;
  result.m = m;
  result.n = n;
  for (const AbelianGroup& group : enumerate_abelian_groups(m * n)) {
    const std::vector<Subgroup> lattice = subgroup_lattice(group);
    for (const Subgroup& h : lattice) {
      if (h.order() != n) continue;
      const Problem problem(group, h, lattice);
      SearchOutcome out = run_search(problem, exhaust);
      result.pairs.push_back(PairStatistics{group, h, out.status, out.nodes_explored});
      if (out.status == SearchStatus::found) {
        result.status = CertificationStatus::witness_found;
        result.witness = std::move(out.witness);
        return result;
      }
      if (out.status == SearchStatus::budget_exceeded) {
        result.status = CertificationStatus::budget_exceeded;
        return result;
      }
    }
  }
  result.status = CertificationStatus::certified;
  result.certificate = NonexistenceSearchCertificate{m, n, result.pairs};
  return result;
}

}  // namespace onefact
