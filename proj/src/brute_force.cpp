#include "onefact/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace onefact {

namespace {

using Mask = std::uint64_t;

class Enumerator {
 public:
  Enumerator(const CayleyModel& model, const BruteForceOptions& options)
      : model_(model), options_(options), order_(model.indexed().order()) {
    edges_ = model.graph_edges();
    if (edges_.size() > 64) throw std::logic_error("edge masks hold at most 64 edges");
    id_.assign(static_cast<std::size_t>(order_) * order_, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      id_[edges_[i].u * order_ + edges_[i].v] = static_cast<int>(i);
      id_[edges_[i].v * order_ + edges_[i].u] = static_cast<int>(i);
    }
    const IndexedGroup& ig = model.indexed();
    shift_.assign(order_, std::vector<int>(edges_.size()));
    for (Index g = 0; g < order_; ++g) {
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        shift_[g][i] = id_[ig.add(edges_[i].u, g) * order_ + ig.add(edges_[i].v, g)];
      }
    }
    full_ = edges_.size() == 64 ? ~Mask{0} : (Mask{1} << edges_.size()) - 1;
  }

  BruteForceResult run() {
    if (order_ % 2 == 0) recurse(0);
    return std::move(result_);
  }

 private:
  Mask translate(Mask m, Index g) const {
    Mask out = 0;
    while (m) {
      const int i = std::countr_zero(m);
      m &= m - 1;
      out |= Mask{1} << shift_[g][i];
    }
    return out;
  }

  // Perfect matchings inside `available` containing edge `first`.
  template <typename Visit>
  bool matchings(Mask available, int first, Visit&& visit) const {
    std::uint32_t matched = (1u << edges_[first].u) | (1u << edges_[first].v);
    return extend(available, matched, Mask{1} << first, visit);
  }

  template <typename Visit>
  bool extend(Mask available, std::uint32_t matched, Mask chosen, Visit& visit) const {
    Index v = 0;
    while (v < order_ && (matched >> v) & 1u) ++v;
    if (v == order_) return visit(chosen);
    for (Index w = 0; w < order_; ++w) {
      if ((matched >> w) & 1u || w == v) continue;
      const int e = id_[v * order_ + w];
      if (e < 0 || !((available >> e) & 1u)) continue;
      if (extend(available, matched | (1u << v) | (1u << w), chosen | (Mask{1} << e), visit)) return true;
    }
    return false;
  }

  // Returns true to stop.
  bool recurse(Mask used) {
    if (used == full_) {
      ++result_.count;
      if (result_.witnesses.size() < options_.max_witnesses) result_.witnesses.push_back(materialize());
      if (options_.stop_at_first) {
        result_.stopped_early = true;
        return true;
      }
      return false;
    }
    const int first = std::countr_zero(~used & full_);
    return matchings(full_ & ~used, first, [&](Mask factor) {
      if (!options_.require_invariance) {
        stack_.push_back(factor);
        const bool stop = recurse(used | factor);
        stack_.pop_back();
        return stop;
      }
      // The whole orbit of the factor goes in at once; distinct translates
      // must be edge-disjoint from each other and from what is used.
      Mask orbit = factor;
      const std::size_t mark = stack_.size();
      stack_.push_back(factor);
      for (Index g = 1; g < order_; ++g) {
        const Mask t = translate(factor, g);
        if (t == factor) continue;
        if ((t & factor) || (t & used)) {
          stack_.resize(mark);
          return false;
        }
        if (!(t & orbit)) {
          orbit |= t;
          stack_.push_back(t);
        }
      }
      const bool stop = recurse(used | orbit);
      stack_.resize(mark);
      return stop;
    });
  }

  OneFactorization materialize() const {
    OneFactorization f{model_, {}};
    for (Mask m : stack_) {
      Factor factor;
      while (m) {
        const int i = std::countr_zero(m);
        m &= m - 1;
        factor.push_back(edges_[i]);
      }
      f.factors.push_back(std::move(factor));
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
  }

  const CayleyModel& model_;
  BruteForceOptions options_;
  Index order_;
  std::vector<IndexEdge> edges_;
  std::vector<int> id_;
  std::vector<std::vector<int>> shift_;
  Mask full_ = 0;
  std::vector<Mask> stack_;
  BruteForceResult result_;
};

}  // namespace

BruteForceResult brute_force_factorizations(const CayleyModel& model, const BruteForceOptions& options) {
  if (model.order() > kBruteForceMaxOrder) {
    throw std::invalid_argument("brute force is capped at " + std::to_string(kBruteForceMaxOrder) + " vertices");
  }
  return Enumerator(model, options).run();
}

}  // namespace onefact
