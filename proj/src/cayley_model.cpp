#include "onefact/cayley_model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace onefact {

namespace {

void check_subgroup(const AbelianGroup& group, const Subgroup& h) {
  if (h.elements().empty() || h.elements().front() != group.identity()) {
    throw std::invalid_argument("subgroup must contain the identity");
  }
  for (const Element& a : h.elements()) {
    if (!group.contains(a)) throw std::invalid_argument("subgroup element outside the group");
  }
  for (const Element& a : h.elements()) {
    for (const Element& b : h.elements()) {
      if (!h.contains(group.add(a, b))) throw std::invalid_argument("subgroup element set is not closed");
    }
  }
}

}  // namespace

CayleyModel::CayleyModel(AbelianGroup group, Subgroup h) : group_(std::move(group)), h_(std::move(h)) {
  check_subgroup(group_, h_);
  n_ = h_.order();
  if (n_ < 2) throw std::invalid_argument("parts need at least two vertices (|H| >= 2)");
  if (n_ >= group_.order()) throw std::invalid_argument("H must be a proper subgroup");
  m_ = group_.order() / n_;

  indexed_ = std::make_shared<const IndexedGroup>(group_);
  omega_mask_.assign(static_cast<std::size_t>(group_.order()), 1);
  for (const Element& a : h_.elements()) omega_mask_[static_cast<std::size_t>(group_.index_of(a))] = 0;
  for (Index i = 0; i < indexed_->order(); ++i) {
    if (omega_mask_[i]) omega_.push_back(group_.element_at(i));
  }

  const IndexedGroup& ig = *indexed_;
  for (const Element& w : omega_) {
    const Index i = vertex_index(w);
    if (ig.neg(i) == i) {
      partition_.omega1.push_back(w);
    } else if (i < ig.neg(i)) {
      partition_.omega2.push_back(w);
      partition_.omega2_prime.push_back(group_.neg(w));
    }
  }
  std::sort(partition_.omega2_prime.begin(), partition_.omega2_prime.end());
}

CayleyModel build_model(const AbelianGroup& group, const Subgroup& h) { return CayleyModel(group, h); }

bool CayleyModel::in_omega(const Element& a) const {
  return group_.contains(a) && omega_mask_[static_cast<std::size_t>(group_.index_of(a))];
}

Edge CayleyModel::make_edge_unchecked(const Element& a, const Element& b) const {
  if (!group_.contains(a) || !group_.contains(b)) throw std::invalid_argument("edge endpoint outside the group");
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
  Edge e{std::min(a, b), std::max(a, b), EdgeKind::long_edge};
  if (group_.element_order(group_.sub(e.v, e.u)) == 2) e.kind = EdgeKind::short_edge;
  return e;
}

Edge CayleyModel::make_edge(const Element& a, const Element& b) const {
  Edge e = make_edge_unchecked(a, b);
  if (!is_legal(e)) throw std::invalid_argument("illegal edge: endpoints lie in the same part");
  return e;
}

bool CayleyModel::is_legal(const Edge& e) const { return in_omega(group_.sub(e.u, e.v)); }

std::vector<IndexEdge> CayleyModel::graph_edges() const {
  std::vector<IndexEdge> out;
  const IndexedGroup& ig = *indexed_;
  for (Index u = 0; u < ig.order(); ++u) {
    for (Index v = u + 1; v < ig.order(); ++v) {
      if (omega_mask_[ig.sub(v, u)]) out.push_back({u, v});
    }
  }
  return out;
}

OmegaPartition omega_partition(const CayleyModel& model) { return model.partition(); }

std::vector<Element> edge_difference(const CayleyModel& model, const Edge& e) {
  if (!model.is_legal(e)) throw std::invalid_argument("illegal edge: difference lies in H");
  const AbelianGroup& g = model.group();
  if (e.kind == EdgeKind::short_edge) return {g.sub(e.u, e.v)};
  std::vector<Element> d{g.sub(e.u, e.v), g.sub(e.v, e.u)};
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Element> edge_vertices(const CayleyModel& model, const Edge& e) {
  if (!model.is_legal(e)) throw std::invalid_argument("illegal edge: difference lies in H");
  if (e.kind == EdgeKind::short_edge) return {e.u};
  return {e.u, e.v};
}

std::vector<Edge> edge_orbit(const CayleyModel& model, const Edge& e) {
  if (!model.is_legal(e)) throw std::invalid_argument("illegal edge: difference lies in H");
  const AbelianGroup& g = model.group();
  std::vector<Edge> out;
  for (const Element& t : g.elements()) out.push_back(model.make_edge(g.add(e.u, t), g.add(e.v, t)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string edge_list_text(const CayleyModel& model) {
  std::ostringstream os;
  for (const IndexEdge& e : model.graph_edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace onefact
