#pragma once

// K_{m x n} realized as the Cayley graph Cay(G, Omega) with Omega = G \ H.
// Vertices are group elements; the parts are the cosets of H.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "onefact/abelian_group.hpp"
#include "onefact/indexed_group.hpp"

namespace onefact {

enum class EdgeKind { short_edge, long_edge };

/// Unordered pair stored with u < v. Short iff v - u is an involution.
struct Edge {
  Element u;
  Element v;
  EdgeKind kind = EdgeKind::long_edge;

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

/// Edge between vertex indices, u < v.
struct IndexEdge {
  Index u = 0;
  Index v = 0;
  friend auto operator<=>(const IndexEdge&, const IndexEdge&) = default;
  friend bool operator==(const IndexEdge&, const IndexEdge&) = default;
};

struct OmegaPartition {
  std::vector<Element> omega1;        // involutions in Omega
  std::vector<Element> omega2;        // lesser of each {g, -g}
  std::vector<Element> omega2_prime;  // negatives of omega2
};

class CayleyModel {
 public:
  CayleyModel(AbelianGroup group, Subgroup h);

  const AbelianGroup& group() const { return group_; }
  const Subgroup& H() const { return h_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  std::int64_t order() const { return group_.order(); }
  /// Regular degree mn - n.
  std::int64_t degree() const { return order() - n_; }
  std::int64_t edge_count() const { return order() * degree() / 2; }

  const std::vector<Element>& omega() const { return omega_; }
  const OmegaPartition& partition() const { return partition_; }
  bool in_omega(const Element& a) const;
  bool in_H(const Element& a) const { return h_.contains(a); }

  /// Canonical edge; throws std::invalid_argument unless u - v lies in Omega.
  Edge make_edge(const Element& a, const Element& b) const;
  /// Canonical edge without the legality check (verification reports it).
  Edge make_edge_unchecked(const Element& a, const Element& b) const;
  bool is_legal(const Edge& e) const;

  const IndexedGroup& indexed() const { return *indexed_; }
  Index vertex_index(const Element& a) const { return static_cast<Index>(group_.index_of(a)); }
  IndexEdge index_edge(const Edge& e) const { return {vertex_index(e.u), vertex_index(e.v)}; }
  /// Omega membership by element index.
  const std::vector<char>& omega_mask() const { return omega_mask_; }

  /// Every edge of the graph, ascending.
  std::vector<IndexEdge> graph_edges() const;

 private:
  AbelianGroup group_;
  Subgroup h_;
  std::int64_t m_ = 0;
  std::int64_t n_ = 0;
  std::vector<Element> omega_;
  OmegaPartition partition_;
  std::shared_ptr<const IndexedGroup> indexed_;
  std::vector<char> omega_mask_;
};

/// Throws std::invalid_argument unless 2 <= |H| < |G|.
CayleyModel build_model(const AbelianGroup& group, const Subgroup& h);

OmegaPartition omega_partition(const CayleyModel& model);

/// The difference map: {u-v, v-u} for long edges, {u-v} for short ones.
std::vector<Element> edge_difference(const CayleyModel& model, const Edge& e);

/// The vertex map: {u, v} for long edges, {u} for short ones.
std::vector<Element> edge_vertices(const CayleyModel& model, const Edge& e);

/// All translates e + g, canonical and ascending.
std::vector<Edge> edge_orbit(const CayleyModel& model, const Edge& e);

/// Plain-text export: "u v" per line, ascending mixed-radix indices.
std::string edge_list_text(const CayleyModel& model);

}  // namespace onefact
