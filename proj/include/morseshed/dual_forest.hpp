#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "morseshed/gradient.hpp"

namespace morseshed {

/// Edge {a, b} between two d-simplices sharing the (d-1)-face `face`.
/// Dual edges and (d-1)-faces are in one-to-one correspondence, so the face
/// id doubles as the edge id.
struct DualEdge {
  SimplexId face;
  SimplexId a;  // a < b
  SimplexId b;
  Value weight;  // F(face)
};

/// Edge-weighted graph on the d-simplices of a stack's space.
class DualGraph {
 public:
  /// Throws PreconditionError when `v` is not a stack.
  explicit DualGraph(const ValuedComplex& v);

  [[nodiscard]] const Pseudomanifold& space() const noexcept { return *space_; }
  [[nodiscard]] const std::shared_ptr<const Pseudomanifold>& space_ptr() const noexcept { return space_; }

  /// d-simplex ids, increasing.
  [[nodiscard]] const std::vector<SimplexId>& vertices() const noexcept { return vertices_; }
  /// Ordered by face id.
  [[nodiscard]] const std::vector<DualEdge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const DualEdge& edge_at_face(SimplexId face) const;
  /// Position of a d-simplex in vertices().
  [[nodiscard]] std::size_t vertex_index(SimplexId top) const;

 private:
  std::shared_ptr<const Pseudomanifold> space_;
  std::vector<SimplexId> vertices_;
  std::vector<DualEdge> edges_;
  SimplexId first_vertex_ = 0;
  SimplexId first_face_ = 0;
};

/// Vertices (d-simplex ids) and edges (face ids) of a subgraph, both sorted.
struct Subgraph {
  std::vector<SimplexId> vertices;
  std::vector<SimplexId> edge_faces;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

struct RelativeForest {
  Subgraph graph;
  Subgraph anchor;
};

/// Dual graph of the minima: d-faces of the minima and the dual edges
/// joining two of them. Throws DomainError for a stack that is not basic.
Subgraph minima_dual_subgraph(const ValuedComplex& v);

/// Forest induced by a gradient field: for each vector (a, b) with
/// dim(a) = d-1, the dual edge between b and the other d-coface of a, united
/// with the dual graph of the minima. Throws std::logic_error if some
/// d-simplex is neither a head nor a minimum.
RelativeForest induced_forest(const GradientVectorField& g, const ValuedComplex& v);

/// Kruskal over edges sorted by (weight, face id); an edge is rejected when
/// it would close a cycle or join two components that already hold an anchor
/// component. Throws DomainError for an empty anchor.
RelativeForest msf_kruskal_relative(const DualGraph& dg, const Subgraph& anchor);

/// Same as above with the edges visited in `order` (a permutation of
/// dg.edges() positions) instead of sorted order. Used to check that ties
/// never arise.
RelativeForest msf_kruskal_relative(const DualGraph& dg, const Subgraph& anchor,
                                    const std::vector<std::size_t>& order);

/// Component label (0-based, by smallest member) for each entry of
/// dg.vertices().
std::vector<std::size_t> forest_components(const Subgraph& forest, const DualGraph& dg);

struct MsfCut {
  std::vector<std::pair<SimplexId, SimplexId>> cut_edges;  // (a, b), a < b, sorted
  std::vector<SimplexId> cut_faces;                        // sorted
  Complex watershed;                                       // closure of cut_faces
};

/// Edges(S): dual edges whose shared face lies in `faces`, sorted.
std::vector<std::pair<SimplexId, SimplexId>> edges_of_faces(const DualGraph& dg,
                                                            const std::vector<SimplexId>& faces);

MsfCut msf_cut(const RelativeForest& f, const DualGraph& dg);

enum class Strategy { via_gvf, via_kruskal };

/// Throws DomainError when min F < 0 (shift F first) and
/// PreconditionError when `v` is not a basic stack.
MsfCut watershed_cut(const ValuedComplex& v, Strategy strategy);

/// Forest by strategy, with the same preconditions as watershed_cut.
RelativeForest minimum_spanning_forest(const ValuedComplex& v, Strategy strategy);

struct ForestDiff {
  std::vector<SimplexId> only_in_a;  // edge faces
  std::vector<SimplexId> only_in_b;

  [[nodiscard]] bool equal() const noexcept { return only_in_a.empty() && only_in_b.empty(); }
};

ForestDiff compare_forests(const RelativeForest& a, const RelativeForest& b);

/// Graphviz rendering of the dual graph. Forest edges are drawn blue and
/// bold, cut edges red and dashed, minima vertices filled light grey.
void write_dot(std::ostream& out, const DualGraph& dg, const RelativeForest* forest, const MsfCut* cut);

}  // namespace morseshed
