#include "morseshed/dual_forest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "morseshed/union_find.hpp"

namespace morseshed {

DualGraph::DualGraph(const ValuedComplex& v) : space_(v.space_ptr()) {
  if (auto cert = check_stack(v); !cert.valid()) {
    throw PreconditionError("dual graph needs a stack: " + cert.violation->describe());
  }
  const auto& lat = v.lattice();
  const int d = v.d();
  first_vertex_ = lat.first_of(d);
  first_face_ = lat.first_of(d - 1);
  for (SimplexId id = first_vertex_; id < lat.first_of(d + 1); ++id) vertices_.push_back(id);
  edges_.reserve(lat.count(d - 1));
  for (SimplexId face = first_face_; face < first_vertex_; ++face) {
    const auto w = space_->wings(face);
    edges_.push_back({face, w[0], w[1], v[face]});
  }
}

const DualEdge& DualGraph::edge_at_face(SimplexId face) const {
  if (face < first_face_ || face - first_face_ >= edges_.size()) {
    throw DomainError("not a (d-1)-face of the dual graph's space");
  }
  return edges_[face - first_face_];
}

std::size_t DualGraph::vertex_index(SimplexId top) const {
  if (top < first_vertex_ || top - first_vertex_ >= vertices_.size()) {
    throw DomainError("not a d-face of the dual graph's space");
  }
  return top - first_vertex_;
}

Subgraph minima_dual_subgraph(const ValuedComplex& v) {
  if (auto cert = check_stack(v); !cert.basic()) {
    throw DomainError("dual graph of the minima is only supported for basic stacks");
  }
  const auto& lat = v.lattice();
  Subgraph out;
  std::vector<char> is_min(lat.size(), 0);
  for (const auto& m : minima(v)) {
    for (SimplexId id : m.members) {
      if (lat.dim(id) == v.d()) {
        out.vertices.push_back(id);
        is_min[id] = 1;
      }
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  for (SimplexId face = lat.first_of(v.d() - 1); face < lat.first_of(v.d()); ++face) {
    const auto w = v.space().wings(face);
    if (is_min[w[0]] && is_min[w[1]]) out.edge_faces.push_back(face);
  }
  if (!out.edge_faces.empty()) {
    throw std::logic_error("basic stack whose minima dual graph has an edge");
  }
  return out;
}

RelativeForest induced_forest(const GradientVectorField& g, const ValuedComplex& v) {
  const auto& lat = v.lattice();
  const int d = v.d();
  RelativeForest out;
  out.anchor = minima_dual_subgraph(v);
  out.graph = out.anchor;
  for (SimplexId top = lat.first_of(d); top < lat.first_of(d + 1); ++top) {
    if (!std::binary_search(out.anchor.vertices.begin(), out.anchor.vertices.end(), top) &&
        !g.is_head(top)) {
      throw std::logic_error("d-simplex {" + lat.at(top).to_string() +
                             "} is critical but not a minimum");
    }
    out.graph.vertices.push_back(top);
  }
  for (const auto& [a, b] : g.vectors()) {
    if (lat.dim(a) == d - 1) out.graph.edge_faces.push_back(a);
  }
  std::sort(out.graph.vertices.begin(), out.graph.vertices.end());
  out.graph.vertices.erase(std::unique(out.graph.vertices.begin(), out.graph.vertices.end()),
                           out.graph.vertices.end());
  std::sort(out.graph.edge_faces.begin(), out.graph.edge_faces.end());
  out.graph.edge_faces.erase(std::unique(out.graph.edge_faces.begin(), out.graph.edge_faces.end()),
                             out.graph.edge_faces.end());
  return out;
}

RelativeForest msf_kruskal_relative(const DualGraph& dg, const Subgraph& anchor,
                                    const std::vector<std::size_t>& order) {
  if (anchor.vertices.empty()) throw DomainError("relative MSF needs a nonempty anchor");
  const auto& edges = dg.edges();
  UnionFind uf(dg.vertices().size());
  std::vector<char> marked(dg.vertices().size(), 0);

  RelativeForest out;
  out.anchor = anchor;
  out.graph.vertices = dg.vertices();
  for (SimplexId face : anchor.edge_faces) {
    const auto& e = dg.edge_at_face(face);
    uf.unite(dg.vertex_index(e.a), dg.vertex_index(e.b));
    out.graph.edge_faces.push_back(face);
  }
  for (SimplexId top : anchor.vertices) marked[uf.find(dg.vertex_index(top))] = 1;

  std::vector<char> in_anchor(edges.size(), 0);
  for (SimplexId face : anchor.edge_faces) {
    in_anchor[static_cast<std::size_t>(&dg.edge_at_face(face) - edges.data())] = 1;
  }
  for (std::size_t pos : order) {
    if (in_anchor[pos]) continue;
    const auto& e = edges[pos];
    const std::size_t ra = uf.find(dg.vertex_index(e.a));
    const std::size_t rb = uf.find(dg.vertex_index(e.b));
    if (ra == rb || (marked[ra] && marked[rb])) continue;
    const char m = marked[ra] | marked[rb];
    marked[uf.unite(ra, rb)] = m;
    out.graph.edge_faces.push_back(e.face);
  }
  for (std::size_t i = 0; i < dg.vertices().size(); ++i) {
    if (!marked[uf.find(i)]) throw std::logic_error("dual graph is not connected");
  }
  std::sort(out.graph.edge_faces.begin(), out.graph.edge_faces.end());
  return out;
}

RelativeForest msf_kruskal_relative(const DualGraph& dg, const Subgraph& anchor) {
  const auto& edges = dg.edges();
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(edges[x].weight, edges[x].face) < std::tie(edges[y].weight, edges[y].face);
  });
  return msf_kruskal_relative(dg, anchor, order);
}

std::vector<std::size_t> forest_components(const Subgraph& forest, const DualGraph& dg) {
  const std::size_t n = dg.vertices().size();
  UnionFind uf(n);
  for (SimplexId face : forest.edge_faces) {
    const auto& e = dg.edge_at_face(face);
    uf.unite(dg.vertex_index(e.a), dg.vertex_index(e.b));
  }
  std::vector<std::size_t> label(n);
  std::unordered_map<std::size_t, std::size_t> root_label;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = root_label.emplace(uf.find(i), root_label.size());
    label[i] = it->second;
  }
  return label;
}

std::vector<std::pair<SimplexId, SimplexId>> edges_of_faces(const DualGraph& dg,
                                                            const std::vector<SimplexId>& faces) {
  std::vector<std::pair<SimplexId, SimplexId>> out;
  for (const auto& e : dg.edges()) {
    if (std::find(faces.begin(), faces.end(), e.face) != faces.end()) out.emplace_back(e.a, e.b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MsfCut msf_cut(const RelativeForest& f, const DualGraph& dg) {
  const auto label = forest_components(f.graph, dg);
  MsfCut out;
  SimplexSet faces;
  for (const auto& e : dg.edges()) {
    if (label[dg.vertex_index(e.a)] != label[dg.vertex_index(e.b)]) {
      out.cut_edges.emplace_back(e.a, e.b);
      out.cut_faces.push_back(e.face);
      faces.insert(dg.space().lattice().at(e.face));
    }
  }
  std::sort(out.cut_edges.begin(), out.cut_edges.end());
  std::sort(out.cut_faces.begin(), out.cut_faces.end());
  out.watershed = closure(faces);
  return out;
}

RelativeForest minimum_spanning_forest(const ValuedComplex& v, Strategy strategy) {
  if (v.min_value() < 0) {
    throw DomainError("watershed requires altitudes >= 0; shift F by " + std::to_string(-v.min_value()));
  }
  if (auto cert = check_stack(v); !cert.basic()) {
    throw PreconditionError("watershed requires a basic stack: " +
                            (cert.violation ? cert.violation->describe() : cert.basic_violation->describe()));
  }
  if (strategy == Strategy::via_gvf) return induced_forest(gvf(v, Reading::stack), v);
  return msf_kruskal_relative(DualGraph(v), minima_dual_subgraph(v));
}

MsfCut watershed_cut(const ValuedComplex& v, Strategy strategy) {
  auto forest = minimum_spanning_forest(v, strategy);
  return msf_cut(forest, DualGraph(v));
}

ForestDiff compare_forests(const RelativeForest& a, const RelativeForest& b) {
  ForestDiff out;
  const auto& ea = a.graph.edge_faces;
  const auto& eb = b.graph.edge_faces;
  std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out.only_in_a));
  std::set_difference(eb.begin(), eb.end(), ea.begin(), ea.end(), std::back_inserter(out.only_in_b));
  return out;
}

void write_dot(std::ostream& out, const DualGraph& dg, const RelativeForest* forest, const MsfCut* cut) {
  const auto& lat = dg.space().lattice();
  auto name = [&](SimplexId id) { return "\"" + lat.at(id).to_string() + "\""; };
  auto has = [](const std::vector<SimplexId>& xs, SimplexId x) {
    return std::binary_search(xs.begin(), xs.end(), x);
  };
  out << "graph dual {\n  node [shape=ellipse];\n";
  for (SimplexId top : dg.vertices()) {
    out << "  " << name(top);
    if (forest && has(forest->anchor.vertices, top)) out << " [style=filled, fillcolor=lightgrey]";
    out << ";\n";
  }
  for (const auto& e : dg.edges()) {
    out << "  " << name(e.a) << " -- " << name(e.b) << " [label=\"" << e.weight << "\"";
    if (forest && has(forest->graph.edge_faces, e.face)) out << ", color=blue, penwidth=2";
    if (cut && has(cut->cut_faces, e.face)) out << ", color=red, style=dashed";
    out << "];\n";
  }
  out << "}\n";
}

}  // namespace morseshed
