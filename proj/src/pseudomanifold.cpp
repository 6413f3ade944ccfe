#include "morseshed/pseudomanifold.hpp"

#include <algorithm>
#include <string>

#include "morseshed/union_find.hpp"

namespace morseshed {

std::vector<Violation> PseudomanifoldReport::violations() const {
  std::vector<Violation> out;
  for (const auto* v : {&purity, &degree_two, &connectivity}) {
    if (*v) out.push_back(**v);
  }
  return out;
}

std::pair<std::shared_ptr<const Pseudomanifold>, PseudomanifoldReport> validate_pseudomanifold(
    const Complex& c, int d) {
  if (d < 1) throw DomainError("pseudomanifold dimension must be >= 1, got " + std::to_string(d));
  FaceLattice lattice(c);
  PseudomanifoldReport report;

  // (1) every facet (maximal face) has dimension d
  for (SimplexId id = 0; id < lattice.size(); ++id) {
    if (lattice.cofaces(id).empty() && lattice.dim(id) != d) {
      report.purity = Violation{"(1) purity", {lattice.at(id)},
                                "facet of dimension " + std::to_string(lattice.dim(id)) +
                                    " in a complex expected to have dimension " + std::to_string(d)};
      break;
    }
  }
  if (lattice.dimension() < d && !report.purity) {
    report.purity = Violation{"(1) purity", {}, "complex has no face of dimension " + std::to_string(d)};
  }

  // (2) each (d-1)-face lies in exactly two d-faces
  for (SimplexId id = lattice.first_of(d - 1); id < lattice.first_of(d); ++id) {
    std::size_t n = 0;
    for (SimplexId up : lattice.cofaces(id)) n += lattice.dim(up) == d ? 1 : 0;
    if (n != 2) {
      report.degree_two = Violation{"(2) degree two", {lattice.at(id)},
                                    "(d-1)-face has " + std::to_string(n) + " d-cofaces"};
      break;
    }
  }

  // (3) d-connected
  const SimplexId top_begin = lattice.first_of(d);
  const SimplexId top_end = lattice.first_of(d + 1);
  if (top_end > top_begin) {
    UnionFind uf(top_end - top_begin);
    for (SimplexId id = lattice.first_of(d - 1); id < top_begin; ++id) {
      const auto& up = lattice.cofaces(id);
      for (std::size_t i = 1; i < up.size(); ++i) uf.unite(up[0] - top_begin, up[i] - top_begin);
    }
    for (SimplexId id = top_begin + 1; id < top_end; ++id) {
      if (!uf.same(0, id - top_begin)) {
        report.connectivity = Violation{"(3) d-connectivity", {lattice.at(top_begin), lattice.at(id)},
                                        "no d-path between these d-faces"};
        break;
      }
    }
  }

  if (!report.ok()) return {nullptr, std::move(report)};
  std::shared_ptr<const Pseudomanifold> pm(new Pseudomanifold(std::move(lattice), d));
  return {std::move(pm), std::move(report)};
}

std::shared_ptr<const Pseudomanifold> Pseudomanifold::make(const Complex& c, int d) {
  auto [pm, report] = validate_pseudomanifold(c, d);
  if (!pm) {
    std::string msg = "not a " + std::to_string(d) + "-pseudomanifold:";
    for (const auto& v : report.violations()) msg += " " + v.describe() + ";";
    throw PreconditionError(msg);
  }
  return pm;
}

std::array<SimplexId, 2> Pseudomanifold::wings(SimplexId ridge) const {
  const auto& up = lattice_.cofaces(ridge);
  if (lattice_.dim(ridge) != d_ - 1 || up.size() != 2) {
    throw DomainError("wings() expects a (d-1)-face");
  }
  return {up[0], up[1]};
}

SimplexId Pseudomanifold::opposite(SimplexId ridge, SimplexId top) const {
  const auto w = wings(ridge);
  if (w[0] == top) return w[1];
  if (w[1] == top) return w[0];
  throw DomainError("opposite(): d-face is not a coface of the given (d-1)-face");
}

bool Pseudomanifold::same_space(const Pseudomanifold& other) const noexcept {
  return this == &other || (d_ == other.d_ && lattice_.simplices() == other.lattice_.simplices());
}

std::vector<SimplexId> star_ids(const Pseudomanifold& p, const std::vector<SimplexId>& a) {
  const auto& lat = p.lattice();
  std::vector<char> seen(lat.size(), 0);
  std::vector<SimplexId> stack(a.begin(), a.end());
  std::vector<SimplexId> out;
  while (!stack.empty()) {
    const SimplexId id = stack.back();
    stack.pop_back();
    if (seen[id]) continue;
    seen[id] = 1;
    out.push_back(id);
    for (SimplexId up : lat.cofaces(id)) {
      if (!seen[up]) stack.push_back(up);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplexSet star(const Pseudomanifold& p, const SimplexSet& a) {
  std::vector<SimplexId> ids;
  for (const auto& s : a.sorted()) ids.push_back(p.lattice().id_of(s));
  SimplexSet out;
  for (SimplexId id : star_ids(p, ids)) out.insert(p.lattice().at(id));
  return out;
}

}  // namespace morseshed
