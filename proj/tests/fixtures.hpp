#pragma once

#include <memory>
#include <vector>

#include "morseshed/generators.hpp"
#include "morseshed/gradient.hpp"
#include "morseshed/valued.hpp"

namespace fixtures {

using namespace morseshed;

inline SimplexSet set_of(std::initializer_list<Simplex> xs) { return SimplexSet(std::vector<Simplex>(xs)); }

inline std::shared_ptr<const Pseudomanifold> space_of(std::initializer_list<Simplex> tops, int d) {
  return Pseudomanifold::make(closure(set_of(tops)), d);
}

inline std::shared_ptr<const Pseudomanifold> square() { return space_of({{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 1); }

inline std::shared_ptr<const Pseudomanifold> tetra_boundary() {
  return space_of({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, 2);
}

// The worked square-cycle stack.
inline ValuedComplex s_star() {
  return ValuedComplex::from_map(square(), {{Simplex{1, 2}, 0},
                                            {Simplex{3, 4}, 1},
                                            {Simplex{2}, 2},
                                            {Simplex{2, 3}, 2},
                                            {Simplex{4}, 3},
                                            {Simplex{1, 4}, 3},
                                            {Simplex{1}, 4},
                                            {Simplex{3}, 5}});
}

inline ValuedComplex constant(const std::shared_ptr<const Pseudomanifold>& m, Value c) {
  return ValuedComplex(m, std::vector<Value>(m->size(), c));
}

inline SimplexId id(const ValuedComplex& v, const Simplex& s) { return v.lattice().id_of(s); }

inline std::vector<Simplex> simplices_of(const FaceLattice& lat, const std::vector<SimplexId>& ids) {
  std::vector<Simplex> out;
  for (SimplexId i : ids) out.push_back(lat.at(i));
  return out;
}

// A handful of generated basic stacks across every space family.
inline std::vector<ValuedComplex> sample_stacks(std::size_t per_space = 5) {
  std::vector<ValuedComplex> out;
  const std::pair<SpaceKind, int> spaces[] = {{SpaceKind::cycle, 5},
                                              {SpaceKind::cycle, 9},
                                              {SpaceKind::simplex_boundary, 3},
                                              {SpaceKind::simplex_boundary, 4},
                                              {SpaceKind::torus_grid, 3},
                                              {SpaceKind::torus_grid, 5}};
  for (auto [kind, n] : spaces) {
    auto m = make_space(kind, n);
    for (std::size_t s = 0; s < per_space; ++s) out.push_back(random_basic_stack(m, 1000 + s));
  }
  return out;
}

}  // namespace fixtures
