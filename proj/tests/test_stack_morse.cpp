#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"

using namespace morseshed;
using fixtures::id;
using fixtures::s_star;
using fixtures::set_of;

TEST_CASE("the worked stack certifies as a basic stack") {
  const auto v = s_star();
  const auto cert = check_stack(v);
  CHECK(cert.valid());
  CHECK(cert.basic());
  CHECK(v.min_value() == 0);
  CHECK(v.max_value() == 5);
}

TEST_CASE("stack certificates") {
  SUBCASE("constant map is a stack but not basic") {
    const auto v = fixtures::constant(fixtures::tetra_boundary(), 0);
    const auto cert = check_stack(v);
    CHECK(cert.valid());
    CHECK_FALSE(cert.basic());
    CHECK(cert.basic_violation->rule == "not 2-1");
  }
  SUBCASE("a vertex below its edge is a violation") {
    const auto base = s_star();
    auto vals = std::vector<Value>(base.values().begin(), base.values().end());
    vals[id(base, Simplex{1})] = 0;
    vals[id(base, Simplex{1, 2})] = 1;
    const ValuedComplex v(base.space_ptr(), vals);
    const auto cert = check_stack(v);
    REQUIRE_FALSE(cert.valid());
    CHECK(cert.violation->witnesses == std::vector<Simplex>{{1}, {1, 2}});
  }
  SUBCASE("equal values off an inclusion are not basic") {
    const auto m = fixtures::square();
    // v1 and e34 share value 5; everything else distinct and decreasing upward.
    const auto v = ValuedComplex::from_map(m, {{Simplex{1}, 5},
                                               {Simplex{2}, 6},
                                               {Simplex{3}, 7},
                                               {Simplex{4}, 8},
                                               {Simplex{1, 2}, 0},
                                               {Simplex{2, 3}, 1},
                                               {Simplex{3, 4}, 5},
                                               {Simplex{1, 4}, 3}});
    const auto cert = check_stack(v);
    CHECK(cert.valid());
    REQUIRE(cert.basic_violation);
    CHECK(cert.basic_violation->rule == "equal values without inclusion");
  }
}

TEST_CASE("discrete Morse functions") {
  CHECK(is_basic_dmf(negate(s_star())));
  CHECK(negate(negate(s_star())) == s_star());

  // Rank in the (dim, lex) order is an injective, increasing map.
  const auto m = fixtures::tetra_boundary();
  std::vector<Value> rank(m->size());
  for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = Value(i);
  const ValuedComplex r(m, rank);
  CHECK(is_basic_dmf(r));
  CHECK(gvf(r, Reading::morse).empty());

  const auto bad = check_dmf(s_star());
  CHECK_FALSE(bad.valid());
}

TEST_CASE("duality between basic stacks and basic DMFs") {
  for (const auto& v : fixtures::sample_stacks()) {
    CHECK(is_basic_stack(v));
    CHECK(is_basic_dmf(negate(v)));
  }
  // A non-stack: both verdicts fail together.
  const auto base = s_star();
  auto vals = std::vector<Value>(base.values().begin(), base.values().end());
  vals[id(base, Simplex{1})] = -1;
  const ValuedComplex corrupt(base.space_ptr(), vals);
  CHECK_FALSE(is_basic_stack(corrupt));
  CHECK_FALSE(is_basic_dmf(negate(corrupt)));
}

TEST_CASE("sections, minima and divide") {
  const auto v = s_star();
  const auto& lat = v.lattice();
  CHECK(k_section(v, 4).sorted() == std::vector<Simplex>{{1}, {3}});
  CHECK(k_section(v, 0).size() == 8);
  CHECK(k_section(v, 6).empty());

  const auto mins = minima(v);
  REQUIRE(mins.size() == 2);
  CHECK(mins[0].altitude == 0);
  CHECK(fixtures::simplices_of(lat, mins[0].members) == std::vector<Simplex>{{1, 2}});
  CHECK(mins[1].altitude == 1);
  CHECK(fixtures::simplices_of(lat, mins[1].members) == std::vector<Simplex>{{3, 4}});

  const auto div = divide(v);
  CHECK(div.size() == 6);
  CHECK_FALSE(div.contains(Simplex{1, 2}));
  CHECK_FALSE(div.contains(Simplex{3, 4}));

  const auto flat = fixtures::constant(fixtures::tetra_boundary(), 3);
  REQUIRE(minima(flat).size() == 1);
  CHECK(minima(flat)[0].members.size() == flat.size());
  CHECK(divide(flat).empty());
}

TEST_CASE("minima of a tetrahedron stack with distinct triangle values") {
  const auto m = fixtures::tetra_boundary();
  // Triangles 0..3; every lower face takes the max over its triangles.
  std::unordered_map<Simplex, Value, SimplexHash> f{
      {Simplex{1, 2, 3}, 0}, {Simplex{1, 2, 4}, 1}, {Simplex{1, 3, 4}, 2}, {Simplex{2, 3, 4}, 3}};
  for (const auto& s : m->lattice().simplices()) {
    if (s.dim() == 2) continue;
    Value top = 0;
    for (const auto& t : m->lattice().simplices()) {
      if (t.dim() == 2 && s.is_face_of(t)) top = std::max(top, f.at(t));
    }
    f[s] = top;
  }
  const auto v = ValuedComplex::from_map(m, f);
  CHECK(check_stack(v).valid());
  const auto mins = minima(v);
  REQUIRE(mins.size() == 1);
  CHECK(fixtures::simplices_of(v.lattice(), mins[0].members) == std::vector<Simplex>{{1, 2, 3}});
}

TEST_CASE("minima of generated basic stacks are single d-simplices") {
  for (const auto& v : fixtures::sample_stacks()) {
    for (const auto& m : minima(v)) {
      REQUIRE(m.members.size() == 1);
      CHECK(v.lattice().dim(m.members[0]) == v.d());
    }
  }
}

TEST_CASE("stack lowering") {
  const auto v = s_star();
  CHECK(stack_lowering(v, SimplexSet{}) == v);
  const auto all = stack_lowering(v, v.lattice().to_complex().simplices());
  for (SimplexId i = 0; i < v.size(); ++i) CHECK(all[i] == v[i] - 1);

  const auto pair = set_of({{2}, {2, 3}});
  const auto low = stack_lowering(v, pair);
  CHECK(check_stack(low).valid());
  CHECK(low.at(Simplex{2}) == 1);
}

TEST_CASE("stack collapse") {
  const auto v = s_star();
  const auto pairs = free_pairs_for(v);
  CHECK(pairs == std::vector<CellPair>{{id(v, Simplex{2}), id(v, Simplex{2, 3})},
                                       {id(v, Simplex{4}), id(v, Simplex{1, 4})}});
  CHECK(check_stack(elementary_stack_collapse(v, pairs[0])).valid());

  std::size_t steps = 0;
  const auto out = ultimate_stack_collapse(v, [&](const ValuedComplex& w) {
    ++steps;
    CHECK(check_stack(w).valid());
  });
  CHECK(steps > 0);
  CHECK(free_d_pairs_for(out).empty());
  CHECK(check_stack(out).valid());
  // Minima survive with their altitude.
  CHECK(out.at(Simplex{1, 2}) == 0);
  CHECK(out.at(Simplex{3, 4}) == 1);

  const auto flat = fixtures::constant(fixtures::tetra_boundary(), 0);
  CHECK(ultimate_stack_collapse(flat) == flat);
}

TEST_CASE("every intermediate of an ultimate collapse is a stack") {
  for (const auto& v : fixtures::sample_stacks(2)) {
    bool all_stacks = true;
    const auto out = ultimate_stack_collapse(v, [&](const ValuedComplex& w) { all_stacks &= check_stack(w).valid(); });
    CHECK(all_stacks);
    CHECK(free_d_pairs_for(out).empty());
  }
}

TEST_CASE("free pairs for F are gradient vectors (observed, not asserted)") {
  std::size_t pairs = 0, outside = 0;
  for (const auto& v : fixtures::sample_stacks()) {
    const auto g = gvf(v, Reading::stack);
    for (const auto& fp : free_pairs_for(v)) {
      ++pairs;
      if (g.partner(fp.sigma) != fp.tau) {
        ++outside;
        MESSAGE("free pair {" << v.lattice().at(fp.sigma).to_string() << "} < {" << v.lattice().at(fp.tau).to_string()
                              << "} is not a vector");
      }
    }
  }
  MESSAGE(pairs << " free pairs, " << outside << " outside the gradient field");
  WARN(outside == 0);
}
