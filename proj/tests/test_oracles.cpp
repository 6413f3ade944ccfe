#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "morseshed/check_suite.hpp"
#include "morseshed/oracles.hpp"

using namespace morseshed;
using namespace morseshed::oracles;
using fixtures::s_star;
using fixtures::set_of;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// A random matching of cover pairs; may or may not be acyclic.
GradientVectorField random_matching(const std::shared_ptr<const Pseudomanifold>& m, Rng& rng) {
  const auto& lat = m->lattice();
  std::vector<CellPair> covers;
  for (SimplexId t = 0; t < lat.size(); ++t) {
    for (SimplexId f : lat.facets(t)) covers.push_back({f, t});
  }
  for (std::size_t i = covers.size(); i > 1; --i) std::swap(covers[i - 1], covers[rng.below(i)]);
  std::vector<char> used(lat.size(), 0);
  std::vector<CellPair> picked;
  for (const auto& c : covers) {
    if (used[c.sigma] || used[c.tau] || rng.below(3) == 0) continue;
    used[c.sigma] = used[c.tau] = 1;
    picked.push_back(c);
  }
  return GradientVectorField(m, picked);
}

}  // namespace

TEST_CASE("report lines") {
  CHECK(pass("x").to_line() == "CLAIM x PASS");
  CHECK(fail("x", "why").to_line() == "CLAIM x FAIL why");
}

TEST_CASE("oracle minima follow the definition") {
  const auto mins = oracle_minima(s_star());
  CHECK(mins == std::vector<std::vector<Simplex>>{{{1, 2}}, {{3, 4}}});
  for (const auto& v : fixtures::sample_stacks(3)) {
    std::vector<std::vector<Simplex>> produced;
    for (const auto& m : minima(v)) produced.push_back(fixtures::simplices_of(v.lattice(), m.members));
    std::sort(produced.begin(), produced.end());
    CHECK(produced == oracle_minima(v));
  }
}

TEST_CASE("exhaustive MSF on the worked stack") {
  const auto v = s_star();
  const DualGraph dg(v);
  const auto all = oracle_msf(dg, minima_dual_subgraph(v));
  REQUIRE(all.size() == 1);
  CHECK(all[0].graph == minimum_spanning_forest(v, Strategy::via_gvf).graph);
  Value total = 0;
  for (SimplexId f : all[0].graph.edge_faces) total += dg.edge_at_face(f).weight;
  CHECK(total == 5);
}

TEST_CASE("exhaustive MSF is unique on small generated stacks") {
  for (int n = 4; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto v = random_basic_stack(make_space(SpaceKind::cycle, n), seed);
      const DualGraph dg(v);
      const auto all = oracle_msf(dg, minima_dual_subgraph(v));
      REQUIRE(all.size() == 1);
      CHECK(all[0].graph == minimum_spanning_forest(v, Strategy::via_kruskal).graph);
    }
  }
  const auto big = random_basic_stack(make_space(SpaceKind::torus_grid, 4), 1);
  CHECK_THROWS_AS(oracle_msf(DualGraph(big), minima_dual_subgraph(big)), DomainError);
}

TEST_CASE("watershed oracle") {
  const auto v = s_star();
  CHECK(oracle_watershed(v, {Simplex{1}, Simplex{3}}).pass);

  const auto empty = oracle_watershed(v, {});
  CHECK_FALSE(empty.pass);
  CHECK(starts_with(empty.witness, "extension"));

  const auto edge = oracle_watershed(v, {Simplex{1, 2}});
  CHECK_FALSE(edge.pass);
}

TEST_CASE("watershed oracle catches a redundant cut face") {
  // An extra face either splits a region (extension fails) or closes a
  // cycle inside one, in which case that very face is removable.
  std::size_t redundant = 0, splitting = 0;
  for (std::uint64_t seed = 0; seed < 40 && redundant == 0; ++seed) {
    const auto v = random_basic_stack(make_space(SpaceKind::torus_grid, 5), seed);
    const auto& lat = v.lattice();
    const auto cut = watershed_cut(v, Strategy::via_gvf);
    const auto faces = fixtures::simplices_of(lat, cut.cut_faces);
    REQUIRE(oracle_watershed(v, faces).pass);
    for (SimplexId f = lat.first_of(v.d() - 1); f < lat.first_of(v.d()); ++f) {
      if (std::binary_search(cut.cut_faces.begin(), cut.cut_faces.end(), f)) continue;
      auto extra = faces;
      extra.push_back(lat.at(f));
      const auto r = oracle_watershed(v, extra);
      CHECK_FALSE(r.pass);
      if (starts_with(r.witness, "not minimal")) {
        ++redundant;
        CHECK(r.witness == "not minimal, removable face {" + lat.at(f).to_string() + "}");
      } else {
        ++splitting;
        CHECK(starts_with(r.witness, "extension"));
      }
    }
  }
  CHECK(splitting > 0);
  CHECK(redundant > 0);
}

TEST_CASE("closed path oracle") {
  const auto loop = GradientVectorField::from_simplices(fixtures::square(), {{Simplex{1}, Simplex{1, 2}},
                                                                            {Simplex{2}, Simplex{2, 3}},
                                                                            {Simplex{3}, Simplex{3, 4}},
                                                                            {Simplex{4}, Simplex{1, 4}}});
  const auto cycle = oracle_closed_path(loop);
  REQUIRE(cycle);
  CHECK(cycle->size() == 8);
  CHECK_FALSE(oracle_closed_paths(loop).pass);
  CHECK(oracle_closed_paths(gvf(s_star(), Reading::stack)).pass);
}

TEST_CASE("closed path detection agrees with the oracle on random matchings") {
  Rng rng(2024);
  const std::shared_ptr<const Pseudomanifold> spaces[] = {make_space(SpaceKind::cycle, 6),
                                                          make_space(SpaceKind::simplex_boundary, 3),
                                                          make_space(SpaceKind::simplex_boundary, 4),
                                                          make_space(SpaceKind::torus_grid, 3)};
  std::size_t cyclic = 0;
  for (int i = 0; i < 500; ++i) {
    const auto g = random_matching(spaces[i % 4], rng);
    const bool production = has_closed_path(g);
    CHECK(production == oracle_closed_path(g).has_value());
    cyclic += production;
  }
  CHECK(cyclic > 0);
  CHECK(cyclic < 500);
}

TEST_CASE("extension after collapse") {
  const auto m = fixtures::tetra_boundary();
  const auto x = closure(set_of({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
  const auto first = free_d_pairs(x, 2).front();
  CHECK(oracle_extension_after_collapse(*m, x, elementary_collapse(x, first)).pass);
  CHECK(oracle_extension_after_collapse(*m, x, ultimate_d_collapse(x, 2)).pass);

  // Fault injection on the square: dropping v3 from X merges the two regions.
  const auto sq = fixtures::square();
  const auto two = closure(set_of({{1}, {3}}));
  const auto one = closure(set_of({{1}}));
  CHECK(oracle_extension_after_collapse(*sq, two, two).pass);
  const auto bad = oracle_extension_after_collapse(*sq, two, one);
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.find("includes 2 components") != std::string::npos);
}

TEST_CASE("check suite on the worked stack") {
  const auto reports = check_instance({"s_star", s_star()});
  CHECK(reports.size() == 11);
  for (const auto& r : reports) {
    INFO(r.to_line());
    CHECK(r.pass);
    CHECK(r.claim.find("@s_star") != std::string::npos);
  }
}

TEST_CASE("check suite keeps corpus order across threads") {
  auto corpus = bundled_corpus(7, 1);
  corpus.erase(corpus.begin() + 6, corpus.end());
  const auto one = run_checks(corpus, 1);
  const auto four = run_checks(corpus, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].to_line() == four[i].to_line());
    CHECK(one[i].pass);
  }
}
