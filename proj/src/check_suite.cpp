#include "morseshed/check_suite.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace morseshed {

using oracles::fail;
using oracles::OracleReport;
using oracles::pass;

std::vector<Instance> bundled_corpus(std::uint64_t base_seed, std::size_t seeds) {
  struct Range {
    SpaceKind kind;
    int lo, hi;
  };
  const Range ranges[] = {{SpaceKind::cycle, 4, 12},
                          {SpaceKind::simplex_boundary, 3, 5},
                          {SpaceKind::torus_grid, 3, 8}};
  std::vector<Instance> out;
  for (const auto& r : ranges) {
    for (int n = r.lo; n <= r.hi; ++n) {
      auto space = make_space(r.kind, n);
      for (std::size_t i = 0; i < seeds; ++i) {
        const std::uint64_t seed = base_seed + i;
        out.push_back({describe(r.kind, n) + "#seed=" + std::to_string(seed),
                       random_basic_stack(space, seed)});
      }
    }
  }
  return out;
}

namespace {

std::string faces_text(const FaceLattice& lat, const std::vector<SimplexId>& ids) {
  std::string out;
  for (SimplexId id : ids) out += (out.empty() ? "{" : " {") + lat.at(id).to_string() + "}";
  return out.empty() ? "(none)" : out;
}

}  // namespace

std::vector<OracleReport> check_instance(const Instance& instance) {
  const auto& v = instance.stack;
  const auto& lat = v.lattice();
  const int d = v.d();
  std::vector<OracleReport> out;
  auto claim = [&](const std::string& id) { return id + "@" + instance.name; };
  auto record = [&](const std::string& id, bool ok, const std::string& witness) {
    out.push_back(ok ? pass(claim(id)) : fail(claim(id), witness));
  };

  const auto cert = check_stack(v);
  record("basic-stack", cert.basic(),
         cert.violation ? cert.violation->describe()
                        : (cert.basic_violation ? cert.basic_violation->describe() : ""));
  if (!cert.basic()) return out;

  record("duality", is_basic_dmf(negate(v)), "negation is not a basic DMF");

  // Minima: agree with the definition, one d-simplex each, no dual edges.
  const auto mins = minima(v);
  const auto naive = oracles::oracle_minima(v);
  std::vector<std::vector<Simplex>> produced;
  for (const auto& m : mins) {
    std::vector<Simplex> s;
    for (SimplexId id : m.members) s.push_back(lat.at(id));
    produced.push_back(std::move(s));
  }
  std::sort(produced.begin(), produced.end());
  record("minima-definition", produced == naive, "production and brute-force minima differ");
  bool singletons = true;
  for (const auto& m : mins) singletons = singletons && m.members.size() == 1 && lat.dim(m.members[0]) == d;
  record("minima-single-simplex", singletons, "a minimum is not a single d-simplex");

  const auto g = gvf(v, Reading::stack);
  const bool cyclic = has_closed_path(g);
  const bool oracle_cyclic = oracles::oracle_closed_path(g).has_value();
  record("gvf-acyclic", !cyclic && !oracle_cyclic,
         "closed path found (production=" + std::to_string(cyclic) + ", oracle=" +
             std::to_string(oracle_cyclic) + ")");

  const DualGraph dg(v);
  const auto anchor = minima_dual_subgraph(v);
  const auto induced = induced_forest(g, v);
  const auto kruskal = msf_kruskal_relative(dg, anchor);
  const auto diff = compare_forests(induced, kruskal);
  record("forest-equals-msf", diff.equal(),
         "only induced: " + faces_text(lat, diff.only_in_a) + "; only kruskal: " +
             faces_text(lat, diff.only_in_b));

  if (dg.vertices().size() <= oracles::kMsfMaxVertices && dg.edges().size() <= oracles::kMsfMaxEdges) {
    const auto all = oracles::oracle_msf(dg, anchor);
    const bool ok = all.size() == 1 && all[0].graph == induced.graph && all[0].graph == kruskal.graph;
    record("oracle-msf", ok, std::to_string(all.size()) + " minimum forests; first " +
                                 (all.empty() ? std::string("(none)") : faces_text(lat, all[0].graph.edge_faces)));
  }

  const auto cut_gvf = msf_cut(induced, dg);
  const auto cut_kruskal = msf_cut(kruskal, dg);
  record("cut-strategies-agree",
         cut_gvf.cut_faces == cut_kruskal.cut_faces && cut_gvf.watershed == cut_kruskal.watershed,
         "via_gvf " + faces_text(lat, cut_gvf.cut_faces) + " vs via_kruskal " +
             faces_text(lat, cut_kruskal.cut_faces));
  std::vector<Simplex> cut_faces;
  for (SimplexId f : cut_gvf.cut_faces) cut_faces.push_back(lat.at(f));
  auto ws = oracles::oracle_watershed(v, cut_faces);
  record("watershed", ws.pass, ws.witness);

  const auto rebuilt = basify(g);
  record("basify-roundtrip", is_basic_dmf(rebuilt) && gvf(rebuilt, Reading::morse) == g,
         "gvf(basify(V)) differs from V or is not basic");

  // Altitude never decreases along any gradient path.
  bool monotone = true;
  std::string where;
  for (SimplexId s = 0; s < lat.size() && monotone; ++s) {
    int p;
    if (g.is_tail(s)) {
      p = lat.dim(s);
    } else if (g.partner(s) == kNoSimplex && lat.dim(s) >= 1) {
      p = lat.dim(s) - 1;
    } else {
      continue;
    }
    for (const auto& path : enumerate_gradient_paths(g, s, p)) {
      for (std::size_t i = 1; i < path.cells.size(); ++i) {
        if (v[path.cells[i - 1]] > v[path.cells[i]]) {
          monotone = false;
          where = "from {" + lat.at(path.cells[i - 1]).to_string() + "} to {" +
                  lat.at(path.cells[i]).to_string() + "}";
          break;
        }
      }
      if (!monotone) break;
    }
  }
  record("gradient-monotone", monotone, where);
  return out;
}

std::vector<OracleReport> run_checks(const std::vector<Instance>& corpus, unsigned threads) {
  std::vector<std::vector<OracleReport>> per(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        per[i] = check_instance(corpus[i]);
      } catch (const std::exception& e) {
        per[i] = {fail("exception@" + corpus[i].name, e.what())};
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<OracleReport> out;
  for (auto& p : per) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace morseshed
