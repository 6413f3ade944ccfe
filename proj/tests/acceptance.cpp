// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "morseshed/check_suite.hpp"
#include "morseshed/oracles.hpp"

using namespace morseshed;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// First failure wins; thread-safe.
class Failures {
 public:
  void add(const std::string& what) {
    std::lock_guard lock(mu_);
    if (count_++ == 0) first_ = what;
  }
  [[nodiscard]] std::size_t count() const { return count_; }
  [[nodiscard]] Outcome outcome(const std::string& ok_detail) const {
    if (count_ == 0) return {true, ok_detail};
    return {false, std::to_string(count_) + " failures; first: " + first_};
  }

 private:
  std::mutex mu_;
  std::size_t count_ = 0;
  std::string first_;
};

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

std::string braces(const FaceLattice& lat, SimplexId id) { return "{" + lat.at(id).to_string() + "}"; }

const std::vector<Instance>& corpus() {
  static const std::vector<Instance> c = bundled_corpus(0, 50);
  return c;
}

Outcome forest_equals_msf() {
  const auto start = std::chrono::steady_clock::now();
  Failures bad;
  const auto& c = corpus();
  for (const auto& inst : c) {
    const auto& v = inst.stack;
    const DualGraph dg(v);
    const auto induced = induced_forest(gvf(v, Reading::stack), v);
    const auto kruskal = msf_kruskal_relative(dg, minima_dual_subgraph(v));
    const auto diff = compare_forests(induced, kruskal);
    if (!diff.equal()) {
      bad.add(inst.name + " symmetric difference " +
              std::to_string(diff.only_in_a.size() + diff.only_in_b.size()));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60) bad.add("took " + std::to_string(secs) + " s");
  std::ostringstream detail;
  detail.precision(2);
  detail << std::fixed << c.size() << " stacks, zero symmetric difference, " << secs << " s";
  return bad.outcome(detail.str());
}

Outcome oracle_msf_unique() {
  Failures bad;
  std::atomic<std::size_t> checked{0};
  const auto& c = corpus();
  parallel_for(c.size(), [&](std::size_t i) {
    const auto& v = c[i].stack;
    const DualGraph dg(v);
    if (dg.vertices().size() > oracles::kMsfMaxVertices) return;
    ++checked;
    const auto all = oracles::oracle_msf(dg, minima_dual_subgraph(v));
    const auto a = minimum_spanning_forest(v, Strategy::via_gvf);
    const auto b = minimum_spanning_forest(v, Strategy::via_kruskal);
    if (all.size() != 1) {
      bad.add(c[i].name + ": " + std::to_string(all.size()) + " minimum forests");
    } else if (!(all[0].graph == a.graph) || !(all[0].graph == b.graph)) {
      bad.add(c[i].name + ": enumerated forest differs from production");
    }
  });
  if (checked == 0) bad.add("no instance small enough");
  return bad.outcome(std::to_string(checked.load()) + " instances with <= 12 dual vertices, unique and equal");
}

Outcome watershed_definition() {
  Failures bad;
  const auto& c = corpus();
  parallel_for(c.size(), [&](std::size_t i) {
    const auto& v = c[i].stack;
    const auto cut = watershed_cut(v, Strategy::via_gvf);
    const auto r = oracles::oracle_watershed(v, fixtures::simplices_of(v.lattice(), cut.cut_faces));
    if (!r.pass) bad.add(c[i].name + ": " + r.witness);
  });
  return bad.outcome(std::to_string(c.size()) + " watershed complexes pass extension, minimality and paths");
}

// Breaks a basic stack in one of three ways; every one must break basicness.
ValuedComplex corrupt(const ValuedComplex& v, Rng& rng, int kind) {
  std::vector<Value> f(v.values().begin(), v.values().end());
  const auto& lat = v.lattice();
  const int d = v.d();
  switch (kind) {
    case 0: {  // a face strictly below one of its cofaces
      const SimplexId tau = lat.first_of(1) + SimplexId(rng.below(lat.size() - lat.first_of(1)));
      const SimplexId sigma = lat.facets(tau)[rng.below(lat.facets(tau).size())];
      f[sigma] = f[tau] - 1 - Value(rng.below(3));
      break;
    }
    case 1: {  // two distinct top simplices share a value
      const SimplexId first = lat.first_of(d);
      const SimplexId a = first + SimplexId(rng.below(lat.count(d)));
      SimplexId b = a;
      while (b == a) b = first + SimplexId(rng.below(lat.count(d)));
      f[a] = f[b];
      break;
    }
    default: {  // two simplices off an inclusion share a value
      const SimplexId s = SimplexId(rng.below(lat.size()));
      SimplexId t = s;
      while (t == s || lat.at(s).is_face_of(lat.at(t)) || lat.at(t).is_face_of(lat.at(s))) {
        t = SimplexId(rng.below(lat.size()));
      }
      f[t] = f[s];
      break;
    }
  }
  return ValuedComplex(v.space_ptr(), f);
}

Outcome duality() {
  Failures bad;
  Rng rng(404);
  const auto& c = corpus();
  std::size_t total = 0, corrupted = 0;
  for (std::size_t i = 0; i < 150; ++i) {
    const auto& v = c[(i * 6) % c.size()].stack;
    ++total;
    if (!is_basic_stack(v) || !is_basic_dmf(negate(v))) bad.add(c[(i * 6) % c.size()].name + " verdicts differ");
  }
  for (std::size_t i = 0; i < 50; ++i) {
    const auto& src = c[(i * 17 + 3) % c.size()];
    const auto w = corrupt(src.stack, rng, int(i % 3));
    ++total;
    ++corrupted;
    const bool stack = is_basic_stack(w);
    const bool dmf = is_basic_dmf(negate(w));
    if (stack != dmf) bad.add(src.name + " corruption " + std::to_string(i % 3) + ": verdicts disagree");
    if (stack || dmf) bad.add(src.name + " corruption " + std::to_string(i % 3) + ": not detected");
  }
  return bad.outcome(std::to_string(total) + " valued complexes (" + std::to_string(corrupted) +
                     " corrupted), verdicts agree and corruptions flip both");
}

Outcome acyclicity() {
  Failures bad;
  const auto& c = corpus();
  parallel_for(c.size(), [&](std::size_t i) {
    if (has_closed_path(gvf(c[i].stack, Reading::stack))) bad.add(c[i].name + " has a closed path");
  });
  const auto loop = GradientVectorField::from_simplices(fixtures::square(), {{Simplex{1}, Simplex{1, 2}},
                                                                            {Simplex{2}, Simplex{2, 3}},
                                                                            {Simplex{3}, Simplex{3, 4}},
                                                                            {Simplex{4}, Simplex{1, 4}}});
  const auto w = find_closed_path(loop);
  if (!w) {
    bad.add("planted loop not detected");
  } else if (w->cycle.size() != 8) {
    bad.add("planted loop witness has length " + std::to_string(w->cycle.size()));
  }
  return bad.outcome(std::to_string(c.size()) + " fields acyclic; planted loop found with length-8 witness");
}

ValuedComplex monotone(const ValuedComplex& f, int kind) {
  std::vector<Value> out;
  for (Value x : f.values()) {
    switch (kind % 3) {
      case 0: out.push_back(3 * x + 11); break;
      case 1: out.push_back(x * x * x + x); break;
      default: out.push_back(x < 0 ? x : 5 * x); break;
    }
  }
  return ValuedComplex(f.space_ptr(), out);
}

Outcome forman() {
  Failures bad;
  const auto& c = corpus();
  Rng rng(77);
  for (std::size_t i = 0; i < 100; ++i) {
    const auto f = negate(c[(i * 9) % c.size()].stack);
    const auto g = monotone(f, int(i));
    if (!forman_equivalent(f, g)) bad.add(c[(i * 9) % c.size()].name + " rescale not equivalent");
    if (!(gvf(f, Reading::morse) == gvf(g, Reading::morse))) bad.add(c[(i * 9) % c.size()].name + " rescale changes gvf");
  }
  std::size_t different = 0;
  for (std::size_t i = 0; different < 100 && i < c.size(); ++i) {
    const auto& v = c[(i * 7 + 1) % c.size()].stack;
    const auto field = gvf(v, Reading::stack);
    if (field.empty()) continue;
    auto vectors = field.vectors();
    vectors.erase(vectors.begin() + std::ptrdiff_t(rng.below(vectors.size())));
    const auto g = basify(GradientVectorField(v.space_ptr(), vectors));
    const auto f = negate(v);
    ++different;
    if (forman_equivalent(f, g)) bad.add(c[(i * 7 + 1) % c.size()].name + " different matchings judged equivalent");
    if (gvf(f, Reading::morse) == gvf(g, Reading::morse)) bad.add(c[(i * 7 + 1) % c.size()].name + " gvf unchanged");
  }
  if (different < 100) bad.add("only " + std::to_string(different) + " differing pairs");
  return bad.outcome("100 rescaled pairs equivalent with identical fields; 100 differing pairs rejected");
}

Outcome basification() {
  Failures bad;
  const auto& c = corpus();
  parallel_for(c.size(), [&](std::size_t i) {
    const auto g = gvf(c[i].stack, Reading::stack);
    const auto b = basify(g);
    if (!is_basic_dmf(b)) bad.add(c[i].name + " basify output is not a basic DMF");
    if (!(gvf(b, Reading::morse) == g)) bad.add(c[i].name + " round trip changes the field");
  });
  return bad.outcome(std::to_string(c.size()) + " fields round-trip through basify");
}

Outcome thinness() {
  Failures bad;
  const auto m = make_space(SpaceKind::torus_grid, 6);
  const auto& lat = m->lattice();
  const auto tops = lat.to_complex().simplices().sorted(2);
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Simplex> keep;
    for (const auto& t : tops) {
      if (rng.below(8) != 0) keep.push_back(t);
    }
    if (keep.size() == tops.size()) keep.erase(keep.begin() + std::ptrdiff_t(rng.below(keep.size())));
    if (keep.empty()) keep.push_back(tops[rng.below(tops.size())]);
    const auto x = closure(SimplexSet(keep));
    const auto y = ultimate_d_collapse(x, 2);
    if (y.dimension() != 1) {
      bad.add("trial " + std::to_string(trial) + " (" + std::to_string(keep.size()) + " triangles) ends at dimension " +
              std::to_string(y.dimension()));
    }
  }
  return bad.outcome("100 proper subcomplexes of torus_grid(6) collapse to dimension 1");
}

Outcome minima_structure() {
  Failures bad;
  const auto& c = corpus();
  std::size_t count = 0;
  for (const auto& inst : c) {
    const auto& v = inst.stack;
    for (const auto& mn : minima(v)) {
      ++count;
      if (mn.members.size() != 1 || v.lattice().dim(mn.members[0]) != v.d()) {
        bad.add(inst.name + " minimum at altitude " + std::to_string(mn.altitude) + " has " +
                std::to_string(mn.members.size()) + " simplices");
      }
    }
    if (!minima_dual_subgraph(v).edge_faces.empty()) bad.add(inst.name + " minima subgraph has edges");
  }
  return bad.outcome(std::to_string(count) + " minima, each a single d-simplex; no minima subgraph edges");
}

Outcome gradient_monotone() {
  Failures bad;
  std::atomic<std::size_t> paths{0};
  const auto& c = corpus();
  parallel_for(c.size(), [&](std::size_t i) {
    const auto& v = c[i].stack;
    const auto& lat = v.lattice();
    const auto g = gvf(v, Reading::stack);
    for (SimplexId s = 0; s < lat.size(); ++s) {
      int p;
      if (g.is_tail(s)) {
        p = lat.dim(s);
      } else if (g.partner(s) == kNoSimplex && lat.dim(s) >= 1) {
        p = lat.dim(s) - 1;
      } else {
        continue;
      }
      for (const auto& path : enumerate_gradient_paths(g, s, p)) {
        ++paths;
        for (std::size_t k = 1; k < path.cells.size(); ++k) {
          if (v[path.cells[k - 1]] > v[path.cells[k]]) {
            bad.add(c[i].name + " drops from " + braces(lat, path.cells[k - 1]) + " to " + braces(lat, path.cells[k]));
            return;
          }
        }
      }
    }
  });
  return bad.outcome(std::to_string(paths.load()) + " gradient paths with non-decreasing altitude");
}

Outcome worked_example() {
  Failures bad;
  const auto v = fixtures::s_star();
  const auto& lat = v.lattice();
  auto render = [&](Strategy s) {
    std::string out;
    const auto f = minimum_spanning_forest(v, s);
    const DualGraph dg(v);
    for (auto [a, b] : edges_of_faces(dg, f.graph.edge_faces)) out += braces(lat, a) + "-" + braces(lat, b) + ";";
    out += "|";
    for (SimplexId x : watershed_cut(v, s).cut_faces) out += braces(lat, x) + ";";
    return out;
  };
  const std::string expected = "{1 2}-{2 3};{1 4}-{3 4};|{1};{3};";
  const auto a = render(Strategy::via_gvf);
  const auto b = render(Strategy::via_kruskal);
  if (a != expected) bad.add("via_gvf gave " + a);
  if (b != a) bad.add("strategies differ: " + b);
  if (render(Strategy::via_gvf) != a) bad.add("repeated run differs");
  return bad.outcome("forest {{e12,e23},{e34,e41}}, cut faces {v1},{v3}, identical across strategies and runs");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "induced forest equals Kruskal relative MSF", forest_equals_msf},
      {2, "exhaustive MSF is unique and matches production", oracle_msf_unique},
      {3, "watershed passes the definition oracle", watershed_definition},
      {4, "basic stack iff negation is a basic DMF", duality},
      {5, "gradient fields are acyclic", acyclicity},
      {6, "Forman equivalence", forman},
      {7, "basification round trip", basification},
      {8, "thinness of proper subcomplexes", thinness},
      {9, "minima are single d-simplices", minima_structure},
      {10, "gradient paths are monotone", gradient_monotone},
      {11, "worked square-cycle example", worked_example},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " -- " << o.detail
              << std::endl;
  }
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << (11 - failed) << "/11 criteria" << std::endl;
  return failed ? 1 : 0;
}
