#include "morseshed/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace morseshed::oracles {

std::string OracleReport::to_line() const {
  std::string out = "CLAIM " + claim + (pass ? " PASS" : " FAIL");
  if (!witness.empty()) out += " " + witness;
  return out;
}

OracleReport pass(std::string claim) { return {std::move(claim), true, {}}; }

OracleReport fail(std::string claim, std::string witness) {
  if (witness.empty()) witness = "(unspecified)";
  return {std::move(claim), false, std::move(witness)};
}

namespace {

using Set = std::set<Simplex>;

std::string braces(const Simplex& s) { return "{" + s.to_string() + "}"; }

// d-components of the d-simplices in `b`, linked when they share a
// (d-1)-simplex that is itself in `b`.
std::vector<Set> d_components(const Set& b, int d) {
  std::vector<Simplex> tops;
  for (const auto& s : b) {
    if (s.dim() == d) tops.push_back(s);
  }
  std::vector<Set> out;
  std::set<Simplex> seen;
  for (const auto& start : tops) {
    if (seen.contains(start)) continue;
    Set comp;
    std::deque<Simplex> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      Simplex x = queue.front();
      queue.pop_front();
      comp.insert(x);
      for (const auto& y : tops) {
        if (seen.contains(y)) continue;
        auto shared = x.intersection(y);
        if (shared && shared->dim() == d - 1 && b.contains(*shared)) {
          seen.insert(y);
          queue.push_back(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Empty optional when `b` is an extension of `a`, otherwise the reason.
std::optional<std::string> extension_failure(const Set& a, const Set& b, int d) {
  if (a.empty() && b.empty()) return std::nullopt;
  if (a.empty() || b.empty()) return "exactly one of the two stars is empty";
  for (const auto& s : a) {
    if (!b.contains(s)) return "not included: " + braces(s);
  }
  const auto comps_a = d_components(a, d);
  for (const auto& cb : d_components(b, d)) {
    std::size_t inside = 0;
    for (const auto& ca : comps_a) {
      if (std::includes(cb.begin(), cb.end(), ca.begin(), ca.end())) ++inside;
    }
    if (inside != 1) {
      return "component of " + braces(*cb.begin()) + " includes " + std::to_string(inside) +
             " components of the smaller star";
    }
  }
  return std::nullopt;
}

Set complement_of_closure(const std::vector<Simplex>& universe, const std::vector<Simplex>& faces) {
  Set out;
  for (const auto& s : universe) {
    bool in_closure = false;
    for (const auto& f : faces) {
      if (s.is_face_of(f)) {
        in_closure = true;
        break;
      }
    }
    if (!in_closure) out.insert(s);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Simplex>> oracle_minima(const ValuedComplex& v) {
  const auto& all = v.lattice().simplices();
  const auto vals = v.values();
  std::vector<Value> levels(vals.begin(), vals.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<std::vector<Simplex>> out;
  for (Value k : levels) {
    std::vector<char> done(all.size(), 0);
    for (std::size_t s = 0; s < all.size(); ++s) {
      if (vals[s] != k || done[s]) continue;
      // Whole component of s in [F <= k]; a minimum when nothing in it is below k.
      std::vector<std::size_t> comp;
      std::deque<std::size_t> queue{s};
      done[s] = 1;
      bool lower = false;
      while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        comp.push_back(x);
        if (vals[x] < k) lower = true;
        for (std::size_t y = 0; y < all.size(); ++y) {
          if (done[y] || vals[y] > k) continue;
          if (!all[x].is_face_of(all[y]) && !all[y].is_face_of(all[x])) continue;
          done[y] = 1;
          queue.push_back(y);
        }
      }
      if (lower) continue;
      std::vector<Simplex> members;
      for (std::size_t x : comp) members.push_back(all[x]);
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RelativeForest> oracle_msf(const DualGraph& dg, const Subgraph& anchor) {
  const auto& verts = dg.vertices();
  const auto& edges = dg.edges();
  if (verts.size() > kMsfMaxVertices || edges.size() > kMsfMaxEdges) {
    throw DomainError("oracle_msf: instance too large for exhaustive enumeration (" +
                      std::to_string(verts.size()) + " vertices, " + std::to_string(edges.size()) +
                      " edges)");
  }
  const std::size_t n = verts.size();
  auto pos = [&](SimplexId top) {
    return static_cast<std::size_t>(std::find(verts.begin(), verts.end(), top) - verts.begin());
  };

  std::vector<std::size_t> fixed;  // anchor edges, always present
  std::vector<std::size_t> free;   // candidate edges
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const bool in_anchor =
        std::find(anchor.edge_faces.begin(), anchor.edge_faces.end(), edges[e].face) != anchor.edge_faces.end();
    (in_anchor ? fixed : free).push_back(e);
  }

  // Label of each vertex in the anchor graph, or -1 outside it.
  auto label_components = [&](const std::vector<std::size_t>& edge_list, std::vector<int>& label) {
    label.assign(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (label[s] >= 0) continue;
      label[s] = next;
      std::vector<std::size_t> stack{s};
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t e : edge_list) {
          const std::size_t a = pos(edges[e].a);
          const std::size_t b = pos(edges[e].b);
          const std::size_t other = a == x ? b : (b == x ? a : n);
          if (other < n && label[other] < 0) {
            label[other] = next;
            stack.push_back(other);
          }
        }
      }
      ++next;
    }
  };
  std::vector<char> in_anchor_vertex(n, 0);
  for (SimplexId top : anchor.vertices) in_anchor_vertex[pos(top)] = 1;
  std::vector<int> anchor_label;
  label_components(fixed, anchor_label);

  const std::size_t m = free.size();
  const std::size_t masks = std::size_t{1} << m;
  std::vector<char> extension(masks, 0);
  std::vector<int> label;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    std::vector<std::size_t> edge_list = fixed;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) edge_list.push_back(free[i]);
    }
    label_components(edge_list, label);
    // Each component of B must include exactly one anchor component.
    std::map<int, std::set<int>> anchors_in;
    for (std::size_t x = 0; x < n; ++x) {
      anchors_in[label[x]];
      if (in_anchor_vertex[x]) anchors_in[label[x]].insert(anchor_label[x]);
    }
    bool ok = true;
    for (const auto& [comp, held] : anchors_in) ok = ok && held.size() == 1;
    extension[mask] = ok;
  }

  // has_sub[mask]: some submask (including mask) is an extension.
  std::vector<char> has_sub = extension;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t mask = 0; mask < masks; ++mask) {
      if (mask >> i & 1) has_sub[mask] |= has_sub[mask ^ (std::size_t{1} << i)];
    }
  }
  std::vector<std::size_t> forests;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    if (!extension[mask]) continue;
    bool proper_sub = false;
    for (std::size_t i = 0; i < m && !proper_sub; ++i) {
      if (mask >> i & 1) proper_sub = has_sub[mask ^ (std::size_t{1} << i)];
    }
    if (!proper_sub) forests.push_back(mask);
  }

  auto weight = [&](std::size_t mask) {
    Value w = 0;
    for (std::size_t e : fixed) w += edges[e].weight;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) w += edges[free[i]].weight;
    }
    return w;
  };
  std::vector<RelativeForest> out;
  if (forests.empty()) return out;
  Value best = weight(forests.front());
  for (std::size_t mask : forests) best = std::min(best, weight(mask));
  for (std::size_t mask : forests) {
    if (weight(mask) != best) continue;
    RelativeForest f;
    f.anchor = anchor;
    f.graph.vertices = verts;
    for (std::size_t e : fixed) f.graph.edge_faces.push_back(edges[e].face);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) f.graph.edge_faces.push_back(edges[free[i]].face);
    }
    std::sort(f.graph.edge_faces.begin(), f.graph.edge_faces.end());
    out.push_back(std::move(f));
  }
  return out;
}

OracleReport oracle_watershed(const ValuedComplex& v, const std::vector<Simplex>& cut) {
  const std::string claim = "watershed";
  const auto& all = v.lattice().simplices();
  const int d = v.d();
  std::map<Simplex, Value> value;
  for (std::size_t i = 0; i < all.size(); ++i) value.emplace(all[i], v.values()[i]);
  for (const auto& x : cut) {
    if (x.dim() != d - 1 || !value.contains(x)) return fail(claim, "not a (d-1)-face: " + braces(x));
  }

  const auto mins = oracle_minima(v);
  Set minima_union;
  for (const auto& m : mins) minima_union.insert(m.begin(), m.end());
  for (const auto& x : cut) {
    if (minima_union.contains(x)) return fail(claim, "cut face inside a minimum: " + braces(x));
  }

  // (a) complement of the closure is an extension of the minima
  const Set rest = complement_of_closure(all, cut);
  if (auto why = extension_failure(minima_union, rest, d)) return fail(claim, "extension: " + *why);

  // (b) minimality under single-face removal
  for (std::size_t i = 0; i < cut.size(); ++i) {
    std::vector<Simplex> smaller = cut;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (!extension_failure(minima_union, complement_of_closure(all, smaller), d)) {
      return fail(claim, "not minimal, removable face " + braces(cut[i]));
    }
  }

  // (c) two descending d-paths from each cut face into distinct minima
  std::vector<Simplex> tops;
  for (const auto& s : all) {
    if (s.dim() == d) tops.push_back(s);
  }
  auto minimum_of = [&](const Simplex& top) -> int {
    for (std::size_t i = 0; i < mins.size(); ++i) {
      if (std::binary_search(mins[i].begin(), mins[i].end(), top)) return static_cast<int>(i);
    }
    return -1;
  };
  const Set closed_cut = [&] {
    Set c;
    for (const auto& s : all) {
      if (!rest.contains(s)) c.insert(s);
    }
    return c;
  }();
  for (const auto& x : cut) {
    std::set<int> reached;
    for (const auto& first : tops) {
      if (!x.is_face_of(first) || value.at(first) > value.at(x)) continue;
      std::set<Simplex> seen{first};
      std::deque<Simplex> queue{first};
      while (!queue.empty()) {
        Simplex y = queue.front();
        queue.pop_front();
        if (int m = minimum_of(y); m >= 0) reached.insert(m);
        for (const auto& z : tops) {
          if (seen.contains(z) || value.at(z) > value.at(y)) continue;
          auto shared = y.intersection(z);
          if (!shared || shared->dim() != d - 1 || closed_cut.contains(*shared)) continue;
          seen.insert(z);
          queue.push_back(z);
        }
      }
    }
    if (reached.size() < 2) {
      return fail(claim, "face " + braces(x) + " reaches " + std::to_string(reached.size()) +
                             " minima by descending paths");
    }
  }
  return pass(claim);
}

std::optional<std::vector<Simplex>> oracle_closed_path(const GradientVectorField& v) {
  const auto pairs = v.as_simplices();
  if (v.space().size() > 10'000) throw DomainError("oracle_closed_path: more than 10^4 simplices");
  std::map<Simplex, Simplex> head_of;
  for (const auto& [tail, head] : pairs) head_of.emplace(tail, head);

  for (const auto& [start, unused] : head_of) {
    // Search sigma -> (head) -> other facet sigma' for a way back to start.
    std::map<Simplex, Simplex> came_from;
    std::deque<Simplex> queue{start};
    std::set<Simplex> seen{start};
    while (!queue.empty()) {
      Simplex sigma = queue.front();
      queue.pop_front();
      const Simplex& tau = head_of.at(sigma);
      for (const auto& next : tau.facets()) {
        if (next == sigma) continue;
        if (next == start) {
          std::vector<Simplex> back;
          for (Simplex s = sigma;; s = came_from.at(s)) {
            back.push_back(head_of.at(s));
            back.push_back(s);
            if (s == start) break;
          }
          std::reverse(back.begin(), back.end());
          return back;
        }
        if (!head_of.contains(next) || seen.contains(next)) continue;
        seen.insert(next);
        came_from.emplace(next, sigma);
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

OracleReport oracle_closed_paths(const GradientVectorField& v) {
  auto cycle = oracle_closed_path(v);
  if (!cycle) return pass("no-closed-path");
  std::string w = "cycle";
  for (const auto& s : *cycle) w += " " + braces(s);
  return fail("no-closed-path", w);
}

OracleReport oracle_extension_after_collapse(const Pseudomanifold& m, const Complex& x, const Complex& y) {
  const std::string claim = "extension-after-collapse";
  const auto& all = m.lattice().simplices();
  Set comp_x;
  Set comp_y;
  for (const auto& s : all) {
    if (!x.contains(s)) comp_x.insert(s);
    if (!y.contains(s)) comp_y.insert(s);
  }
  if (auto why = extension_failure(comp_x, comp_y, m.d())) return fail(claim, *why);
  return pass(claim);
}

}  // namespace morseshed::oracles
