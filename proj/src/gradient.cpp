#include "morseshed/gradient.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace morseshed {

GradientVectorField::GradientVectorField(std::shared_ptr<const Pseudomanifold> space,
                                         std::vector<CellPair> vectors)
    : space_(std::move(space)), vectors_(std::move(vectors)) {
  const auto& lat = space_->lattice();
  partner_.assign(lat.size(), kNoSimplex);
  std::sort(vectors_.begin(), vectors_.end());
  for (const auto& [sigma, tau] : vectors_) {
    if (sigma >= lat.size() || tau >= lat.size()) throw DomainError("vector outside the space");
    const auto& f = lat.facets(tau);
    if (!std::binary_search(f.begin(), f.end(), sigma)) {
      throw PreconditionError("({" + lat.at(sigma).to_string() + "}, {" + lat.at(tau).to_string() +
                              "}) is not a facet/coface pair");
    }
    for (SimplexId id : {sigma, tau}) {
      if (partner_[id] != kNoSimplex) {
        throw PreconditionError("simplex {" + lat.at(id).to_string() + "} is in two vectors");
      }
    }
    partner_[sigma] = tau;
    partner_[tau] = sigma;
  }
}

GradientVectorField GradientVectorField::from_simplices(
    std::shared_ptr<const Pseudomanifold> space, const std::vector<std::pair<Simplex, Simplex>>& vectors) {
  std::vector<CellPair> ids;
  ids.reserve(vectors.size());
  for (const auto& [a, b] : vectors) ids.push_back({space->lattice().id_of(a), space->lattice().id_of(b)});
  return GradientVectorField(std::move(space), std::move(ids));
}

bool GradientVectorField::is_tail(SimplexId id) const {
  return partner_[id] != kNoSimplex && partner_[id] > id;
}

bool GradientVectorField::is_head(SimplexId id) const {
  return partner_[id] != kNoSimplex && partner_[id] < id;
}

std::vector<std::pair<Simplex, Simplex>> GradientVectorField::as_simplices() const {
  std::vector<std::pair<Simplex, Simplex>> out;
  const auto& lat = space_->lattice();
  for (const auto& [sigma, tau] : vectors_) out.emplace_back(lat.at(sigma), lat.at(tau));
  return out;
}

GradientVectorField gvf(const ValuedComplex& v, Reading reading) {
  const ValuedComplex g = reading == Reading::stack ? negate(v) : v;
  if (auto cert = check_dmf(g); !cert.valid()) {
    throw PreconditionError(std::string("gvf() needs a ") +
                            (reading == Reading::stack ? "stack whose negation is a DMF" : "DMF") +
                            ": " + cert.violation->describe());
  }
  const auto& lat = v.lattice();
  std::vector<CellPair> vectors;
  for (SimplexId tau = 0; tau < lat.size(); ++tau) {
    for (SimplexId sigma : lat.facets(tau)) {
      if (g[sigma] >= g[tau]) vectors.push_back({sigma, tau});
    }
  }
  return GradientVectorField(v.space_ptr(), std::move(vectors));
}

Criticality classify(const GradientVectorField& g) {
  Criticality out;
  for (SimplexId id = 0; id < g.space().size(); ++id) {
    if (g.is_tail(id)) {
      out.regular_tails.push_back(id);
    } else if (g.is_head(id)) {
      out.regular_heads.push_back(id);
    } else {
      out.critical.push_back(id);
    }
  }
  return out;
}

std::size_t GradientPath::k() const noexcept {
  const std::size_t body = cells.size() - (leading_critical ? 1 : 0);
  return body / 2;
}

bool GradientPath::closed() const noexcept {
  const std::size_t first = leading_critical ? 1 : 0;
  return k() > 0 && cells.back() == cells[first];
}

std::vector<GradientPath> enumerate_gradient_paths(const GradientVectorField& g, SimplexId start, int p,
                                                   std::size_t limit) {
  const auto& lat = g.space().lattice();
  if (start >= lat.size()) throw DomainError("start simplex outside the space");
  const bool critical = g.partner(start) == kNoSimplex && lat.dim(start) == p + 1;
  if (!critical && lat.dim(start) != p) {
    throw PreconditionError("start must be a p-simplex or a critical (p+1)-simplex");
  }

  std::vector<GradientPath> out;
  GradientPath current;
  current.leading_critical = critical;
  std::vector<char> on_path(lat.size(), 0);

  auto emit = [&] {
    if (out.size() >= limit) throw DomainError("gradient path enumeration exceeded its limit");
    out.push_back(current);
  };

  // A path stops at a simplex that is not a tail, or when it reaches a
  // simplex already on it (closed when that simplex is sigma_0).
  std::function<void(SimplexId)> walk = [&](SimplexId sigma) {
    current.cells.push_back(sigma);
    if (on_path[sigma] || !g.is_tail(sigma)) {
      emit();
    } else {
      const SimplexId tau = g.partner(sigma);
      on_path[sigma] = 1;
      current.cells.push_back(tau);
      for (SimplexId next : lat.facets(tau)) {
        if (next != sigma) walk(next);
      }
      current.cells.pop_back();
      on_path[sigma] = 0;
    }
    current.cells.pop_back();
  };

  if (critical) {
    current.cells.push_back(start);
    for (SimplexId sigma0 : lat.facets(start)) walk(sigma0);
  } else {
    walk(start);
  }
  return out;
}

std::optional<ClosedPathWitness> find_closed_path(const GradientVectorField& g) {
  const auto& lat = g.space().lattice();
  const std::size_t n = lat.size();
  // Arcs: tau -> facet, except along a vector where the arc is sigma -> tau.
  auto successors = [&](SimplexId x, std::vector<SimplexId>& out) {
    out.clear();
    if (g.is_tail(x)) out.push_back(g.partner(x));
    for (SimplexId f : lat.facets(x)) {
      if (g.partner(x) != f) out.push_back(f);
    }
  };

  enum : char { white, grey, black };
  std::vector<char> color(n, white);
  std::vector<SimplexId> parent(n, kNoSimplex);
  std::vector<SimplexId> buf;
  struct Frame {
    SimplexId node;
    std::vector<SimplexId> next;
    std::size_t pos;
  };
  for (SimplexId root = 0; root < n; ++root) {
    if (color[root] != white) continue;
    std::vector<Frame> stack;
    successors(root, buf);
    stack.push_back({root, buf, 0});
    color[root] = grey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pos == top.next.size()) {
        color[top.node] = black;
        stack.pop_back();
        continue;
      }
      const SimplexId nxt = top.next[top.pos++];
      if (color[nxt] == grey) {
        // Cycle: nxt ... top.node -> nxt
        std::vector<SimplexId> cycle;
        for (SimplexId x = top.node; x != nxt; x = parent[x]) cycle.push_back(x);
        cycle.push_back(nxt);
        std::reverse(cycle.begin(), cycle.end());
        // Rotate so the cycle starts at a tail (lowest dimension).
        auto lowest = std::min_element(cycle.begin(), cycle.end(), [&](SimplexId a, SimplexId b) {
          return std::make_pair(lat.dim(a), a) < std::make_pair(lat.dim(b), b);
        });
        std::rotate(cycle.begin(), lowest, cycle.end());
        return ClosedPathWitness{std::move(cycle)};
      }
      if (color[nxt] == white) {
        color[nxt] = grey;
        parent[nxt] = top.node;
        successors(nxt, buf);
        stack.push_back({nxt, buf, 0});
      }
    }
  }
  return std::nullopt;
}

bool forman_equivalent(const ValuedComplex& f, const ValuedComplex& g) {
  if (!f.space().same_space(g.space())) {
    throw DomainError("forman_equivalent: functions live on different spaces");
  }
  const auto& lat = f.lattice();
  for (SimplexId tau = 0; tau < lat.size(); ++tau) {
    for (SimplexId sigma : lat.facets(tau)) {
      if ((f[sigma] < f[tau]) != (g[sigma] < g[tau])) return false;
    }
  }
  return true;
}

ValuedComplex basify(const GradientVectorField& v) {
  if (auto cycle = find_closed_path(v)) {
    const auto& lat = v.space().lattice();
    throw PreconditionError("basify() needs an acyclic field; closed path through {" +
                            lat.at(cycle->cycle.front()).to_string() + "}");
  }
  const auto& lat = v.space().lattice();
  const std::size_t n = lat.size();
  // A vector's two simplices form one node keyed by the tail, which is the
  // smaller id.
  auto node = [&](SimplexId id) { return v.is_head(id) ? v.partner(id) : id; };

  std::vector<std::vector<SimplexId>> out_arcs(n);
  std::vector<std::size_t> indegree(n, 0);
  for (SimplexId tau = 0; tau < n; ++tau) {
    for (SimplexId sigma : lat.facets(tau)) {
      if (v.partner(sigma) == tau) continue;
      out_arcs[node(sigma)].push_back(node(tau));
      ++indegree[node(tau)];
    }
  }
  std::priority_queue<SimplexId, std::vector<SimplexId>, std::greater<>> ready;
  std::size_t nodes = 0;
  for (SimplexId id = 0; id < n; ++id) {
    if (node(id) != id) continue;
    ++nodes;
    if (indegree[id] == 0) ready.push(id);
  }
  std::vector<Value> values(n, 0);
  Value next = 0;
  std::size_t done = 0;
  while (!ready.empty()) {
    const SimplexId x = ready.top();
    ready.pop();
    values[x] = next;
    if (v.is_tail(x)) values[v.partner(x)] = next;
    ++next;
    ++done;
    for (SimplexId y : out_arcs[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (done != nodes) throw PreconditionError("basify(): contracted order graph has a cycle");
  return ValuedComplex(v.space_ptr(), std::move(values));
}

ValuedComplex stack_from_field(const GradientVectorField& v) { return negate(basify(v)); }

}  // namespace morseshed
