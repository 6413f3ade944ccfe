#include "morseshed/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace morseshed {

SpaceKind parse_space_kind(const std::string& name) {
  if (name == "cycle") return SpaceKind::cycle;
  if (name == "simplex_boundary") return SpaceKind::simplex_boundary;
  if (name == "torus_grid") return SpaceKind::torus_grid;
  throw std::invalid_argument("unknown space kind '" + name +
                              "' (expected cycle, simplex_boundary or torus_grid)");
}

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::cycle: return "cycle";
    case SpaceKind::simplex_boundary: return "simplex_boundary";
    case SpaceKind::torus_grid: return "torus_grid";
  }
  return "?";
}

std::string describe(SpaceKind kind, int n) { return to_string(kind) + "(" + std::to_string(n) + ")"; }

Complex cycle_complex(int n) {
  if (n < 3) throw DomainError("cycle(n) needs n >= 3");
  SimplexSet edges;
  for (int i = 1; i <= n; ++i) {
    edges.insert(Simplex{static_cast<VertexId>(i), static_cast<VertexId>(i % n + 1)});
  }
  return closure(edges);
}

Complex simplex_boundary_complex(int n) {
  if (n < 2) throw DomainError("simplex_boundary(n) needs n >= 2");
  if (n > 20) throw DomainError("simplex_boundary(n) supports n <= 20");
  SimplexSet facets;
  for (int skip = 1; skip <= n + 1; ++skip) {
    std::vector<VertexId> verts;
    for (int v = 1; v <= n + 1; ++v) {
      if (v != skip) verts.push_back(static_cast<VertexId>(v));
    }
    facets.insert(Simplex(std::move(verts)));
  }
  return closure(facets);
}

Complex torus_grid_complex(int n) {
  if (n < 3) throw DomainError("torus_grid(n) needs n >= 3");
  auto vid = [n](int i, int j) {
    return static_cast<VertexId>(((i % n) * n) + (j % n) + 1);
  };
  SimplexSet triangles;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      triangles.insert(Simplex{vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      triangles.insert(Simplex{vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)});
    }
  }
  return closure(triangles);
}

std::shared_ptr<const Pseudomanifold> make_space(SpaceKind kind, int n) {
  switch (kind) {
    case SpaceKind::cycle: return Pseudomanifold::make(cycle_complex(n), 1);
    case SpaceKind::simplex_boundary: return Pseudomanifold::make(simplex_boundary_complex(n), n - 1);
    case SpaceKind::torus_grid: return Pseudomanifold::make(torus_grid_complex(n), 2);
  }
  throw DomainError("unknown space kind");
}

// splitmix64
Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

namespace {

template <class T>
void shuffle(std::vector<T>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[rng.below(i)]);
  }
}

}  // namespace

ValuedComplex random_basic_stack(std::shared_ptr<const Pseudomanifold> space, std::uint64_t seed,
                                 const StackOptions& options) {
  const auto& lat = space->lattice();
  const int d = space->d();
  const std::size_t n = lat.size();
  Rng rng(seed);

  // Distinct random ranks on d-simplices, pushed down as the max over d-cofaces.
  std::vector<std::uint64_t> top_rank(lat.count(d));
  std::iota(top_rank.begin(), top_rank.end(), std::uint64_t{0});
  shuffle(top_rank, rng);
  std::vector<std::uint64_t> high(n, 0);
  for (SimplexId id = lat.first_of(d); id < lat.first_of(d + 1); ++id) high[id] = top_rank[id - lat.first_of(d)];
  for (SimplexId id = lat.first_of(d); id-- > 0;) {
    for (SimplexId c : lat.cofaces(id)) high[id] = std::max(high[id], high[c]);
  }
  std::vector<std::uint64_t> jitter(n);
  for (auto& j : jitter) j = rng.next();
  std::vector<SimplexId> order(n);
  std::iota(order.begin(), order.end(), SimplexId{0});
  std::sort(order.begin(), order.end(), [&](SimplexId a, SimplexId b) {
    return std::make_tuple(high[a], d - lat.dim(a), jitter[a], a) <
           std::make_tuple(high[b], d - lat.dim(b), jitter[b], b);
  });
  std::vector<Value> f(n);
  for (std::size_t r = 0; r < n; ++r) f[order[r]] = static_cast<Value>(r);

  // Random legal merges F(sigma) := F(tau) on unpaired cover pairs.
  std::vector<std::pair<SimplexId, SimplexId>> covers;
  for (SimplexId tau = 0; tau < n; ++tau) {
    for (SimplexId sigma : lat.facets(tau)) covers.emplace_back(sigma, tau);
  }
  shuffle(covers, rng);
  std::vector<char> paired(n, 0);
  std::size_t merges = 0;
  const std::size_t budget = options.max_merges.value_or(covers.size());
  for (const auto& [sigma, tau] : covers) {
    if (merges >= budget) break;
    if (paired[sigma] || paired[tau]) continue;
    bool legal = true;
    for (SimplexId rho : lat.cofaces(sigma)) {
      if (rho != tau && f[rho] >= f[tau]) legal = false;
    }
    for (SimplexId phi : lat.facets(sigma)) {
      if (f[phi] <= f[tau]) legal = false;
    }
    if (!legal) continue;
    f[sigma] = f[tau];
    paired[sigma] = paired[tau] = 1;
    ++merges;
  }

  ValuedComplex out(std::move(space), std::move(f));
  if (auto cert = check_stack(out); !cert.basic()) {
    throw std::logic_error("generated map failed basic-stack certification: " +
                           (cert.violation ? cert.violation->describe() : cert.basic_violation->describe()));
  }
  return out;
}

ValuedComplex generate(const GeneratorSpec& spec, const StackOptions& options) {
  return random_basic_stack(make_space(spec.kind, spec.n), spec.seed, options);
}

}  // namespace morseshed
