#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "morseshed/valued.hpp"

namespace morseshed {

enum class SpaceKind { cycle, simplex_boundary, torus_grid };

struct GeneratorSpec {
  SpaceKind kind = SpaceKind::cycle;
  int n = 4;
  std::uint64_t seed = 0;
};

/// "cycle", "simplex_boundary" or "torus_grid"; throws std::invalid_argument.
SpaceKind parse_space_kind(const std::string& name);
std::string to_string(SpaceKind kind);
/// e.g. "torus_grid(4)"
std::string describe(SpaceKind kind, int n);

/// Cycle on vertices 1..n (n >= 3), a 1-pseudomanifold.
Complex cycle_complex(int n);
/// Boundary of the n-simplex on vertices 1..n+1 (n >= 2), an (n-1)-pseudomanifold.
Complex simplex_boundary_complex(int n);
/// n x n vertex grid with wraparound (n >= 3); square (i, j) is split along
/// the diagonal from (i, j) to (i+1, j+1). Vertex (i, j) has id i*n + j + 1.
Complex torus_grid_complex(int n);

/// Builds and validates the space; throws DomainError for n out of range.
std::shared_ptr<const Pseudomanifold> make_space(SpaceKind kind, int n);

/// Minimal deterministic RNG wrapper; the same seed yields the same stream
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct StackOptions {
  /// Upper bound on random pairing merges; unset means try every cover pair once.
  std::optional<std::size_t> max_merges;
};

/// Random basic stack with min value 0. Distinct random ranks on d-simplices
/// propagate to lower faces (strictly decreasing along inclusions), then
/// random legal merges set F(sigma) := F(tau) on cover pairs to create
/// regular pairs. The result is certified; throws std::logic_error if
/// certification fails.
ValuedComplex random_basic_stack(std::shared_ptr<const Pseudomanifold> space, std::uint64_t seed,
                                 const StackOptions& options = {});

ValuedComplex generate(const GeneratorSpec& spec, const StackOptions& options = {});

}  // namespace morseshed
