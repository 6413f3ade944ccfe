#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "morseshed/complex.hpp"

namespace morseshed {

class Pseudomanifold;

/// Outcome of checking the three pseudomanifold conditions. Each failed
/// condition (purity, exact degree two, d-connectivity) carries the first
/// witness found in canonical order.
struct PseudomanifoldReport {
  std::optional<Violation> purity;
  std::optional<Violation> degree_two;
  std::optional<Violation> connectivity;

  [[nodiscard]] bool ok() const noexcept { return !purity && !degree_two && !connectivity; }
  [[nodiscard]] std::vector<Violation> violations() const;
};

/// A validated d-pseudomanifold. Immutable; share it through
/// std::shared_ptr<const Pseudomanifold>.
class Pseudomanifold {
 public:
  /// Throws DomainError when d < 1 and PreconditionError listing the failed
  /// conditions otherwise.
  static std::shared_ptr<const Pseudomanifold> make(const Complex& c, int d);

  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] const FaceLattice& lattice() const noexcept { return lattice_; }
  [[nodiscard]] std::size_t size() const noexcept { return lattice_.size(); }

  /// The two d-cofaces of a (d-1)-face, in increasing id order.
  [[nodiscard]] std::array<SimplexId, 2> wings(SimplexId ridge) const;

  /// Given a (d-1)-face and one of its d-cofaces, returns the other one.
  [[nodiscard]] SimplexId opposite(SimplexId ridge, SimplexId top) const;

  [[nodiscard]] bool same_space(const Pseudomanifold& other) const noexcept;

 private:
  Pseudomanifold(FaceLattice lattice, int d) : lattice_(std::move(lattice)), d_(d) {}
  friend std::pair<std::shared_ptr<const Pseudomanifold>, PseudomanifoldReport>
  validate_pseudomanifold(const Complex& c, int d);

  FaceLattice lattice_;
  int d_;
};

/// Checks purity, the exact-degree-two condition on (d-1)-faces and
/// d-connectivity. Returns the pseudomanifold when all three hold, plus the
/// report in every case.
std::pair<std::shared_ptr<const Pseudomanifold>, PseudomanifoldReport> validate_pseudomanifold(
    const Complex& c, int d);

/// All simplices of `p` including some member of `a`. Throws DomainError if a
/// member of `a` is not in `p`.
SimplexSet star(const Pseudomanifold& p, const SimplexSet& a);

/// Ids of the star of a set of ids, sorted.
std::vector<SimplexId> star_ids(const Pseudomanifold& p, const std::vector<SimplexId>& a);

}  // namespace morseshed
