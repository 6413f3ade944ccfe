#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "morseshed/pseudomanifold.hpp"

namespace morseshed {

using Value = std::int64_t;

/// A total integer map on the simplices of a pseudomanifold. Read as a
/// simplicial stack or as a discrete Morse function depending on context.
class ValuedComplex {
 public:
  /// `values[id]` is the altitude of lattice simplex `id`. Throws
  /// DomainError if the size does not match.
  ValuedComplex(std::shared_ptr<const Pseudomanifold> space, std::vector<Value> values);

  /// Throws DomainError naming the first simplex without a value.
  static ValuedComplex from_map(std::shared_ptr<const Pseudomanifold> space,
                                const std::unordered_map<Simplex, Value, SimplexHash>& values);

  [[nodiscard]] const Pseudomanifold& space() const noexcept { return *space_; }
  [[nodiscard]] const std::shared_ptr<const Pseudomanifold>& space_ptr() const noexcept { return space_; }
  [[nodiscard]] const FaceLattice& lattice() const noexcept { return space_->lattice(); }
  [[nodiscard]] int d() const noexcept { return space_->d(); }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  [[nodiscard]] Value operator[](SimplexId id) const { return values_[id]; }
  [[nodiscard]] Value at(const Simplex& s) const { return values_[lattice().id_of(s)]; }
  [[nodiscard]] std::span<const Value> values() const noexcept { return values_; }
  [[nodiscard]] Value min_value() const;
  [[nodiscard]] Value max_value() const;

  friend bool operator==(const ValuedComplex& a, const ValuedComplex& b) {
    return a.space_->same_space(*b.space_) && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const Pseudomanifold> space_;
  std::vector<Value> values_;
};

/// Result of certifying a valued complex as a stack or as a DMF.
/// `violation` is set iff the map is not a stack (resp. DMF) at all;
/// `basic_violation` is set iff it is valid but not basic.
struct Certificate {
  std::optional<Violation> violation;
  std::optional<Violation> basic_violation;

  [[nodiscard]] bool valid() const noexcept { return !violation; }
  [[nodiscard]] bool basic() const noexcept { return !violation && !basic_violation; }
};

/// sigma ⊆ tau implies F(sigma) >= F(tau); basic adds 2-1 and
/// "equal values only along an inclusion".
Certificate check_stack(const ValuedComplex& v);

/// Both cardinality bounds at every simplex: at most one facet with
/// F(facet) >= F(sigma) and at most one coface with F(coface) <= F(sigma).
/// Basic means weakly increasing, 2-1, equal values only along an inclusion.
Certificate check_dmf(const ValuedComplex& v);

bool is_basic_stack(const ValuedComplex& v);
bool is_basic_dmf(const ValuedComplex& v);

ValuedComplex negate(const ValuedComplex& v);

/// {sigma | F(sigma) >= k}
SimplexSet k_section(const ValuedComplex& v, Value k);

struct Minimum {
  Value altitude;
  std::vector<SimplexId> members;  // sorted ids
};

/// Connected components A of [F <= k] (incidence connectivity) with
/// A ∩ [F <= k-1] empty, ordered by smallest member. Throws
/// PreconditionError when `v` is not a stack.
std::vector<Minimum> minima(const ValuedComplex& v);

/// Sorted union of all minima members, M-(F).
std::vector<SimplexId> minima_union(const std::vector<Minimum>& mins);

/// Complement of M-(F); always a complex for a stack.
Complex divide(const ValuedComplex& v);

/// F - 1_N
ValuedComplex stack_lowering(const ValuedComplex& v, const SimplexSet& n);
ValuedComplex stack_lowering(const ValuedComplex& v, std::span<const SimplexId> n);

/// A pair of lattice ids (sigma, tau) with sigma a facet of tau.
struct CellPair {
  SimplexId sigma;
  SimplexId tau;

  friend bool operator==(const CellPair&, const CellPair&) = default;
  friend auto operator<=>(const CellPair&, const CellPair&) = default;
};

/// Pairs (sigma, tau) where sigma is a free face of the section
/// [F >= F(sigma)] and tau its only coface there. Sorted by (sigma, tau).
std::vector<CellPair> free_pairs_for(const ValuedComplex& v);

/// Free pairs for F with dim(tau) = d.
std::vector<CellPair> free_d_pairs_for(const ValuedComplex& v);

/// Lowers a free d-pair for F by one. Throws PreconditionError otherwise.
ValuedComplex elementary_stack_collapse(const ValuedComplex& v, CellPair pair);

/// Lowers free d-pairs (smallest first) until none remain. `observer`, when
/// set, sees every intermediate map.
ValuedComplex ultimate_stack_collapse(
    const ValuedComplex& v, const std::function<void(const ValuedComplex&)>& observer = {});

SimplexSet to_simplex_set(const FaceLattice& lattice, std::span<const SimplexId> ids);

}  // namespace morseshed
