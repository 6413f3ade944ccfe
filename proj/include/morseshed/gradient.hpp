#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "morseshed/valued.hpp"

namespace morseshed {

/// A discrete vector field on a pseudomanifold: pairs (sigma^(p), tau^(p+1))
/// with sigma ⊂ tau, every simplex in at most one pair.
class GradientVectorField {
 public:
  /// Throws PreconditionError if a pair is not a codimension-one inclusion or
  /// a simplex appears twice.
  GradientVectorField(std::shared_ptr<const Pseudomanifold> space, std::vector<CellPair> vectors);

  static GradientVectorField from_simplices(std::shared_ptr<const Pseudomanifold> space,
                                            const std::vector<std::pair<Simplex, Simplex>>& vectors);

  [[nodiscard]] const Pseudomanifold& space() const noexcept { return *space_; }
  [[nodiscard]] const std::shared_ptr<const Pseudomanifold>& space_ptr() const noexcept { return space_; }

  /// Sorted by tail id.
  [[nodiscard]] const std::vector<CellPair>& vectors() const noexcept { return vectors_; }
  [[nodiscard]] std::size_t size() const noexcept { return vectors_.size(); }
  [[nodiscard]] bool empty() const noexcept { return vectors_.empty(); }

  /// Partner of `id` in its pair, or kNoSimplex.
  [[nodiscard]] SimplexId partner(SimplexId id) const { return partner_[id]; }
  [[nodiscard]] bool is_tail(SimplexId id) const;
  [[nodiscard]] bool is_head(SimplexId id) const;

  [[nodiscard]] std::vector<std::pair<Simplex, Simplex>> as_simplices() const;

  friend bool operator==(const GradientVectorField& a, const GradientVectorField& b) {
    return a.space_->same_space(*b.space_) && a.vectors_ == b.vectors_;
  }

 private:
  std::shared_ptr<const Pseudomanifold> space_;
  std::vector<CellPair> vectors_;
  std::vector<SimplexId> partner_;
};

enum class Reading { morse, stack };

/// Induced gradient vector field: {(sigma, tau) | sigma facet of tau,
/// G(sigma) >= G(tau)} where G = F for a DMF and G = -F for a stack.
/// Throws PreconditionError unless the input certifies as a DMF (resp.
/// stack whose negation is a DMF).
GradientVectorField gvf(const ValuedComplex& v, Reading reading);

struct Criticality {
  std::vector<SimplexId> critical;
  std::vector<SimplexId> regular_tails;
  std::vector<SimplexId> regular_heads;
};

Criticality classify(const GradientVectorField& g);

/// Alternating sequence (tau_-1,) sigma_0, tau_0, sigma_1, ..., sigma_k.
struct GradientPath {
  std::vector<SimplexId> cells;
  bool leading_critical = false;  // cells.front() is tau_-1

  /// Number of vectors traversed.
  [[nodiscard]] std::size_t k() const noexcept;
  [[nodiscard]] bool closed() const noexcept;
};

/// All maximal gradient paths from `start`, which must be a critical
/// (p+1)-simplex or any p-simplex (a p-simplex that is not a tail yields
/// the single trivial path). Paths stop at the first simplex that is not a
/// tail, or when they close up. Throws PreconditionError for
/// a wrong start and DomainError if more than `limit` paths are produced.
std::vector<GradientPath> enumerate_gradient_paths(const GradientVectorField& g, SimplexId start, int p,
                                                   std::size_t limit = 1'000'000);

struct ClosedPathWitness {
  /// sigma_0, tau_0, ..., sigma_{k-1}, tau_{k-1}; the path returns to sigma_0.
  std::vector<SimplexId> cycle;
};

/// Detects a directed cycle in the Hasse diagram with vector arrows reversed.
std::optional<ClosedPathWitness> find_closed_path(const GradientVectorField& g);
inline bool has_closed_path(const GradientVectorField& g) { return find_closed_path(g).has_value(); }

/// Same strict-inequality pattern on every codimension-one inclusion. Throws
/// DomainError if the spaces differ.
bool forman_equivalent(const ValuedComplex& f, const ValuedComplex& g);

/// A basic DMF whose gradient is exactly `v`: vector pairs are contracted,
/// the resulting order DAG is topologically sorted (smallest simplex first)
/// and numbered 0, 1, 2, ... Throws PreconditionError if `v` is cyclic.
ValuedComplex basify(const GradientVectorField& v);

/// negate(basify(v)): a basic stack with gradient `v`.
ValuedComplex stack_from_field(const GradientVectorField& v);

}  // namespace morseshed
