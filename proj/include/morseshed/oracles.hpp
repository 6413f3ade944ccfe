#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morseshed/dual_forest.hpp"

// Brute-force verifiers built from the raw definitions (simplex sets,
// subset tests, exhaustive enumeration). They deliberately avoid the face
// lattice traversals, union-find and theorem-based shortcuts of the
// production code so that agreement between the two is meaningful.
namespace morseshed::oracles {

struct OracleReport {
  std::string claim;
  bool pass = true;
  std::string witness;  // nonempty iff !pass

  /// "CLAIM <id> PASS" or "CLAIM <id> FAIL <witness>"
  [[nodiscard]] std::string to_line() const;
};

OracleReport pass(std::string claim);
OracleReport fail(std::string claim, std::string witness);

inline constexpr std::size_t kMsfMaxVertices = 12;
inline constexpr std::size_t kMsfMaxEdges = 24;

/// Every minimum-weight spanning forest relative to `anchor`, by enumerating
/// all edge subsets and checking the extension and minimality conditions.
/// Throws DomainError beyond kMsfMaxVertices vertices or kMsfMaxEdges edges.
std::vector<RelativeForest> oracle_msf(const DualGraph& dg, const Subgraph& anchor);

/// Checks that the closure of the (d-1)-faces `cut` is a watershed-cut of the
/// basic stack `v`: its complement is an extension of the minima, no single
/// face can be dropped, and every face has descending d-paths into two
/// distinct minima that never cross the cut.
OracleReport oracle_watershed(const ValuedComplex& v, const std::vector<Simplex>& cut);

/// Exhaustive search for a closed gradient path. Returns the cycle
/// sigma_0, tau_0, ..., tau_{k-1} when one exists. Throws DomainError above
/// 10^4 simplices.
std::optional<std::vector<Simplex>> oracle_closed_path(const GradientVectorField& v);
OracleReport oracle_closed_paths(const GradientVectorField& v);

/// complement(y) is an extension of complement(x) inside the space of `m`.
OracleReport oracle_extension_after_collapse(const Pseudomanifold& m, const Complex& x, const Complex& y);

/// Minima straight from the definition: components of [F <= k] (incidence
/// connectivity) that avoid [F <= k-1]. Each returned set is sorted.
std::vector<std::vector<Simplex>> oracle_minima(const ValuedComplex& v);

}  // namespace morseshed::oracles
