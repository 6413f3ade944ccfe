#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morseshed/simplex.hpp"

namespace morseshed {

/// Raised when an operation's precondition does not hold (e.g. collapsing a
/// pair that is not free, basifying a cyclic field).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an argument lies outside the domain of an operation (a simplex
/// not in the hosting space, a negative altitude where Z+ is required...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One failed rule together with the simplices that witness the failure.
struct Violation {
  std::string rule;
  std::vector<Simplex> witnesses;
  std::string detail;

  [[nodiscard]] std::string describe() const;
};

/// Finite set of simplices, bucketed by dimension.
class SimplexSet {
 public:
  using Layer = std::unordered_set<Simplex, SimplexHash>;

  SimplexSet() = default;
  SimplexSet(std::initializer_list<Simplex> simplices);
  explicit SimplexSet(const std::vector<Simplex>& simplices);

  bool insert(const Simplex& s);
  bool erase(const Simplex& s);
  [[nodiscard]] bool contains(const Simplex& s) const;

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

  /// Largest dimension present, -1 when empty.
  [[nodiscard]] int dimension() const noexcept;

  /// Simplices of dimension p; an empty layer when p is out of range.
  [[nodiscard]] const Layer& layer(int p) const;

  /// All simplices in (dim, lex) order.
  [[nodiscard]] std::vector<Simplex> sorted() const;
  [[nodiscard]] std::vector<Simplex> sorted(int p) const;

  [[nodiscard]] bool is_subset_of(const SimplexSet& other) const;

  friend bool operator==(const SimplexSet& a, const SimplexSet& b);

 private:
  std::vector<Layer> layers_;
  std::size_t size_ = 0;
};

struct FreePair;

/// A simplex set closed under taking nonempty subsets.
class Complex {
 public:
  Complex() = default;

  /// Throws PreconditionError naming a missing face if `simplices` is not closed.
  static Complex from_closed(SimplexSet simplices);

  [[nodiscard]] const SimplexSet& simplices() const noexcept { return set_; }
  [[nodiscard]] bool contains(const Simplex& s) const { return set_.contains(s); }
  [[nodiscard]] std::size_t size() const noexcept { return set_.size(); }
  [[nodiscard]] bool empty() const noexcept { return set_.empty(); }
  [[nodiscard]] int dimension() const noexcept { return set_.dimension(); }

  friend bool operator==(const Complex& a, const Complex& b) = default;

 private:
  friend Complex closure(const SimplexSet& xs);
  friend Complex elementary_collapse(const Complex& c, const FreePair& fp);
  explicit Complex(SimplexSet closed) : set_(std::move(closed)) {}

  SimplexSet set_;
};

/// Smallest complex containing every simplex of `xs`.
Complex closure(const SimplexSet& xs);

/// First facet of `s` (in canonical order) that is missing from `xs`.
std::optional<Simplex> first_missing_facet(const SimplexSet& xs, const Simplex& s);

/// Classes of d-simplices of `xs` linked by d-paths whose shared (d-1)-faces
/// also belong to `xs`. Lower-dimensional simplices belong to no class. Each
/// class is returned sorted; classes are ordered by their smallest member.
std::vector<std::vector<Simplex>> d_connected_components(const SimplexSet& xs, int d);

/// Classes of `xs` under "x ⊆ y or y ⊆ x". Used for stars of mixed dimension.
std::vector<std::vector<Simplex>> incidence_components(const SimplexSet& xs);

struct FreePair {
  Simplex sigma;
  Simplex tau;

  friend bool operator==(const FreePair&, const FreePair&) = default;
  friend auto operator<=>(const FreePair&, const FreePair&) = default;
};

/// Every (sigma, tau) with tau the only proper coface of sigma in `c`,
/// in lexicographic order of (sigma, tau).
std::vector<FreePair> free_pairs(const Complex& c);

/// Free pairs whose tau has dimension d.
std::vector<FreePair> free_d_pairs(const Complex& c, int d);

/// c \ {sigma, tau}; throws PreconditionError if the pair is not free in c.
Complex elementary_collapse(const Complex& c, const FreePair& fp);

/// Applies elementary d-collapses in lexicographic order until no free
/// d-pair remains.
Complex ultimate_d_collapse(const Complex& c, int d);

using SimplexId = std::uint32_t;
inline constexpr SimplexId kNoSimplex = static_cast<SimplexId>(-1);

/// Immutable indexed view of a complex: every simplex receives an id in
/// (dim, lex) order, with codimension-one facet and coface lists.
class FaceLattice {
 public:
  explicit FaceLattice(const Complex& c);

  [[nodiscard]] std::size_t size() const noexcept { return simplices_.size(); }
  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(dim_offset_.size()) - 2; }
  [[nodiscard]] const Simplex& at(SimplexId id) const { return simplices_.at(id); }
  [[nodiscard]] const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  [[nodiscard]] std::optional<SimplexId> find(const Simplex& s) const;
  /// Like find() but throws DomainError when `s` is absent.
  [[nodiscard]] SimplexId id_of(const Simplex& s) const;

  [[nodiscard]] int dim(SimplexId id) const { return simplices_[id].dim(); }
  [[nodiscard]] const std::vector<SimplexId>& facets(SimplexId id) const { return facets_[id]; }
  [[nodiscard]] const std::vector<SimplexId>& cofaces(SimplexId id) const { return cofaces_[id]; }

  /// Ids of dimension p occupy the half-open range [first_of(p), first_of(p+1)).
  [[nodiscard]] SimplexId first_of(int p) const;
  [[nodiscard]] std::size_t count(int p) const { return first_of(p + 1) - first_of(p); }

  [[nodiscard]] Complex to_complex() const;

 private:
  std::vector<Simplex> simplices_;
  std::unordered_map<Simplex, SimplexId, SimplexHash> index_;
  std::vector<std::vector<SimplexId>> facets_;
  std::vector<std::vector<SimplexId>> cofaces_;
  std::vector<SimplexId> dim_offset_;  // dim_offset_[p] = first id of dimension p
};

}  // namespace morseshed
