#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace morseshed {

using VertexId = std::uint32_t;

/// A finite nonempty set of vertex ids, kept in strictly increasing order.
///
/// The canonical order makes equality of simplices equality of vertex sets.
/// Simplices compare first by dimension, then lexicographically, which is the
/// order used everywhere a deterministic traversal is needed.
class Simplex {
 public:
  /// Sorts `vertices`; throws std::invalid_argument if empty or if a vertex
  /// id is repeated.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  [[nodiscard]] int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  [[nodiscard]] std::span<const VertexId> vertices() const noexcept { return vertices_; }

  /// this ⊆ other
  [[nodiscard]] bool is_face_of(const Simplex& other) const noexcept;

  /// Faces of codimension one. Empty for a vertex.
  [[nodiscard]] std::vector<Simplex> facets() const;

  [[nodiscard]] std::optional<Simplex> intersection(const Simplex& other) const;

  /// Space-separated vertex ids, e.g. "1 2 3".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;

 private:
  struct Canonical {};
  Simplex(Canonical, std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}

  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace morseshed

template <>
struct std::hash<morseshed::Simplex> : morseshed::SimplexHash {};
