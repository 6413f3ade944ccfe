#include "morseshed/simplex.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace morseshed {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw std::invalid_argument("vertex " + std::to_string(*dup) + " listed twice in one simplex");
  }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::is_face_of(const Simplex& other) const noexcept {
  return vertices_.size() <= other.vertices_.size() &&
         std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<VertexId> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i != skip) face.push_back(vertices_[i]);
    }
    out.push_back(Simplex(Canonical{}, std::move(face)));
  }
  return out;
}

std::optional<Simplex> Simplex::intersection(const Simplex& other) const {
  std::vector<VertexId> common;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return Simplex(Canonical{}, std::move(common));
}

std::string Simplex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vertices_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  // FNV-1a over the vertex ids
  std::uint64_t h = 1469598103934665603ULL;
  for (VertexId v : s.vertices()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace morseshed
