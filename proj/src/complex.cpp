#include "morseshed/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "morseshed/union_find.hpp"

namespace morseshed {

std::string Violation::describe() const {
  std::string out = rule;
  if (!detail.empty()) out += ": " + detail;
  if (!witnesses.empty()) {
    out += " [";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i) out += ", ";
      out += "{" + witnesses[i].to_string() + "}";
    }
    out += "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// SimplexSet

SimplexSet::SimplexSet(std::initializer_list<Simplex> simplices) {
  for (const auto& s : simplices) insert(s);
}

SimplexSet::SimplexSet(const std::vector<Simplex>& simplices) {
  for (const auto& s : simplices) insert(s);
}

bool SimplexSet::insert(const Simplex& s) {
  const auto p = static_cast<std::size_t>(s.dim());
  if (layers_.size() <= p) layers_.resize(p + 1);
  const bool added = layers_[p].insert(s).second;
  size_ += added ? 1 : 0;
  return added;
}

bool SimplexSet::erase(const Simplex& s) {
  const auto p = static_cast<std::size_t>(s.dim());
  if (p >= layers_.size()) return false;
  const bool removed = layers_[p].erase(s) > 0;
  size_ -= removed ? 1 : 0;
  return removed;
}

bool SimplexSet::contains(const Simplex& s) const {
  const auto p = static_cast<std::size_t>(s.dim());
  return p < layers_.size() && layers_[p].contains(s);
}

int SimplexSet::dimension() const noexcept {
  for (auto p = static_cast<int>(layers_.size()) - 1; p >= 0; --p) {
    if (!layers_[static_cast<std::size_t>(p)].empty()) return p;
  }
  return -1;
}

const SimplexSet::Layer& SimplexSet::layer(int p) const {
  static const Layer kEmpty;
  if (p < 0 || static_cast<std::size_t>(p) >= layers_.size()) return kEmpty;
  return layers_[static_cast<std::size_t>(p)];
}

std::vector<Simplex> SimplexSet::sorted(int p) const {
  const auto& l = layer(p);
  std::vector<Simplex> out(l.begin(), l.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> SimplexSet::sorted() const {
  std::vector<Simplex> out;
  out.reserve(size_);
  for (int p = 0; p <= dimension(); ++p) {
    auto part = sorted(p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool SimplexSet::is_subset_of(const SimplexSet& other) const {
  for (const auto& l : layers_) {
    for (const auto& s : l) {
      if (!other.contains(s)) return false;
    }
  }
  return true;
}

bool operator==(const SimplexSet& a, const SimplexSet& b) {
  return a.size() == b.size() && a.is_subset_of(b);
}

// ---------------------------------------------------------------------------
// Complex

std::optional<Simplex> first_missing_facet(const SimplexSet& xs, const Simplex& s) {
  for (auto& f : s.facets()) {
    if (!xs.contains(f)) return f;
  }
  return std::nullopt;
}

Complex Complex::from_closed(SimplexSet simplices) {
  for (const auto& s : simplices.sorted()) {
    if (auto missing = first_missing_facet(simplices, s)) {
      throw PreconditionError("simplex set is not closed: {" + s.to_string() +
                              "} lacks its face {" + missing->to_string() + "}");
    }
  }
  return Complex(std::move(simplices));
}

Complex closure(const SimplexSet& xs) {
  SimplexSet out;
  // Walk layers top-down so each new face is expanded exactly once.
  std::vector<Simplex> frontier = xs.sorted();
  while (!frontier.empty()) {
    std::vector<Simplex> next;
    for (const auto& s : frontier) {
      if (!out.insert(s)) continue;
      for (auto& f : s.facets()) {
        if (!out.contains(f)) next.push_back(std::move(f));
      }
    }
    frontier = std::move(next);
  }
  return Complex(std::move(out));
}

std::vector<std::vector<Simplex>> d_connected_components(const SimplexSet& xs, int d) {
  const auto top = xs.sorted(d);
  if (top.empty()) return {};
  UnionFind uf(top.size());
  std::unordered_map<Simplex, std::size_t, SimplexHash> first_seen;
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (auto& f : top[i].facets()) {
      if (!xs.contains(f)) continue;
      auto [it, fresh] = first_seen.emplace(std::move(f), i);
      if (!fresh) uf.unite(it->second, i);
    }
  }
  std::map<std::size_t, std::vector<Simplex>> classes;  // keyed by smallest member index
  std::unordered_map<std::size_t, std::size_t> root_to_key;
  for (std::size_t i = 0; i < top.size(); ++i) {
    auto [it, fresh] = root_to_key.emplace(uf.find(i), i);
    classes[it->second].push_back(top[i]);
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<Simplex>> incidence_components(const SimplexSet& xs) {
  const auto all = xs.sorted();
  if (all.empty()) return {};
  std::unordered_map<Simplex, std::size_t, SimplexHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);

  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto verts = all[i].vertices();
    const std::size_t n = verts.size();
    if (n > 24) throw DomainError("incidence_components: simplex dimension too large");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<VertexId> sub;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::uint64_t{1} << b)) sub.push_back(verts[b]);
      }
      auto it = index.find(Simplex(std::move(sub)));
      if (it != index.end()) uf.unite(i, it->second);
    }
  }
  std::map<std::size_t, std::vector<Simplex>> classes;
  std::unordered_map<std::size_t, std::size_t> root_to_key;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto [it, fresh] = root_to_key.emplace(uf.find(i), i);
    classes[it->second].push_back(all[i]);
  }
  std::vector<std::vector<Simplex>> out;
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  return out;
}

// ---------------------------------------------------------------------------
// Free pairs and collapses

namespace {

// For each face of dimension p, its codim-1 cofaces in `set`.
std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> coface_table(const SimplexSet& set,
                                                                            int p) {
  std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> table;
  for (const auto& tau : set.layer(p + 1)) {
    for (auto& f : tau.facets()) table[std::move(f)].push_back(tau);
  }
  return table;
}

bool has_coface(const SimplexSet& set, const Simplex& s) {
  for (const auto& up : set.layer(s.dim() + 1)) {
    if (s.is_face_of(up)) return true;
  }
  return false;
}

}  // namespace

std::vector<FreePair> free_d_pairs(const Complex& c, int d) {
  std::vector<FreePair> out;
  if (d < 1) return out;
  const auto& set = c.simplices();
  const auto table = coface_table(set, d - 1);
  const auto upper = coface_table(set, d);
  for (const auto& [sigma, cofaces] : table) {
    if (cofaces.size() == 1 && !upper.contains(cofaces.front())) {
      out.push_back({sigma, cofaces.front()});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FreePair> free_pairs(const Complex& c) {
  std::vector<FreePair> out;
  for (int d = 1; d <= c.dimension(); ++d) {
    auto part = free_d_pairs(c, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex elementary_collapse(const Complex& c, const FreePair& fp) {
  const auto& set = c.simplices();
  auto fail = [&](const std::string& why) {
    throw PreconditionError("({" + fp.sigma.to_string() + "}, {" + fp.tau.to_string() +
                            "}) is not a free pair: " + why);
  };
  if (fp.sigma.dim() + 1 != fp.tau.dim() || !fp.sigma.is_face_of(fp.tau)) {
    fail("sigma is not a facet of tau");
  }
  if (!set.contains(fp.sigma) || !set.contains(fp.tau)) fail("not in the complex");
  if (has_coface(set, fp.tau)) fail("tau has a coface");
  for (const auto& other : set.layer(fp.tau.dim())) {
    if (other != fp.tau && fp.sigma.is_face_of(other)) fail("sigma has a second coface");
  }
  SimplexSet rest = set;
  rest.erase(fp.sigma);
  rest.erase(fp.tau);
  return Complex(std::move(rest));
}

Complex ultimate_d_collapse(const Complex& c, int d) {
  if (d < 1) throw DomainError("ultimate_d_collapse requires d >= 1");
  SimplexSet set = c.simplices();
  auto is_free = [&](const Simplex& sigma) -> std::optional<Simplex> {
    if (!set.contains(sigma)) return std::nullopt;
    std::optional<Simplex> only;
    for (const auto& tau : set.layer(d)) {
      if (!sigma.is_face_of(tau)) continue;
      if (only) return std::nullopt;
      only = tau;
    }
    if (!only || has_coface(set, *only)) return std::nullopt;
    return only;
  };

  std::set<FreePair> candidates;
  for (auto& fp : free_d_pairs(c, d)) candidates.insert(std::move(fp));
  // Candidates are re-validated on pop; new ones only appear at facets of a
  // removed d-simplex.
  while (!candidates.empty()) {
    FreePair fp = *candidates.begin();
    candidates.erase(candidates.begin());
    auto tau = is_free(fp.sigma);
    if (!tau || *tau != fp.tau) continue;
    set.erase(fp.sigma);
    set.erase(fp.tau);
    for (auto& f : fp.tau.facets()) {
      if (f == fp.sigma) continue;
      if (auto t = is_free(f)) candidates.insert({f, *t});
    }
  }
  return Complex::from_closed(std::move(set));
}

// ---------------------------------------------------------------------------
// FaceLattice

FaceLattice::FaceLattice(const Complex& c) : simplices_(c.simplices().sorted()) {
  const int top = c.dimension();
  dim_offset_.assign(static_cast<std::size_t>(top + 2), 0);
  index_.reserve(simplices_.size());
  for (SimplexId id = 0; id < simplices_.size(); ++id) index_.emplace(simplices_[id], id);
  for (int p = 0; p <= top; ++p) {
    dim_offset_[static_cast<std::size_t>(p + 1)] =
        dim_offset_[static_cast<std::size_t>(p)] + static_cast<SimplexId>(c.simplices().layer(p).size());
  }
  facets_.resize(simplices_.size());
  cofaces_.resize(simplices_.size());
  for (SimplexId id = 0; id < simplices_.size(); ++id) {
    for (const auto& f : simplices_[id].facets()) {
      const SimplexId fid = index_.at(f);
      facets_[id].push_back(fid);
      cofaces_[fid].push_back(id);
    }
  }
  for (auto& f : facets_) std::sort(f.begin(), f.end());
  // cofaces_ are filled in increasing id order already
}

std::optional<SimplexId> FaceLattice::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SimplexId FaceLattice::id_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw DomainError("simplex {" + s.to_string() + "} is not in the complex");
  return it->second;
}

SimplexId FaceLattice::first_of(int p) const {
  if (p <= 0) return 0;
  if (static_cast<std::size_t>(p) >= dim_offset_.size()) return static_cast<SimplexId>(simplices_.size());
  return dim_offset_[static_cast<std::size_t>(p)];
}

Complex FaceLattice::to_complex() const {
  return Complex::from_closed(SimplexSet(simplices_));
}

}  // namespace morseshed
