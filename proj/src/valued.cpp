#include "morseshed/valued.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "morseshed/union_find.hpp"

namespace morseshed {

ValuedComplex::ValuedComplex(std::shared_ptr<const Pseudomanifold> space, std::vector<Value> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw DomainError("valued complex needs a space");
  if (values_.size() != space_->size()) {
    throw DomainError("expected " + std::to_string(space_->size()) + " values, got " +
                      std::to_string(values_.size()));
  }
}

ValuedComplex ValuedComplex::from_map(std::shared_ptr<const Pseudomanifold> space,
                                      const std::unordered_map<Simplex, Value, SimplexHash>& values) {
  std::vector<Value> dense;
  dense.reserve(space->size());
  for (const auto& s : space->lattice().simplices()) {
    auto it = values.find(s);
    if (it == values.end()) throw DomainError("no value for simplex {" + s.to_string() + "}");
    dense.push_back(it->second);
  }
  return ValuedComplex(std::move(space), std::move(dense));
}

Value ValuedComplex::min_value() const {
  return values_.empty() ? 0 : *std::min_element(values_.begin(), values_.end());
}

Value ValuedComplex::max_value() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

namespace {

std::string pair_detail(const ValuedComplex& v, SimplexId a, SimplexId b) {
  return "F(" + v.lattice().at(a).to_string() + ")=" + std::to_string(v[a]) + ", F(" +
         v.lattice().at(b).to_string() + ")=" + std::to_string(v[b]);
}

// 2-1 and "equal values only along an inclusion".
std::optional<Violation> check_basic_levels(const ValuedComplex& v) {
  const auto& lat = v.lattice();
  std::vector<SimplexId> order(v.size());
  std::iota(order.begin(), order.end(), SimplexId{0});
  std::stable_sort(order.begin(), order.end(), [&](SimplexId a, SimplexId b) { return v[a] < v[b]; });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && v[order[j]] == v[order[i]]) ++j;
    if (j - i > 2) {
      return Violation{"not 2-1",
                       {lat.at(order[i]), lat.at(order[i + 1]), lat.at(order[i + 2])},
                       "value " + std::to_string(v[order[i]]) + " attained " + std::to_string(j - i) +
                           " times"};
    }
    if (j - i == 2) {
      const auto& a = lat.at(order[i]);
      const auto& b = lat.at(order[i + 1]);
      if (!a.is_face_of(b) && !b.is_face_of(a)) {
        return Violation{"equal values without inclusion", {a, b},
                         "value " + std::to_string(v[order[i]])};
      }
    }
    i = j;
  }
  return std::nullopt;
}

}  // namespace

Certificate check_stack(const ValuedComplex& v) {
  Certificate cert;
  const auto& lat = v.lattice();
  for (SimplexId tau = 0; tau < lat.size() && !cert.violation; ++tau) {
    for (SimplexId sigma : lat.facets(tau)) {
      if (v[sigma] < v[tau]) {
        cert.violation = Violation{"not weakly decreasing", {lat.at(sigma), lat.at(tau)},
                                   pair_detail(v, sigma, tau)};
        break;
      }
    }
  }
  if (!cert.violation) cert.basic_violation = check_basic_levels(v);
  return cert;
}

Certificate check_dmf(const ValuedComplex& v) {
  Certificate cert;
  const auto& lat = v.lattice();
  for (SimplexId sigma = 0; sigma < lat.size() && !cert.violation; ++sigma) {
    std::vector<Simplex> below;
    for (SimplexId f : lat.facets(sigma)) {
      if (v[f] >= v[sigma]) below.push_back(lat.at(f));
    }
    if (below.size() > 1) {
      below.insert(below.begin(), lat.at(sigma));
      cert.violation = Violation{"more than one facet with F(facet) >= F(sigma)", std::move(below),
                                 "F(sigma)=" + std::to_string(v[sigma])};
      break;
    }
    std::vector<Simplex> above;
    for (SimplexId c : lat.cofaces(sigma)) {
      if (v[c] <= v[sigma]) above.push_back(lat.at(c));
    }
    if (above.size() > 1) {
      above.insert(above.begin(), lat.at(sigma));
      cert.violation = Violation{"more than one coface with F(coface) <= F(sigma)", std::move(above),
                                 "F(sigma)=" + std::to_string(v[sigma])};
    }
  }
  if (cert.violation) return cert;
  for (SimplexId tau = 0; tau < lat.size() && !cert.basic_violation; ++tau) {
    for (SimplexId sigma : lat.facets(tau)) {
      if (v[sigma] > v[tau]) {
        cert.basic_violation = Violation{"not weakly increasing", {lat.at(sigma), lat.at(tau)},
                                         pair_detail(v, sigma, tau)};
        break;
      }
    }
  }
  if (!cert.basic_violation) cert.basic_violation = check_basic_levels(v);
  return cert;
}

bool is_basic_stack(const ValuedComplex& v) { return check_stack(v).basic(); }
bool is_basic_dmf(const ValuedComplex& v) { return check_dmf(v).basic(); }

ValuedComplex negate(const ValuedComplex& v) {
  std::vector<Value> out(v.values().begin(), v.values().end());
  for (auto& x : out) x = -x;
  return ValuedComplex(v.space_ptr(), std::move(out));
}

SimplexSet k_section(const ValuedComplex& v, Value k) {
  SimplexSet out;
  for (SimplexId id = 0; id < v.size(); ++id) {
    if (v[id] >= k) out.insert(v.lattice().at(id));
  }
  return out;
}

std::vector<Minimum> minima(const ValuedComplex& v) {
  if (auto cert = check_stack(v); !cert.valid()) {
    throw PreconditionError("minima() needs a stack: " + cert.violation->describe());
  }
  const auto& lat = v.lattice();
  const std::size_t n = v.size();
  std::vector<SimplexId> order(n);
  std::iota(order.begin(), order.end(), SimplexId{0});
  std::stable_sort(order.begin(), order.end(), [&](SimplexId a, SimplexId b) { return v[a] < v[b]; });

  // Sweep levels upward. [F <= k] is a star, so incidence connectivity
  // reduces to codimension-one incidences inside the set.
  UnionFind uf(n);
  std::vector<char> present(n, 0);
  std::vector<Value> lowest(n);  // per root: smallest altitude in the component
  std::vector<Minimum> out;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    const Value k = v[order[i]];
    while (j < n && v[order[j]] == k) ++j;
    for (std::size_t t = i; t < j; ++t) {
      const SimplexId id = order[t];
      present[id] = 1;
      lowest[id] = k;
    }
    for (std::size_t t = i; t < j; ++t) {
      const SimplexId id = order[t];
      auto join = [&](SimplexId other) {
        if (!present[other]) return;
        const Value lo = std::min(lowest[uf.find(id)], lowest[uf.find(other)]);
        lowest[uf.unite(id, other)] = lo;
      };
      for (SimplexId f : lat.facets(id)) join(f);
      for (SimplexId c : lat.cofaces(id)) join(c);
    }
    std::unordered_map<std::size_t, std::vector<SimplexId>> fresh;
    for (std::size_t t = i; t < j; ++t) {
      const SimplexId id = order[t];
      const std::size_t root = uf.find(id);
      if (lowest[root] == k) fresh[root].push_back(id);
    }
    for (auto& [root, members] : fresh) {
      std::sort(members.begin(), members.end());
      out.push_back({k, std::move(members)});
    }
    i = j;
  }
  std::sort(out.begin(), out.end(),
            [](const Minimum& a, const Minimum& b) { return a.members.front() < b.members.front(); });
  return out;
}

std::vector<SimplexId> minima_union(const std::vector<Minimum>& mins) {
  std::vector<SimplexId> out;
  for (const auto& m : mins) out.insert(out.end(), m.members.begin(), m.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

Complex divide(const ValuedComplex& v) {
  const auto in_minima = minima_union(minima(v));
  std::vector<char> mark(v.size(), 0);
  for (SimplexId id : in_minima) mark[id] = 1;
  SimplexSet rest;
  for (SimplexId id = 0; id < v.size(); ++id) {
    if (!mark[id]) rest.insert(v.lattice().at(id));
  }
  return Complex::from_closed(std::move(rest));
}

ValuedComplex stack_lowering(const ValuedComplex& v, std::span<const SimplexId> n) {
  std::vector<Value> out(v.values().begin(), v.values().end());
  std::vector<char> mark(v.size(), 0);
  for (SimplexId id : n) {
    if (id >= v.size()) throw DomainError("lowering set is not inside the space");
    if (!mark[id]) --out[id];
    mark[id] = 1;
  }
  return ValuedComplex(v.space_ptr(), std::move(out));
}

ValuedComplex stack_lowering(const ValuedComplex& v, const SimplexSet& n) {
  std::vector<SimplexId> ids;
  for (const auto& s : n.sorted()) ids.push_back(v.lattice().id_of(s));
  return stack_lowering(v, ids);
}

namespace {

// tau when sigma is a free face of [F >= F(sigma)].
std::optional<SimplexId> free_partner(const FaceLattice& lat, std::span<const Value> f, SimplexId sigma) {
  std::optional<SimplexId> only;
  for (SimplexId c : lat.cofaces(sigma)) {
    if (f[c] < f[sigma]) continue;
    if (only) return std::nullopt;
    only = c;
  }
  if (!only) return std::nullopt;
  // Any higher coface in the section would be a second coface of sigma.
  for (SimplexId c : lat.cofaces(*only)) {
    if (f[c] >= f[sigma]) return std::nullopt;
  }
  return only;
}

}  // namespace

std::vector<CellPair> free_pairs_for(const ValuedComplex& v) {
  std::vector<CellPair> out;
  for (SimplexId sigma = 0; sigma < v.size(); ++sigma) {
    if (auto tau = free_partner(v.lattice(), v.values(), sigma)) out.push_back({sigma, *tau});
  }
  return out;
}

std::vector<CellPair> free_d_pairs_for(const ValuedComplex& v) {
  std::vector<CellPair> out;
  const auto& lat = v.lattice();
  for (SimplexId sigma = lat.first_of(v.d() - 1); sigma < lat.first_of(v.d()); ++sigma) {
    if (auto tau = free_partner(lat, v.values(), sigma)) out.push_back({sigma, *tau});
  }
  return out;
}

ValuedComplex elementary_stack_collapse(const ValuedComplex& v, CellPair pair) {
  const auto& lat = v.lattice();
  if (pair.sigma >= v.size() || lat.dim(pair.sigma) != v.d() - 1 ||
      free_partner(lat, v.values(), pair.sigma) != std::optional<SimplexId>(pair.tau)) {
    throw PreconditionError("not a free d-pair for F");
  }
  const SimplexId ids[] = {pair.sigma, pair.tau};
  return stack_lowering(v, ids);
}

ValuedComplex ultimate_stack_collapse(const ValuedComplex& v,
                                      const std::function<void(const ValuedComplex&)>& observer) {
  if (auto cert = check_stack(v); !cert.valid()) {
    throw PreconditionError("ultimate_stack_collapse needs a stack: " + cert.violation->describe());
  }
  const auto& lat = v.lattice();
  std::vector<Value> f(v.values().begin(), v.values().end());
  std::set<SimplexId> work;
  for (SimplexId s = lat.first_of(v.d() - 1); s < lat.first_of(v.d()); ++s) work.insert(s);
  while (!work.empty()) {
    const SimplexId sigma = *work.begin();
    work.erase(work.begin());
    auto tau = free_partner(lat, f, sigma);
    if (!tau) continue;
    --f[sigma];
    --f[*tau];
    if (observer) observer(ValuedComplex(v.space_ptr(), f));
    for (SimplexId r : lat.facets(*tau)) work.insert(r);
  }
  return ValuedComplex(v.space_ptr(), std::move(f));
}

SimplexSet to_simplex_set(const FaceLattice& lattice, std::span<const SimplexId> ids) {
  SimplexSet out;
  for (SimplexId id : ids) out.insert(lattice.at(id));
  return out;
}

}  // namespace morseshed
