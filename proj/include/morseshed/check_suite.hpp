#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morseshed/generators.hpp"
#include "morseshed/oracles.hpp"

namespace morseshed {

struct Instance {
  std::string name;  // e.g. "torus_grid(4)#seed=17"
  ValuedComplex stack;
};

/// cycle(4..12), simplex_boundary(3..5), torus_grid(3..8); `seeds` stacks
/// each, seeded base_seed, base_seed+1, ...
std::vector<Instance> bundled_corpus(std::uint64_t base_seed, std::size_t seeds = 50);

/// Runs every oracle claim on one basic stack. Claim ids have the form
/// "<claim>@<instance>".
std::vector<oracles::OracleReport> check_instance(const Instance& instance);

/// check_instance over a corpus, fanned out across `threads` workers;
/// results keep corpus order.
std::vector<oracles::OracleReport> run_checks(const std::vector<Instance>& corpus, unsigned threads);

}  // namespace morseshed
