#ifndef NETC_AUTOMORPHISM_HPP
#define NETC_AUTOMORPHISM_HPP

#include "netc/graph.hpp"

#include <cstdint>

namespace netc {

struct AutResult {
  double log2_aut = 0.0;          // log2 |Aut(g)|, exact
  std::int64_t orbit_count = 0;   // node orbits under Aut(g)
  std::int64_t generators_found = 0;
};

inline constexpr std::int64_t kDefaultAutBudget = 100'000'000;

// Exact log2 |Aut| of the digraph's topology, weights ignored.  Isolated
// nodes contribute log2(k!) analytically; the remaining core is handled by
// equitable-partition refinement with backtracking and orbit-stabilizer
// accumulation.  Throws ResourceError when the backtrack budget is hit.
AutResult automorphism_log_size(const WeightedDigraph &g,
                                std::int64_t node_budget = kDefaultAutBudget);

// Oracle: tests all n! permutations.  Refuses n > 8.
AutResult automorphism_brute_force(const WeightedDigraph &g);

} // namespace netc

#endif
