#ifndef NETC_NULL_MODEL_HPP
#define NETC_NULL_MODEL_HPP

#include "netc/automorphism.hpp"
#include "netc/graph.hpp"

#include <cstdint>
#include <vector>

namespace netc {

// Ensemble statistics over ln C of weight-preserving shuffles.
struct ShuffleStats {
  std::int64_t sample_count = 0;
  double c_bits = 0.0;       // C of the original graph
  double ln_c_mean = 0.0;    // <ln C_ER>
  double ln_c_std = 0.0;     // sample std dev of ln C
  double geo_mean = 0.0;     // exp(ln_c_mean)
  double surplus = 0.0;      // C - geo_mean
  double sigmas = 0.0;       // |ln C - <ln C_ER>| / std, when defined
  bool degenerate = false;   // all shuffled C identical; sigmas undefined
  std::vector<double> samples; // per-shuffle C values, audit trail
};

// Erdos-Renyi shuffle preserving n, l and the weight multiset: the l
// ordered pairs are drawn uniformly without replacement from all n(n-1)
// candidates, weights assigned in uniformly random order.  Deterministic
// per seed.
WeightedDigraph shuffle(const WeightedDigraph &g, std::uint64_t rng_seed);

// C of g plus C over `samples` independent shuffles (substreams of
// rng_seed), aggregated in log space.  threads > 1 evaluates ensemble
// members in parallel; results are identical for any thread count.
ShuffleStats surplus_analysis(const WeightedDigraph &g, std::int64_t samples,
                              std::uint64_t rng_seed, int threads = 1,
                              std::int64_t aut_budget = kDefaultAutBudget);

// Growth model: each new node attaches `out_degree` directed unit-weight
// links to distinct existing nodes, chosen with probability proportional
// to total degree + 1.
WeightedDigraph preferential_attachment(std::int64_t n, std::int64_t out_degree,
                                        std::uint64_t rng_seed);

} // namespace netc

#endif
