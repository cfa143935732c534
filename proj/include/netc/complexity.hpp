#ifndef NETC_COMPLEXITY_HPP
#define NETC_COMPLEXITY_HPP

#include "netc/automorphism.hpp"
#include "netc/encoding.hpp"
#include "netc/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace netc {

struct ComplexityLevel {
  double threshold = 0.0;   // weight level w_i (original scale)
  double coefficient = 0.0; // normalized w_i/w_1 - w_{i+1}/w_1
  std::int64_t n = 0;
  std::int64_t l = 0;
  EncodingLength length;
  double log2_aut = 0.0;
  double c_bits = 0.0;      // complexity of the thresholded graph
};

struct ComplexityReport {
  double c_bits = 0.0;      // weighted sum over levels
  std::vector<ComplexityLevel> levels;

  // CSV: threshold,coefficient,n,l,length_bits,log2_aut,c_bits per level
  // plus a summary row.
  void write_csv(std::ostream &out) const;
};

// C = l_{n,l} - (log2 n! - log2 |Aut|), weights ignored.
double complexity_unweighted(const WeightedDigraph &g,
                             std::int64_t aut_budget = kDefaultAutBudget);

// Weighted decomposition over descending distinct weights w_1 > ... > w_k:
// sum_i (w_i/w_1 - w_{i+1}/w_1) * C(links of weight >= w_i), w_{k+1} = 0.
// Equals complexity_unweighted when all weights coincide.
ComplexityReport complexity_weighted(const WeightedDigraph &g,
                                     std::int64_t aut_budget = kDefaultAutBudget);

} // namespace netc

#endif
