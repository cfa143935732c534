#ifndef NETC_TS2NET_HPP
#define NETC_TS2NET_HPP

#include "netc/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace netc {

struct LabelSeries {
  std::vector<std::int64_t> labels;
  std::int64_t alphabet_size = 0;
};

// Sampled states of a continuous system; samples[t][j] is coordinate j at
// time t.  All rows must have the same dimension and finite entries.
struct Trajectory {
  std::vector<std::vector<double>> samples;
  double dt = 0.0;          // effective step between recorded samples
  std::int64_t stride = 1;

  std::int64_t length() const { return static_cast<std::int64_t>(samples.size()); }
  std::int64_t dimension() const {
    return samples.empty() ? 0 : static_cast<std::int64_t>(samples.front().size());
  }

  static Trajectory read_csv(std::istream &in);
  void write_csv(std::ostream &out) const;
};

struct OrdinalEncoding {
  std::int64_t window = 0;
  LabelSeries labels;        // lexicographic permutation indices, alphabet w!
  std::int64_t m = 0;        // distinct permutations observed
  std::vector<std::vector<int>> ranks; // one rank tuple per window position
};

struct TransitionNetwork {
  WeightedDigraph graph;
  std::int64_t dropped_count = 0; // self-transitions removed
};

// Nodes are labels, link weight counts transitions src -> dst (src != dst);
// self-transitions are dropped and counted.  Unvisited labels stay as
// isolated nodes.
TransitionNetwork transitions_to_network(const LabelSeries &s);

// Per-dimension uniform bins over the trajectory's own [min, max], last bin
// right-closed; cell label is the mixed-radix combination of bin indices.
// A degenerate dimension (min == max) collapses to one bin; *warning is set
// when that happens.
LabelSeries coarse_grain(const Trajectory &t, std::int64_t cells_per_dim,
                         std::string *warning = nullptr);

// Ranks each length-w window (smallest value -> rank 1, ties broken by the
// earlier index) and maps the rank tuple to its lexicographic index.
OrdinalEncoding ordinal_encode(const Trajectory &t, std::int64_t w);

// Smallest w in [2, w_max] maximizing delta m(w) = m(w) - m(w-1), m(1) = 1.
// A flat curve yields w = 2 and sets *warning.
std::int64_t optimal_window(const Trajectory &t, std::int64_t w_max,
                            std::vector<std::int64_t> *m_curve = nullptr,
                            std::string *warning = nullptr);

} // namespace netc

#endif
