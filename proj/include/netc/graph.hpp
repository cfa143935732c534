#ifndef NETC_GRAPH_HPP
#define NETC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace netc {

struct Link {
  std::int32_t src = 0;
  std::int32_t dst = 0;
  double weight = 1.0;

  friend bool operator==(const Link &, const Link &) = default;
};

// Directed weighted graph over dense node ids [0, n).  Immutable after
// construction; no self-loops, no duplicate (src,dst) pairs, weights > 0.
class WeightedDigraph {
public:
  // Validates invariants; links are stored sorted by (src, dst).
  WeightedDigraph(std::int64_t n, std::vector<Link> links);

  std::int64_t node_count() const { return n_; }
  std::int64_t link_count() const { return static_cast<std::int64_t>(links_.size()); }
  const std::vector<Link> &links() const { return links_; }

  // Max ordered-pair count L = n(n-1).
  std::int64_t pair_count() const { return n_ * (n_ - 1); }

  // Subgraph keeping all n nodes and only links with weight >= threshold.
  WeightedDigraph threshold_at(double min_weight) const;

  // Same topology, node i renamed perm[i].  perm must be a permutation of [0,n).
  WeightedDigraph relabeled(const std::vector<std::int32_t> &perm) const;

  friend bool operator==(const WeightedDigraph &, const WeightedDigraph &) = default;

  // Edge-list text format: '#' comment lines, then "n <count>", then
  // "src dst weight" per link.  Throws ParseError with a line number.
  static WeightedDigraph parse(std::istream &in);
  static WeightedDigraph load_file(const std::string &path);

  // Deterministic serialization: links sorted by (src, dst).
  void serialize(std::ostream &out) const;

private:
  std::int64_t n_;
  std::vector<Link> links_;
};

// Shortest-form decimal for a weight; round-trips through parse exactly.
std::string format_weight(double w);

} // namespace netc

#endif
