#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netc/automorphism.hpp"
#include "netc/encoding.hpp"
#include "netc/errors.hpp"
#include "netc/graph.hpp"
#include "netc/rng.hpp"

#include <cmath>

using namespace netc;

namespace {

WeightedDigraph from_edges(std::int64_t n, std::vector<std::pair<int, int>> edges) {
  std::vector<Link> links;
  for (auto [a, b] : edges) links.push_back({a, b, 1.0});
  return WeightedDigraph(n, std::move(links));
}

// All digraphs on n nodes, enumerated by the bitmask over ordered pairs.
WeightedDigraph nth_digraph(int n, std::uint64_t mask) {
  std::vector<Link> links;
  int bit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if ((mask >> bit) & 1) links.push_back({a, b, 1.0});
      ++bit;
    }
  return WeightedDigraph(n, std::move(links));
}

WeightedDigraph random_digraph(std::int64_t n, double p, Rng &rng) {
  std::vector<Link> links;
  for (std::int32_t a = 0; a < n; ++a)
    for (std::int32_t b = 0; b < n; ++b)
      if (a != b && rng.uniform01() < p) links.push_back({a, b, 1.0});
  return WeightedDigraph(n, std::move(links));
}

} // namespace

TEST_CASE("directed 3-cycle has |Aut| = 3") {
  auto g = from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  AutResult r = automorphism_log_size(g);
  CHECK(r.log2_aut == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  CHECK(r.orbit_count == 1);
  AutResult bf = automorphism_brute_force(g);
  CHECK(bf.log2_aut == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
}

TEST_CASE("empty graph has the full symmetric group") {
  for (std::int64_t n : {1, 2, 5, 17, 300}) {
    WeightedDigraph g(n, {});
    AutResult r = automorphism_log_size(g);
    CHECK(r.log2_aut == doctest::Approx(log2_factorial(n)).epsilon(1e-12));
    CHECK(r.orbit_count == 1);
  }
}

TEST_CASE("the figure-1 topology is asymmetric") {
  auto g = from_edges(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}});
  CHECK(automorphism_log_size(g).log2_aut == doctest::Approx(0.0));
  CHECK(automorphism_brute_force(g).log2_aut == doctest::Approx(0.0));
}

TEST_CASE("complete digraph on 4 nodes has |Aut| = 24") {
  std::vector<Link> links;
  for (std::int32_t a = 0; a < 4; ++a)
    for (std::int32_t b = 0; b < 4; ++b)
      if (a != b) links.push_back({a, b, 1.0});
  WeightedDigraph g(4, links);
  CHECK(automorphism_brute_force(g).log2_aut ==
        doctest::Approx(std::log2(24.0)).epsilon(1e-12));
  CHECK(automorphism_log_size(g).log2_aut ==
        doctest::Approx(std::log2(24.0)).epsilon(1e-12));
}

TEST_CASE("single directed edge has trivial automorphism group") {
  auto g = from_edges(2, {{0, 1}});
  CHECK(automorphism_brute_force(g).log2_aut == doctest::Approx(0.0));
  CHECK(automorphism_log_size(g).log2_aut == doctest::Approx(0.0));
}

TEST_CASE("refinement search equals brute force on all 4096 digraphs with n = 3..4") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    auto g = nth_digraph(3, mask);
    CHECK(automorphism_log_size(g).log2_aut ==
          doctest::Approx(automorphism_brute_force(g).log2_aut).epsilon(1e-12));
  }
  for (std::uint64_t mask = 0; mask < 4096; ++mask) {
    auto g = nth_digraph(4, mask);
    AutResult fast = automorphism_log_size(g);
    AutResult slow = automorphism_brute_force(g);
    CHECK(fast.log2_aut == doctest::Approx(slow.log2_aut).epsilon(1e-12));
    CHECK(fast.orbit_count == slow.orbit_count);
  }
}

TEST_CASE("refinement search equals brute force on random digraphs n = 5..7") {
  Rng rng(7);
  for (std::int64_t n : {5, 6, 7}) {
    for (int trial = 0; trial < 200; ++trial) {
      double p = 0.05 + 0.9 * rng.uniform01();
      auto g = random_digraph(n, p, rng);
      CHECK(automorphism_log_size(g).log2_aut ==
            doctest::Approx(automorphism_brute_force(g).log2_aut).epsilon(1e-12));
    }
  }
}

TEST_CASE("result is independent of input link order and labeling") {
  Rng rng(11);
  auto g = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  double expected = automorphism_log_size(g).log2_aut;
  CHECK(expected == doctest::Approx(std::log2(18.0)).epsilon(1e-12)); // 3 x 3 x swap
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int32_t> perm(6);
    for (int i = 0; i < 6; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = 5; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[rng.uniform_below(static_cast<std::uint64_t>(i + 1))]);
    CHECK(automorphism_log_size(g.relabeled(perm)).log2_aut ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("isolated nodes contribute factorially without entering the search") {
  // Directed edge plus k isolated nodes: |Aut| = k!.
  for (std::int64_t k : {1, 2, 5, 100, 2000}) {
    auto g = from_edges(2 + k, {{0, 1}});
    CHECK(automorphism_log_size(g).log2_aut ==
          doctest::Approx(log2_factorial(k)).epsilon(1e-9));
  }
  // Spot-check against brute force within its range.
  for (std::int64_t k : {1, 2, 3}) {
    auto g = from_edges(2 + k, {{0, 1}});
    CHECK(automorphism_log_size(g).log2_aut ==
          doctest::Approx(automorphism_brute_force(g).log2_aut).epsilon(1e-12));
  }
}

TEST_CASE("weights are ignored by the automorphism search") {
  WeightedDigraph a(3, {{0, 1, 1.0}, {1, 0, 1.0}});
  WeightedDigraph b(3, {{0, 1, 7.5}, {1, 0, 0.25}});
  CHECK(automorphism_log_size(a).log2_aut ==
        doctest::Approx(automorphism_log_size(b).log2_aut));
}

TEST_CASE("budget exhaustion raises a resource error") {
  auto g = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(automorphism_log_size(g, 3), ResourceError);
}

TEST_CASE("brute force refuses n > 8") {
  WeightedDigraph g(9, {});
  CHECK_THROWS_AS(automorphism_brute_force(g), DomainError);
}
