#include "netc/null_model.hpp"
#include "netc/complexity.hpp"
#include "netc/errors.hpp"
#include "netc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <unordered_map>

namespace netc {

namespace {

// Virtual Fisher-Yates over [0, space): draws `count` distinct values
// uniformly without materializing the space.
std::vector<std::int64_t> sample_without_replacement(std::int64_t space,
                                                     std::int64_t count, Rng &rng) {
  std::unordered_map<std::int64_t, std::int64_t> moved;
  moved.reserve(static_cast<std::size_t>(count) * 2);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t j = i + static_cast<std::int64_t>(
                             rng.uniform_below(static_cast<std::uint64_t>(space - i)));
    auto it_j = moved.find(j);
    std::int64_t value = (it_j != moved.end()) ? it_j->second : j;
    auto it_i = moved.find(i);
    moved[j] = (it_i != moved.end()) ? it_i->second : i;
    out.push_back(value);
  }
  return out;
}

} // namespace

WeightedDigraph shuffle(const WeightedDigraph &g, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  std::int64_t n = g.node_count();
  std::int64_t l = g.link_count();
  std::int64_t space = g.pair_count();

  std::vector<std::int64_t> codes = sample_without_replacement(space, l, rng);

  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(l));
  for (const Link &lk : g.links()) weights.push_back(lk.weight);
  for (std::int64_t i = l - 1; i > 0; --i) {
    std::int64_t j = static_cast<std::int64_t>(
        rng.uniform_below(static_cast<std::uint64_t>(i + 1)));
    std::swap(weights[static_cast<std::size_t>(i)], weights[static_cast<std::size_t>(j)]);
  }

  std::vector<Link> links;
  links.reserve(static_cast<std::size_t>(l));
  for (std::int64_t i = 0; i < l; ++i) {
    std::int64_t code = codes[static_cast<std::size_t>(i)];
    std::int64_t src = code / (n - 1);
    std::int64_t t = code % (n - 1);
    std::int64_t dst = (t < src) ? t : t + 1;
    links.push_back({static_cast<std::int32_t>(src), static_cast<std::int32_t>(dst),
                     weights[static_cast<std::size_t>(i)]});
  }
  return WeightedDigraph(n, std::move(links));
}

ShuffleStats surplus_analysis(const WeightedDigraph &g, std::int64_t samples,
                              std::uint64_t rng_seed, int threads,
                              std::int64_t aut_budget) {
  if (samples < 2)
    throw DomainError("surplus_analysis: need at least 2 samples, got " +
                      std::to_string(samples));
  ShuffleStats stats;
  stats.sample_count = samples;
  stats.c_bits = complexity_weighted(g, aut_budget).c_bits;

  stats.samples.assign(static_cast<std::size_t>(samples), 0.0);
  auto eval_range = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      std::uint64_t seed = Rng::substream(rng_seed, static_cast<std::uint64_t>(i)).next_u64();
      WeightedDigraph s = shuffle(g, seed);
      stats.samples[static_cast<std::size_t>(i)] = complexity_weighted(s, aut_budget).c_bits;
    }
  };
  if (threads <= 1) {
    eval_range(0, samples);
  } else {
    std::vector<std::future<void>> futs;
    std::int64_t chunk = (samples + threads - 1) / threads;
    for (std::int64_t lo = 0; lo < samples; lo += chunk)
      futs.push_back(std::async(std::launch::async, eval_range, lo,
                                std::min(lo + chunk, samples)));
    for (auto &f : futs) f.get();
  }

  double sum = 0.0;
  for (double c : stats.samples) {
    if (!(c > 0.0))
      throw NumericError("surplus_analysis: non-positive shuffled complexity");
    sum += std::log(c);
  }
  stats.ln_c_mean = sum / static_cast<double>(samples);
  double ss = 0.0;
  for (double c : stats.samples) {
    double d = std::log(c) - stats.ln_c_mean;
    ss += d * d;
  }
  stats.ln_c_std = std::sqrt(ss / static_cast<double>(samples - 1));
  stats.geo_mean = std::exp(stats.ln_c_mean);
  stats.surplus = stats.c_bits - stats.geo_mean;

  auto [mn, mx] = std::minmax_element(stats.samples.begin(), stats.samples.end());
  stats.degenerate = (*mn == *mx);
  stats.sigmas = stats.degenerate
                     ? 0.0
                     : std::abs(std::log(stats.c_bits) - stats.ln_c_mean) / stats.ln_c_std;
  return stats;
}

WeightedDigraph preferential_attachment(std::int64_t n, std::int64_t out_degree,
                                        std::uint64_t rng_seed) {
  if (n < 2) throw DomainError("preferential_attachment: n must be >= 2");
  if (out_degree < 1) throw DomainError("preferential_attachment: out_degree must be >= 1");
  Rng rng(rng_seed);
  std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);
  std::vector<Link> links;
  for (std::int64_t i = 1; i < n; ++i) {
    // Early nodes may not have out_degree distinct targets available.
    std::int64_t picks = std::min(out_degree, i);
    std::vector<std::int64_t> w(static_cast<std::size_t>(i));
    std::int64_t total = 0;
    for (std::int64_t j = 0; j < i; ++j) {
      w[static_cast<std::size_t>(j)] = degree[static_cast<std::size_t>(j)] + 1;
      total += w[static_cast<std::size_t>(j)];
    }
    for (std::int64_t p = 0; p < picks; ++p) {
      std::int64_t r = static_cast<std::int64_t>(
          rng.uniform_below(static_cast<std::uint64_t>(total)));
      std::int64_t j = 0;
      while (r >= w[static_cast<std::size_t>(j)]) {
        r -= w[static_cast<std::size_t>(j)];
        ++j;
      }
      links.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j), 1.0});
      total -= w[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(j)] = 0; // no duplicate targets
      degree[static_cast<std::size_t>(j)] += 1;
      degree[static_cast<std::size_t>(i)] += 1;
    }
  }
  return WeightedDigraph(n, std::move(links));
}

} // namespace netc
