#include "netc/ts2net.hpp"
#include "netc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace netc {

Trajectory Trajectory::read_csv(std::istream &in) {
  Trajectory t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) {
      try {
        row.push_back(std::stod(field));
      } catch (const std::exception &) {
        throw ParseError("trajectory line " + std::to_string(line_no) +
                         ": bad number '" + field + "'");
      }
      if (!std::isfinite(row.back()))
        throw ParseError("trajectory line " + std::to_string(line_no) +
                         ": non-finite value");
    }
    if (row.empty()) continue;
    if (!t.samples.empty() && row.size() != t.samples.front().size())
      throw ParseError("trajectory line " + std::to_string(line_no) +
                       ": dimension mismatch");
    t.samples.push_back(std::move(row));
  }
  if (t.samples.size() < 2) throw ParseError("trajectory: need at least 2 samples");
  return t;
}

void Trajectory::write_csv(std::ostream &out) const {
  for (const auto &row : samples) {
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? "," : "") << format_weight(row[j]);
    out << "\n";
  }
}

TransitionNetwork transitions_to_network(const LabelSeries &s) {
  if (s.labels.size() < 2)
    throw DomainError("transitions_to_network: series shorter than 2");
  for (std::int64_t x : s.labels)
    if (x < 0 || x >= s.alphabet_size)
      throw DomainError("transitions_to_network: label " + std::to_string(x) +
                        " outside alphabet [0," + std::to_string(s.alphabet_size) + ")");
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;
  std::int64_t dropped = 0;
  for (std::size_t i = 0; i + 1 < s.labels.size(); ++i) {
    std::int64_t a = s.labels[i], b = s.labels[i + 1];
    if (a == b) {
      ++dropped;
      continue;
    }
    ++counts[{a, b}];
  }
  std::vector<Link> links;
  links.reserve(counts.size());
  for (const auto &[pair, c] : counts)
    links.push_back({static_cast<std::int32_t>(pair.first),
                     static_cast<std::int32_t>(pair.second),
                     static_cast<double>(c)});
  return {WeightedDigraph(s.alphabet_size, std::move(links)), dropped};
}

LabelSeries coarse_grain(const Trajectory &t, std::int64_t cells_per_dim,
                         std::string *warning) {
  if (cells_per_dim < 1) throw DomainError("coarse_grain: cells_per_dim must be >= 1");
  if (t.length() < 2) throw DomainError("coarse_grain: need at least 2 samples");
  std::int64_t d = t.dimension();

  std::vector<double> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (std::int64_t j = 0; j < d; ++j) {
    lo[static_cast<std::size_t>(j)] = hi[static_cast<std::size_t>(j)] =
        t.samples[0][static_cast<std::size_t>(j)];
  }
  for (const auto &row : t.samples)
    for (std::int64_t j = 0; j < d; ++j) {
      lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j)]);
      hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j)]);
    }

  std::vector<std::int64_t> bins(static_cast<std::size_t>(d), cells_per_dim);
  for (std::int64_t j = 0; j < d; ++j)
    if (lo[static_cast<std::size_t>(j)] == hi[static_cast<std::size_t>(j)]) {
      bins[static_cast<std::size_t>(j)] = 1;
      if (warning)
        *warning += "dimension " + std::to_string(j) +
                    " is constant; collapsed to one bin\n";
    }

  LabelSeries out;
  out.alphabet_size = 1;
  for (std::int64_t b : bins) out.alphabet_size *= b;
  out.labels.reserve(t.samples.size());
  for (const auto &row : t.samples) {
    std::int64_t label = 0;
    for (std::int64_t j = 0; j < d; ++j) {
      std::int64_t nb = bins[static_cast<std::size_t>(j)];
      std::int64_t b = 0;
      if (nb > 1) {
        double span = hi[static_cast<std::size_t>(j)] - lo[static_cast<std::size_t>(j)];
        double f = (row[static_cast<std::size_t>(j)] - lo[static_cast<std::size_t>(j)]) / span;
        b = static_cast<std::int64_t>(f * static_cast<double>(nb));
        b = std::clamp<std::int64_t>(b, 0, nb - 1); // max value lands in last bin
      }
      label = label * nb + b;
    }
    out.labels.push_back(label);
  }
  return out;
}

namespace {

std::vector<int> window_ranks(const std::vector<std::vector<double>> &samples,
                              std::size_t start, std::int64_t w) {
  std::vector<int> order(static_cast<std::size_t>(w));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return samples[start + static_cast<std::size_t>(a)][0] <
           samples[start + static_cast<std::size_t>(b)][0];
  });
  std::vector<int> ranks(static_cast<std::size_t>(w));
  for (int r = 0; r < w; ++r) ranks[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r + 1;
  return ranks;
}

// Lehmer code of the rank tuple: its lexicographic index among all w!
// permutations of (1..w).
std::int64_t lex_index(const std::vector<int> &ranks) {
  std::int64_t idx = 0;
  std::size_t w = ranks.size();
  for (std::size_t i = 0; i < w; ++i) {
    std::int64_t smaller = 0;
    for (std::size_t j = i + 1; j < w; ++j)
      if (ranks[j] < ranks[i]) ++smaller;
    std::int64_t fact = 1;
    for (std::size_t k = 2; k <= w - 1 - i; ++k) fact *= static_cast<std::int64_t>(k);
    idx += smaller * fact;
  }
  return idx;
}

} // namespace

OrdinalEncoding ordinal_encode(const Trajectory &t, std::int64_t w) {
  if (t.dimension() != 1) throw DomainError("ordinal_encode: series must be 1-dimensional");
  if (w < 2) throw DomainError("ordinal_encode: window must be >= 2");
  if (t.length() < w) throw DomainError("ordinal_encode: series shorter than window");
  if (w > 20) throw DomainError("ordinal_encode: window > 20 overflows the label space");

  OrdinalEncoding enc;
  enc.window = w;
  std::int64_t alphabet = 1;
  for (std::int64_t k = 2; k <= w; ++k) alphabet *= k;
  enc.labels.alphabet_size = alphabet;

  std::set<std::int64_t> seen;
  for (std::size_t start = 0; start + static_cast<std::size_t>(w) <= t.samples.size(); ++start) {
    std::vector<int> ranks = window_ranks(t.samples, start, w);
    std::int64_t label = lex_index(ranks);
    seen.insert(label);
    enc.labels.labels.push_back(label);
    enc.ranks.push_back(std::move(ranks));
  }
  enc.m = static_cast<std::int64_t>(seen.size());
  return enc;
}

std::int64_t optimal_window(const Trajectory &t, std::int64_t w_max,
                            std::vector<std::int64_t> *m_curve,
                            std::string *warning) {
  if (w_max < 3) throw DomainError("optimal_window: w_max must be >= 3");
  if (t.length() < w_max) throw DomainError("optimal_window: series shorter than w_max");

  std::vector<std::int64_t> m; // m[i] = m(w = i + 2)
  for (std::int64_t w = 2; w <= w_max; ++w)
    m.push_back(ordinal_encode(t, w).m);
  if (m_curve) *m_curve = m;

  std::int64_t best_w = 2;
  std::int64_t best_delta = m[0] - 1; // m(1) = 1: a single sample has one ordering
  bool flat = true;
  for (std::int64_t w = 3; w <= w_max; ++w) {
    std::int64_t delta = m[static_cast<std::size_t>(w - 2)] - m[static_cast<std::size_t>(w - 3)];
    if (delta != best_delta) flat = false;
    if (delta > best_delta) {
      best_delta = delta;
      best_w = w;
    }
  }
  if (flat && warning) *warning = "flat delta-m curve; defaulting to w = 2";
  return flat ? 2 : best_w;
}

} // namespace netc
