#include "netc/sources.hpp"
#include "netc/complexity.hpp"
#include "netc/errors.hpp"
#include "netc/rng.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <future>
#include <string>

namespace netc {

Trajectory rk4_integrate(const OdeSystem &sys, const std::vector<double> &x0,
                         double dt, std::int64_t steps, std::int64_t transient,
                         std::int64_t stride) {
  if (!(dt > 0.0)) throw DomainError("rk4_integrate: dt must be > 0");
  if (steps < 1) throw DomainError("rk4_integrate: steps must be >= 1");
  if (stride < 1) throw DomainError("rk4_integrate: stride must be >= 1");
  if (transient < 0) throw DomainError("rk4_integrate: transient must be >= 0");
  if (static_cast<std::int64_t>(x0.size()) != sys.dimension)
    throw DomainError("rk4_integrate: initial state dimension mismatch");

  std::size_t d = x0.size();
  std::vector<double> x = x0, k1(d), k2(d), k3(d), k4(d), tmp(d);
  auto step = [&]() {
    sys.derivative(x, k1);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    sys.derivative(tmp, k2);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    sys.derivative(tmp, k3);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + dt * k3[i];
    sys.derivative(tmp, k4);
    for (std::size_t i = 0; i < d; ++i)
      x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  };
  auto check = [&](std::int64_t at) {
    for (double v : x)
      if (!std::isfinite(v))
        throw NumericError("rk4_integrate: non-finite state at step " + std::to_string(at));
  };

  for (std::int64_t s = 0; s < transient; ++s) {
    step();
    check(s);
  }
  Trajectory t;
  t.dt = dt * static_cast<double>(stride);
  t.stride = stride;
  t.samples.push_back(x);
  for (std::int64_t s = 0; s < steps; ++s) {
    step();
    check(transient + s);
    if ((s + 1) % stride == 0) t.samples.push_back(x);
  }
  return t;
}

OdeSystem lorenz_system(double sigma, double rho, double beta) {
  OdeSystem sys;
  sys.dimension = 3;
  sys.derivative = [sigma, rho, beta](const std::vector<double> &s, std::vector<double> &r) {
    r[0] = sigma * (s[1] - s[0]);
    r[1] = s[0] * (rho - s[2]) - s[1];
    r[2] = s[0] * s[1] - beta * s[2];
  };
  return sys;
}

OdeSystem henon_heiles_system() {
  OdeSystem sys;
  sys.dimension = 4;
  sys.derivative = [](const std::vector<double> &s, std::vector<double> &r) {
    double x = s[0], y = s[1];
    r[0] = s[2];
    r[1] = s[3];
    r[2] = -x - 2.0 * x * y;
    r[3] = -y - (x * x - y * y);
  };
  return sys;
}

double henon_heiles_energy(const std::vector<double> &s) {
  double x = s[0], y = s[1], vx = s[2], vy = s[3];
  return 0.5 * (vx * vx + vy * vy) + 0.5 * (x * x + y * y) + x * x * y -
         y * y * y / 3.0;
}

std::vector<double> henon_heiles_initial(double energy) {
  double x = 0.0, y = 0.1;
  double v = 0.5 * (x * x + y * y) + x * x * y - y * y * y / 3.0;
  double kinetic = 2.0 * (energy - v);
  if (kinetic <= 0.0)
    throw DomainError("henon_heiles_initial: energy below potential at (0, 0.1)");
  return {x, y, std::sqrt(kinetic), 0.0};
}

CaRule::CaRule(int number) : rule_number(number) {
  if (number < 0 || number > 255)
    throw DomainError("CA rule number must be in [0, 255], got " + std::to_string(number));
}

double CaRule::lambda() const {
  return static_cast<double>(std::popcount(static_cast<unsigned>(rule_number))) / 8.0;
}

int CaRule::apply(int left, int centre, int right) const {
  int pattern = (left << 2) | (centre << 1) | right;
  return (rule_number >> pattern) & 1;
}

double langton_lambda(int rule_number) { return CaRule(rule_number).lambda(); }

LabelSeries ca_run(const CaRule &rule, std::int64_t cells, std::int64_t transient,
                   std::int64_t steps, std::uint64_t rng_seed) {
  if (cells < 1 || cells > 20)
    throw DomainError("ca_run: cells must be in [1, 20], got " + std::to_string(cells));
  if (steps < 2) throw DomainError("ca_run: steps must be >= 2");
  if (transient < 0) throw DomainError("ca_run: transient must be >= 0");

  Rng rng(rng_seed);
  std::uint64_t state = rng.next_u64() & ((std::uint64_t{1} << cells) - 1);

  auto update = [&](std::uint64_t s) {
    std::uint64_t next = 0;
    for (std::int64_t i = 0; i < cells; ++i) {
      int left = static_cast<int>((s >> ((i + 1) % cells)) & 1);
      int centre = static_cast<int>((s >> i) & 1);
      int right = static_cast<int>((s >> ((i - 1 + cells) % cells)) & 1);
      next |= static_cast<std::uint64_t>(rule.apply(left, centre, right)) << i;
    }
    return next;
  };

  for (std::int64_t s = 0; s < transient; ++s) state = update(state);

  LabelSeries out;
  out.alphabet_size = std::int64_t{1} << cells;
  out.labels.reserve(static_cast<std::size_t>(steps));
  for (std::int64_t s = 0; s < steps; ++s) {
    out.labels.push_back(static_cast<std::int64_t>(state));
    state = update(state);
  }
  return out;
}

std::vector<CaSweepRow> ca_sweep(const CaSweepParams &params,
                                 const std::function<void(const CaSweepRow &)> &progress) {
  auto run_rule = [&params](int rule_number) {
    CaRule rule(rule_number);
    // Aggregate transition counts over seeds_per_rule independent runs.
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;
    std::int64_t alphabet = std::int64_t{1} << params.cells;
    for (std::int64_t s = 0; s < params.seeds_per_rule; ++s) {
      std::uint64_t seed =
          Rng::substream(params.master_seed,
                         static_cast<std::uint64_t>(rule_number) * 1000003ULL +
                             static_cast<std::uint64_t>(s))
              .next_u64();
      LabelSeries series = ca_run(rule, params.cells, params.transient, params.steps, seed);
      for (std::size_t i = 0; i + 1 < series.labels.size(); ++i) {
        std::int64_t a = series.labels[i], b = series.labels[i + 1];
        if (a != b) ++counts[{a, b}];
      }
    }
    std::vector<Link> links;
    for (const auto &[pair, c] : counts)
      links.push_back({static_cast<std::int32_t>(pair.first),
                       static_cast<std::int32_t>(pair.second),
                       static_cast<double>(c)});
    WeightedDigraph g(alphabet, std::move(links));

    CaSweepRow row;
    row.rule = rule_number;
    row.lambda = rule.lambda();
    row.nodes = g.node_count();
    row.links = g.link_count();
    std::uint64_t ens_seed =
        Rng::substream(params.master_seed, 0x5ca1ab1eULL + static_cast<std::uint64_t>(rule_number))
            .next_u64();
    ShuffleStats stats = surplus_analysis(g, params.ensemble_samples, ens_seed, 1,
                                          params.aut_budget);
    row.c_bits = stats.c_bits;
    row.geo_mean_shuffled = stats.geo_mean;
    row.surplus = stats.surplus;
    row.sigmas = stats.sigmas;
    row.degenerate = stats.degenerate;
    return row;
  };

  std::vector<CaSweepRow> rows(256);
  if (params.threads <= 1) {
    for (int r = 0; r < 256; ++r) {
      rows[static_cast<std::size_t>(r)] = run_rule(r);
      if (progress) progress(rows[static_cast<std::size_t>(r)]);
    }
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<int> next{0};
    for (int t = 0; t < params.threads; ++t)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          int r = next.fetch_add(1);
          if (r >= 256) return;
          rows[static_cast<std::size_t>(r)] = run_rule(r);
        }
      }));
    for (auto &f : futs) f.get();
    if (progress)
      for (const CaSweepRow &row : rows) progress(row);
  }
  return rows;
}

} // namespace netc
