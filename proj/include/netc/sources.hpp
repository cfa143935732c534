#ifndef NETC_SOURCES_HPP
#define NETC_SOURCES_HPP

#include "netc/null_model.hpp"
#include "netc/ts2net.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace netc {

struct OdeSystem {
  std::int64_t dimension = 0;
  std::function<void(const std::vector<double> &state, std::vector<double> &rate)> derivative;
};

// Classical fixed-step 4th-order Runge-Kutta.  The first `transient` steps
// are discarded, then every `stride`-th state of the next `steps` steps is
// recorded (the post-transient initial state included).  Throws
// NumericError on a non-finite state.
Trajectory rk4_integrate(const OdeSystem &sys, const std::vector<double> &x0,
                         double dt, std::int64_t steps, std::int64_t transient,
                         std::int64_t stride);

// Lorenz system, sigma = 10, rho = 28, beta = 8/3.
OdeSystem lorenz_system(double sigma = 10.0, double rho = 28.0, double beta = 8.0 / 3.0);

// Henon-Heiles as a first-order system over (x, y, vx, vy).
OdeSystem henon_heiles_system();

// H = (vx^2 + vy^2)/2 + (x^2 + y^2)/2 + x^2 y - y^3/3 for a state row.
double henon_heiles_energy(const std::vector<double> &state);

// Default chaotic-regime initial condition at energy E = 1/8.
std::vector<double> henon_heiles_initial(double energy = 0.125);

struct CaRule {
  int rule_number = 0; // Wolfram code, 0..255

  explicit CaRule(int number);
  double lambda() const; // popcount / 8, quiescent state 0
  int apply(int left, int centre, int right) const;
};

double langton_lambda(int rule_number);

// Elementary CA with periodic boundary on `cells` cells, random initial
// state from the seed; each recorded global state is its cells-bit integer
// label.  The first `transient` updates are discarded, then `steps` states
// recorded.
LabelSeries ca_run(const CaRule &rule, std::int64_t cells, std::int64_t transient,
                   std::int64_t steps, std::uint64_t rng_seed);

struct CaSweepRow {
  int rule = 0;
  double lambda = 0.0;
  std::int64_t nodes = 0;
  std::int64_t links = 0;
  double c_bits = 0.0;
  double geo_mean_shuffled = 0.0;
  double surplus = 0.0;
  double sigmas = 0.0;
  bool degenerate = false;
};

struct CaSweepParams {
  std::int64_t cells = 10;
  std::int64_t transient = 1000;
  std::int64_t steps = 1024;
  std::int64_t seeds_per_rule = 1; // runs whose transition counts aggregate
  std::int64_t ensemble_samples = 100;
  std::uint64_t master_seed = 1;
  int threads = 1;
  std::int64_t aut_budget = kDefaultAutBudget;
};

// One row per rule 0..255, deterministic per master seed regardless of
// thread count.  `progress`, when set, is called after each finished rule.
std::vector<CaSweepRow> ca_sweep(const CaSweepParams &params,
                                 const std::function<void(const CaSweepRow &)> &progress = {});

} // namespace netc

#endif
