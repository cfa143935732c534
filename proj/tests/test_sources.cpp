#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netc/errors.hpp"
#include "netc/sources.hpp"

#include <cmath>
#include <set>

using namespace netc;

TEST_CASE("zero derivative gives a constant trajectory") {
  OdeSystem sys;
  sys.dimension = 2;
  sys.derivative = [](const std::vector<double> &, std::vector<double> &r) {
    r[0] = r[1] = 0.0;
  };
  Trajectory t = rk4_integrate(sys, {3.0, -1.0}, 0.1, 20, 5, 1);
  CHECK(t.length() == 21);
  for (const auto &row : t.samples) {
    CHECK(row[0] == 3.0);
    CHECK(row[1] == -1.0);
  }
}

TEST_CASE("exponential decay matches the closed form to 1e-8") {
  OdeSystem sys;
  sys.dimension = 1;
  sys.derivative = [](const std::vector<double> &s, std::vector<double> &r) { r[0] = -s[0]; };
  Trajectory t = rk4_integrate(sys, {1.0}, 0.01, 100, 0, 1);
  CHECK(t.samples.back()[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
}

TEST_CASE("measured convergence order is 4") {
  OdeSystem sys;
  sys.dimension = 1;
  sys.derivative = [](const std::vector<double> &s, std::vector<double> &r) { r[0] = -s[0]; };
  auto err_at = [&](double dt) {
    std::int64_t steps = static_cast<std::int64_t>(std::llround(1.0 / dt));
    Trajectory t = rk4_integrate(sys, {1.0}, dt, steps, 0, steps);
    return std::abs(t.samples.back()[0] - std::exp(-1.0));
  };
  double e1 = err_at(0.01), e2 = err_at(0.005);
  double order = std::log2(e1 / e2);
  CHECK(order > 3.8);
  CHECK(order < 4.2);
}

TEST_CASE("stride and transient bookkeeping") {
  OdeSystem sys;
  sys.dimension = 1;
  sys.derivative = [](const std::vector<double> &, std::vector<double> &r) { r[0] = 1.0; };
  Trajectory t = rk4_integrate(sys, {0.0}, 0.5, 10, 4, 2);
  // State after transient is 2.0; recorded at strides of 2 steps = 1.0 units.
  CHECK(t.length() == 6);
  CHECK(t.samples[0][0] == doctest::Approx(2.0));
  CHECK(t.samples[1][0] == doctest::Approx(3.0));
  CHECK(t.dt == doctest::Approx(1.0));
}

TEST_CASE("divergence is reported with the step index") {
  OdeSystem sys;
  sys.dimension = 1;
  sys.derivative = [](const std::vector<double> &s, std::vector<double> &r) {
    r[0] = s[0] * s[0];
  };
  CHECK_THROWS_AS(rk4_integrate(sys, {10.0}, 1.0, 100, 0, 1), NumericError);
}

TEST_CASE("lorenz derivative at the fixed points") {
  OdeSystem sys = lorenz_system();
  std::vector<double> r(3);
  sys.derivative({0, 0, 0}, r);
  CHECK(r == std::vector<double>{0, 0, 0});
  sys.derivative({1, 1, 1}, r);
  CHECK(r[0] == doctest::Approx(0.0));
  CHECK(r[1] == doctest::Approx(26.0));
  CHECK(r[2] == doctest::Approx(1.0 - 8.0 / 3.0));
  double s = std::sqrt(72.0); // x^2 = beta (rho - 1) = 72
  sys.derivative({s, s, 27.0}, r);
  CHECK(r[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(r[2]) < 1e-12);
}

TEST_CASE("lorenz trajectories stay bounded") {
  Trajectory t = rk4_integrate(lorenz_system(), {1, 1, 1}, 0.01, 200000, 0, 100);
  for (const auto &row : t.samples)
    for (double v : row) CHECK(std::abs(v) < 100.0);
}

TEST_CASE("henon-heiles derivative basics") {
  OdeSystem sys = henon_heiles_system();
  std::vector<double> r(4);
  sys.derivative({0, 0, 0, 0}, r);
  CHECK(r == std::vector<double>{0, 0, 0, 0});
  sys.derivative({0, 0.01, 0, 0}, r);
  CHECK(r[3] == doctest::Approx(-0.01 + 0.0001));
}

TEST_CASE("henon-heiles energy is conserved to 1e-6 relative") {
  std::vector<double> x0 = henon_heiles_initial();
  double e0 = henon_heiles_energy(x0);
  CHECK(e0 == doctest::Approx(0.125).epsilon(1e-12));
  Trajectory t = rk4_integrate(henon_heiles_system(), x0, 1e-3, 10000, 0, 100);
  for (const auto &row : t.samples)
    CHECK(std::abs(henon_heiles_energy(row) - e0) / e0 < 1e-6);
}

TEST_CASE("energy drift shrinks superconvergently with dt") {
  // Measured: the endpoint energy error scales like dt^5 on this system
  // (the dt^4 global-error terms cancel in H), so at least 4th order.
  std::vector<double> x0 = henon_heiles_initial();
  double e0 = henon_heiles_energy(x0);
  auto drift = [&](double dt) {
    std::int64_t steps = static_cast<std::int64_t>(std::llround(400.0 / dt));
    Trajectory t = rk4_integrate(henon_heiles_system(), x0, dt, steps, 0, steps);
    return std::abs(henon_heiles_energy(t.samples.back()) - e0);
  };
  double d1 = drift(0.04), d2 = drift(0.02);
  double slope = std::log2(d1 / d2);
  CHECK(slope > 4.0);
  CHECK(slope < 5.5);
}

TEST_CASE("rule tables round-trip and lambda is the on-bit fraction") {
  for (int rule = 0; rule < 256; ++rule) {
    CaRule r(rule);
    int rebuilt = 0;
    for (int pattern = 0; pattern < 8; ++pattern)
      rebuilt |= r.apply((pattern >> 2) & 1, (pattern >> 1) & 1, pattern & 1) << pattern;
    CHECK(rebuilt == rule);
    CHECK(langton_lambda(rule) + langton_lambda(rule ^ 255) == doctest::Approx(1.0));
  }
  CHECK(langton_lambda(0) == 0.0);
  CHECK(langton_lambda(255) == 1.0);
  CHECK(langton_lambda(30) == 0.5);
  CHECK_THROWS_AS(langton_lambda(256), DomainError);
}

TEST_CASE("rule 0 collapses to the all-zero state") {
  LabelSeries s = ca_run(CaRule(0), 10, 5, 100, 42);
  for (std::int64_t x : s.labels) CHECK(x == 0);
  CHECK(s.alphabet_size == 1024);
}

TEST_CASE("rule 204 is the identity map") {
  // One-step oracle: every neighbourhood maps to its centre bit.
  CaRule r(204);
  for (int pattern = 0; pattern < 8; ++pattern)
    CHECK(r.apply((pattern >> 2) & 1, (pattern >> 1) & 1, pattern & 1) ==
          ((pattern >> 1) & 1));
  LabelSeries s = ca_run(CaRule(204), 8, 0, 50, 9);
  for (std::int64_t x : s.labels) CHECK(x == s.labels.front());
}

TEST_CASE("rule 30 runs are reproducible and eventually periodic") {
  LabelSeries a = ca_run(CaRule(30), 10, 1000, 2000, 77);
  LabelSeries b = ca_run(CaRule(30), 10, 1000, 2000, 77);
  CHECK(a.labels == b.labels);
  LabelSeries c = ca_run(CaRule(30), 10, 1000, 2000, 78);
  CHECK(a.labels != c.labels);
  // Pigeonhole on 2^10 states: a cycle must appear within 1024 steps.
  std::map<std::int64_t, std::size_t> first_seen;
  std::size_t cycle_start = 0, cycle_next = 0;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    auto it = first_seen.find(a.labels[i]);
    if (it != first_seen.end()) {
      cycle_start = it->second;
      cycle_next = i;
      break;
    }
    first_seen.emplace(a.labels[i], i);
  }
  CHECK(cycle_next > cycle_start);
  CHECK(cycle_next - cycle_start <= 1024);
  // The detected cycle actually repeats.
  std::size_t period = cycle_next - cycle_start;
  for (std::size_t i = cycle_start; i + period < a.labels.size(); ++i)
    CHECK(a.labels[i] == a.labels[i + period]);
}

TEST_CASE("ca_run argument validation") {
  CHECK_THROWS_AS(ca_run(CaRule(30), 0, 0, 10, 1), DomainError);
  CHECK_THROWS_AS(ca_run(CaRule(30), 21, 0, 10, 1), DomainError);
  CHECK_THROWS_AS(ca_run(CaRule(30), 5, 0, 1, 1), DomainError);
}

TEST_CASE("small ca sweep is deterministic and rule 0 has zero surplus") {
  CaSweepParams params;
  params.cells = 4;
  params.transient = 20;
  params.steps = 40;
  params.ensemble_samples = 10;
  params.master_seed = 3;
  std::vector<CaSweepRow> a = ca_sweep(params);
  std::vector<CaSweepRow> b = ca_sweep(params);
  REQUIRE(a.size() == 256);
  for (std::size_t i = 0; i < 256; ++i) {
    CHECK(a[i].c_bits == b[i].c_bits);
    CHECK(a[i].sigmas == b[i].sigmas);
  }
  CHECK(a[0].links == 0);
  CHECK(a[0].surplus == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(a[255].links == 0); // all-ones fixed state after one step
  params.threads = 4;
  std::vector<CaSweepRow> c = ca_sweep(params);
  for (std::size_t i = 0; i < 256; ++i) CHECK(a[i].c_bits == c[i].c_bits);
}
