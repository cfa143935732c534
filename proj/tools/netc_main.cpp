#include "netc/complexity.hpp"
#include "netc/errors.hpp"
#include "netc/graph.hpp"
#include "netc/null_model.hpp"
#include "netc/rng.hpp"
#include "netc/sources.hpp"
#include "netc/svg_plot.hpp"
#include "netc/ts2net.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr const char *kVersion = "netc 0.1.0";

std::uint64_t default_seed() {
  if (const char *env = std::getenv("NETC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
      throw netc::DomainError(std::string("NETC_SEED is not a valid integer: ") + env);
    }
  }
  return 1;
}

std::ofstream open_out(const std::string &path) {
  std::ofstream out(path);
  if (!out) throw netc::ParseError("cannot write '" + path + "'");
  return out;
}

// Every output carries the tool version and the fully resolved config, so a
// rerun from the header alone reproduces the file byte for byte.
void write_header(std::ostream &out, const std::string &command,
                  const std::vector<std::pair<std::string, std::string>> &config) {
  out << "# " << kVersion << "\n# command=" << command;
  for (const auto &[k, v] : config) out << " " << k << "=" << v;
  out << "\n";
}

struct GenerateResult {
  netc::WeightedDigraph graph;
  std::int64_t dropped = 0;
  std::vector<std::pair<std::string, std::string>> config;
};

netc::LabelSeries compress_to_occupied(const netc::LabelSeries &s) {
  std::map<std::int64_t, std::int64_t> remap;
  for (std::int64_t x : s.labels) remap.emplace(x, 0);
  std::int64_t next = 0;
  for (auto &[k, v] : remap) v = next++;
  netc::LabelSeries out;
  out.alphabet_size = next;
  for (std::int64_t x : s.labels) out.labels.push_back(remap[x]);
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Information-based network complexity: encoding length minus "
               "log2 of the automorphism-equivalent description count, with a "
               "weight-preserving shuffle null model and timeseries-to-network "
               "generation from chaotic systems and cellular automata."};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::int64_t aut_budget = netc::kDefaultAutBudget;
  app.add_option("--aut-budget", aut_budget, "Automorphism search backtrack budget");

  // -- complexity ----------------------------------------------------------
  auto *cmd_cx = app.add_subcommand("complexity", "Complexity of an edge-list graph");
  std::string cx_input, cx_out;
  cmd_cx->add_option("input", cx_input, "Edge-list file")->required();
  cmd_cx->add_option("--out", cx_out, "Write the per-threshold CSV here");

  // -- surplus -------------------------------------------------------------
  auto *cmd_sp = app.add_subcommand("surplus", "Complexity surplus vs the shuffled ensemble");
  std::string sp_input, sp_out, sp_audit, sp_dataset = "dataset";
  std::int64_t sp_samples = 100;
  std::uint64_t sp_seed = default_seed();
  int sp_threads = 1;
  cmd_sp->add_option("input", sp_input, "Edge-list file")->required();
  cmd_sp->add_option("--samples", sp_samples, "Shuffle ensemble size");
  cmd_sp->add_option("--seed", sp_seed, "Master RNG seed");
  cmd_sp->add_option("--threads", sp_threads, "Worker threads (result independent)");
  cmd_sp->add_option("--dataset", sp_dataset, "Dataset name for the CSV row");
  cmd_sp->add_option("--out", sp_out, "Write the CSV row here");
  cmd_sp->add_option("--audit", sp_audit, "Write per-sample shuffled C values here");

  // -- generate ------------------------------------------------------------
  auto *cmd_gen = app.add_subcommand("generate", "Generate a network from a source system");
  cmd_gen->require_subcommand(1);
  std::string gen_out, gen_dump;
  std::int64_t gen_bins = 20, gen_steps = -1, gen_transient = 1000, gen_stride = 1;
  double gen_dt = -1.0;
  std::uint64_t gen_seed = default_seed();
  bool occupied_only = false;

  auto add_common = [&](CLI::App *c, bool continuous) {
    c->add_option("--out", gen_out, "Edge-list output file");
    c->add_option("--steps", gen_steps, "Recorded steps");
    c->add_option("--transient", gen_transient, "Discarded leading steps");
    c->add_flag("--occupied-only", occupied_only, "Drop never-visited cells from the node set");
    if (continuous) {
      c->add_option("--bins", gen_bins, "Cells per dimension");
      c->add_option("--dt", gen_dt, "Integration step");
      c->add_option("--stride", gen_stride, "Record every stride-th step");
      c->add_option("--dump-trajectory", gen_dump, "Also write the raw trajectory CSV");
    }
  };
  auto *gen_lorenz = cmd_gen->add_subcommand("lorenz", "Lorenz system transition network");
  add_common(gen_lorenz, true);
  auto *gen_henon = cmd_gen->add_subcommand("henon", "Henon-Heiles transition network");
  add_common(gen_henon, true);
  auto *gen_ca = cmd_gen->add_subcommand("ca", "Elementary CA transition network");
  int ca_rule = 30;
  std::int64_t ca_cells = 10;
  gen_ca->add_option("--rule", ca_rule, "Wolfram rule number 0..255");
  gen_ca->add_option("--cells", ca_cells, "CA width in cells");
  gen_ca->add_option("--seed", gen_seed, "Initial-state seed");
  add_common(gen_ca, false);
  auto *gen_pa = cmd_gen->add_subcommand("pa", "Preferential attachment control");
  std::int64_t pa_nodes = 100, pa_outdeg = 1;
  gen_pa->add_option("--nodes", pa_nodes, "Node count");
  gen_pa->add_option("--out-degree", pa_outdeg, "Links added per new node");
  gen_pa->add_option("--seed", gen_seed, "RNG seed");
  gen_pa->add_option("--out", gen_out, "Edge-list output file");

  // -- ca-sweep ------------------------------------------------------------
  auto *cmd_sweep = app.add_subcommand("ca-sweep", "Complexity vs Langton's lambda over all 256 rules");
  netc::CaSweepParams sw;
  sw.master_seed = default_seed();
  std::string sw_out, sw_svg;
  cmd_sweep->add_option("--cells", sw.cells, "CA width in cells");
  cmd_sweep->add_option("--transient", sw.transient, "Discarded leading steps");
  cmd_sweep->add_option("--steps", sw.steps, "Recorded steps per run");
  cmd_sweep->add_option("--samples", sw.ensemble_samples, "Shuffle ensemble size per rule");
  cmd_sweep->add_option("--seeds-per-rule", sw.seeds_per_rule, "Aggregated random initial states per rule");
  cmd_sweep->add_option("--seed", sw.master_seed, "Master RNG seed");
  cmd_sweep->add_option("--threads", sw.threads, "Worker threads (result independent)");
  cmd_sweep->add_option("--out", sw_out, "CSV output file");
  cmd_sweep->add_option("--svg", sw_svg, "Also render a C / shuffled-C vs lambda scatter");

  // -- ordinal -------------------------------------------------------------
  auto *cmd_ord = app.add_subcommand("ordinal", "Ordinal encoding and optimal window of a scalar series");
  std::string ord_input, ord_out;
  std::int64_t ord_wmax = 8, ord_window = 0;
  cmd_ord->add_option("input", ord_input, "Trajectory CSV (one column)")->required();
  cmd_ord->add_option("--w-max", ord_wmax, "Largest window for the m(w) scan");
  cmd_ord->add_option("--window", ord_window, "Emit labels for this window instead of scanning");
  cmd_ord->add_option("--out", ord_out, "Write the label series here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_cx) {
      netc::WeightedDigraph g = netc::WeightedDigraph::load_file(cx_input);
      netc::ComplexityReport report = netc::complexity_weighted(g, aut_budget);
      std::cout << "n=" << g.node_count() << " l=" << g.link_count()
                << " C=" << netc::format_weight(report.c_bits) << " bits\n";
      std::ostringstream csv;
      write_header(csv, "complexity", {{"input", cx_input}});
      report.write_csv(csv);
      if (!cx_out.empty())
        open_out(cx_out) << csv.str();
      else
        std::cout << csv.str();
    } else if (*cmd_sp) {
      netc::WeightedDigraph g = netc::WeightedDigraph::load_file(sp_input);
      netc::ShuffleStats stats =
          netc::surplus_analysis(g, sp_samples, sp_seed, sp_threads, aut_budget);
      std::ostringstream csv;
      write_header(csv, "surplus",
                   {{"input", sp_input},
                    {"samples", std::to_string(sp_samples)},
                    {"seed", std::to_string(sp_seed)}});
      csv << "dataset,nodes,links,C,geo_mean_shuffled,surplus,sigmas\n"
          << sp_dataset << ',' << g.node_count() << ',' << g.link_count() << ','
          << netc::format_weight(stats.c_bits) << ','
          << netc::format_weight(stats.geo_mean) << ','
          << netc::format_weight(stats.surplus) << ','
          << (stats.degenerate ? "degenerate" : netc::format_weight(stats.sigmas))
          << "\n";
      if (!sp_out.empty())
        open_out(sp_out) << csv.str();
      std::cout << csv.str();
      if (!sp_audit.empty()) {
        auto audit = open_out(sp_audit);
        write_header(audit, "surplus-audit",
                     {{"input", sp_input},
                      {"samples", std::to_string(sp_samples)},
                      {"seed", std::to_string(sp_seed)}});
        for (double c : stats.samples) audit << netc::format_weight(c) << "\n";
      }
    } else if (*cmd_gen) {
      netc::LabelSeries series;
      std::vector<std::pair<std::string, std::string>> config;
      std::string source;
      netc::Trajectory traj;
      bool have_traj = false;

      if (*gen_lorenz || *gen_henon) {
        bool lorenz = static_cast<bool>(*gen_lorenz);
        source = lorenz ? "lorenz" : "henon";
        if (gen_dt <= 0.0) gen_dt = lorenz ? 0.01 : 0.001;
        if (gen_steps < 0) gen_steps = lorenz ? 2000 : 40000;
        if (!*gen_lorenz && gen_bins == 20) gen_bins = 10;
        netc::OdeSystem sys = lorenz ? netc::lorenz_system() : netc::henon_heiles_system();
        std::vector<double> x0 =
            lorenz ? std::vector<double>{1.0, 1.0, 1.0} : netc::henon_heiles_initial();
        traj = netc::rk4_integrate(sys, x0, gen_dt, gen_steps, gen_transient, gen_stride);
        have_traj = true;
        std::string warning;
        series = netc::coarse_grain(traj, gen_bins, &warning);
        if (!warning.empty()) std::cerr << warning;
        config = {{"source", source},
                  {"dt", netc::format_weight(gen_dt)},
                  {"steps", std::to_string(gen_steps)},
                  {"transient", std::to_string(gen_transient)},
                  {"stride", std::to_string(gen_stride)},
                  {"bins", std::to_string(gen_bins)}};
      } else if (*gen_ca) {
        source = "ca";
        if (gen_steps < 0) gen_steps = 1024;
        series = netc::ca_run(netc::CaRule(ca_rule), ca_cells, gen_transient, gen_steps, gen_seed);
        config = {{"source", "ca"},
                  {"rule", std::to_string(ca_rule)},
                  {"lambda", netc::format_weight(netc::langton_lambda(ca_rule))},
                  {"cells", std::to_string(ca_cells)},
                  {"transient", std::to_string(gen_transient)},
                  {"steps", std::to_string(gen_steps)},
                  {"seed", std::to_string(gen_seed)}};
      } else if (*gen_pa) {
        netc::WeightedDigraph g = netc::preferential_attachment(pa_nodes, pa_outdeg, gen_seed);
        std::ostringstream body;
        write_header(body, "generate pa",
                     {{"nodes", std::to_string(pa_nodes)},
                      {"out_degree", std::to_string(pa_outdeg)},
                      {"seed", std::to_string(gen_seed)}});
        g.serialize(body);
        if (!gen_out.empty())
          open_out(gen_out) << body.str();
        else
          std::cout << body.str();
        return 0;
      }

      if (occupied_only) {
        series = compress_to_occupied(series);
        config.emplace_back("occupied_only", "1");
      }
      netc::TransitionNetwork net = netc::transitions_to_network(series);
      config.emplace_back("dropped_self_transitions", std::to_string(net.dropped_count));
      std::ostringstream body;
      write_header(body, "generate " + source, config);
      net.graph.serialize(body);
      if (!gen_out.empty())
        open_out(gen_out) << body.str();
      else
        std::cout << body.str();
      if (have_traj && !gen_dump.empty()) {
        auto dump = open_out(gen_dump);
        write_header(dump, "trajectory " + source, config);
        traj.write_csv(dump);
      }
      std::cerr << "generated " << source << ": n=" << net.graph.node_count()
                << " l=" << net.graph.link_count()
                << " dropped=" << net.dropped_count << "\n";
    } else if (*cmd_sweep) {
      sw.aut_budget = aut_budget;
      std::ostringstream csv;
      write_header(csv, "ca-sweep",
                   {{"cells", std::to_string(sw.cells)},
                    {"transient", std::to_string(sw.transient)},
                    {"steps", std::to_string(sw.steps)},
                    {"samples", std::to_string(sw.ensemble_samples)},
                    {"seeds_per_rule", std::to_string(sw.seeds_per_rule)},
                    {"seed", std::to_string(sw.master_seed)}});
      csv << "rule,lambda,C,geo_mean_shuffled,surplus,sigmas\n";
      // Partial results flush per rule so long sweeps are resumable reading.
      std::ofstream out_file;
      if (!sw_out.empty()) {
        out_file = open_out(sw_out);
        out_file << csv.str();
        out_file.flush();
      }
      std::vector<netc::CaSweepRow> rows = netc::ca_sweep(sw, [&](const netc::CaSweepRow &row) {
        std::ostringstream line;
        line << row.rule << ',' << netc::format_weight(row.lambda) << ','
             << netc::format_weight(row.c_bits) << ','
             << netc::format_weight(row.geo_mean_shuffled) << ','
             << netc::format_weight(row.surplus) << ','
             << (row.degenerate ? "degenerate" : netc::format_weight(row.sigmas))
             << "\n";
        csv << line.str();
        if (out_file.is_open()) {
          out_file << line.str();
          out_file.flush();
        }
        std::cerr << "rule " << row.rule << " done\n";
      });
      if (sw_out.empty()) std::cout << csv.str();
      if (!sw_svg.empty()) {
        netc::ScatterSeries c_series{"C", "#1f77b4", {}};
        netc::ScatterSeries s_series{"shuffled C (geo mean)", "#d62728", {}};
        for (const auto &row : rows) {
          c_series.points.emplace_back(row.lambda, row.c_bits);
          s_series.points.emplace_back(row.lambda, row.geo_mean_shuffled);
        }
        auto svg = open_out(sw_svg);
        netc::write_svg_scatter(svg, "Complexity vs Langton's lambda", "lambda",
                                "C (bits)", {c_series, s_series});
      }
    } else if (*cmd_ord) {
      std::ifstream in(ord_input);
      if (!in) throw netc::ParseError("cannot open '" + ord_input + "'");
      netc::Trajectory traj = netc::Trajectory::read_csv(in);
      if (ord_window >= 2) {
        netc::OrdinalEncoding enc = netc::ordinal_encode(traj, ord_window);
        std::cout << "w=" << enc.window << " m=" << enc.m
                  << " alphabet=" << enc.labels.alphabet_size << "\n";
        if (!ord_out.empty()) {
          auto out = open_out(ord_out);
          write_header(out, "ordinal",
                       {{"input", ord_input}, {"window", std::to_string(ord_window)}});
          for (std::int64_t x : enc.labels.labels) out << x << "\n";
        }
      } else {
        std::vector<std::int64_t> m_curve;
        std::string warning;
        std::int64_t w_opt = netc::optimal_window(traj, ord_wmax, &m_curve, &warning);
        for (std::int64_t w = 2; w <= ord_wmax; ++w)
          std::cout << "m(" << w << ") = " << m_curve[static_cast<std::size_t>(w - 2)] << "\n";
        std::cout << "w_opt = " << w_opt << "\n";
        if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
      }
    }
  } catch (const netc::ResourceError &e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const netc::NumericError &e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  } catch (const netc::ParseError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const netc::DomainError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
