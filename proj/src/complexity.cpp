#include "netc/complexity.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace netc {

double complexity_unweighted(const WeightedDigraph &g, std::int64_t aut_budget) {
  EncodingLength el = description_length(g.node_count(), g.link_count());
  AutResult aut = automorphism_log_size(g, aut_budget);
  double log2_omega = log2_factorial(g.node_count()) - aut.log2_aut;
  return static_cast<double>(el.total_bits) - log2_omega;
}

ComplexityReport complexity_weighted(const WeightedDigraph &g, std::int64_t aut_budget) {
  std::set<double, std::greater<double>> weights;
  for (const Link &lk : g.links()) weights.insert(lk.weight);

  ComplexityReport report;
  if (weights.empty()) {
    // No links: single degenerate level, C = l_{n,0}.
    ComplexityLevel lv;
    lv.threshold = 0.0;
    lv.coefficient = 1.0;
    lv.n = g.node_count();
    lv.l = 0;
    lv.length = description_length(lv.n, 0);
    AutResult aut = automorphism_log_size(g, aut_budget);
    lv.log2_aut = aut.log2_aut;
    lv.c_bits = static_cast<double>(lv.length.total_bits) -
                (log2_factorial(lv.n) - aut.log2_aut);
    report.levels.push_back(lv);
    report.c_bits = lv.c_bits;
    return report;
  }

  std::vector<double> desc(weights.begin(), weights.end()); // w_1 > ... > w_k
  double w_max = desc.front();
  double total = 0.0;
  for (std::size_t i = 0; i < desc.size(); ++i) {
    double next = (i + 1 < desc.size()) ? desc[i + 1] : 0.0;
    ComplexityLevel lv;
    lv.threshold = desc[i];
    lv.coefficient = (desc[i] - next) / w_max;
    WeightedDigraph sub = g.threshold_at(desc[i]);
    lv.n = sub.node_count();
    lv.l = sub.link_count();
    lv.length = description_length(lv.n, lv.l);
    AutResult aut = automorphism_log_size(sub, aut_budget);
    lv.log2_aut = aut.log2_aut;
    lv.c_bits = static_cast<double>(lv.length.total_bits) -
                (log2_factorial(lv.n) - aut.log2_aut);
    total += lv.coefficient * lv.c_bits;
    report.levels.push_back(lv);
  }
  report.c_bits = total;
  return report;
}

void ComplexityReport::write_csv(std::ostream &out) const {
  out << "threshold,coefficient,n,l,length_bits,log2_aut,c_bits\n";
  for (const ComplexityLevel &lv : levels) {
    out << format_weight(lv.threshold) << ',' << format_weight(lv.coefficient)
        << ',' << lv.n << ',' << lv.l << ',' << lv.length.total_bits << ','
        << format_weight(lv.log2_aut) << ',' << format_weight(lv.c_bits) << '\n';
  }
  out << "total,1,," << ",,," << format_weight(c_bits) << '\n';
}

} // namespace netc
