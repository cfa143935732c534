#include "netc/graph.hpp"
#include "netc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace netc {

WeightedDigraph::WeightedDigraph(std::int64_t n, std::vector<Link> links)
    : n_(n), links_(std::move(links)) {
  if (n_ < 1) throw DomainError("graph: node count must be >= 1, got " + std::to_string(n_));
  std::sort(links_.begin(), links_.end(), [](const Link &a, const Link &b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const Link &lk = links_[i];
    if (lk.src < 0 || lk.src >= n_ || lk.dst < 0 || lk.dst >= n_)
      throw DomainError("graph: link (" + std::to_string(lk.src) + "," +
                        std::to_string(lk.dst) + ") has node id outside [0," +
                        std::to_string(n_) + ")");
    if (lk.src == lk.dst)
      throw DomainError("graph: self-loop at node " + std::to_string(lk.src) +
                        " is not allowed");
    if (!(lk.weight > 0.0) || !std::isfinite(lk.weight))
      throw DomainError("graph: link (" + std::to_string(lk.src) + "," +
                        std::to_string(lk.dst) + ") has non-positive weight");
    if (i > 0 && links_[i - 1].src == lk.src && links_[i - 1].dst == lk.dst)
      throw DomainError("graph: duplicate link (" + std::to_string(lk.src) + "," +
                        std::to_string(lk.dst) + ")");
  }
  if (link_count() > pair_count())
    throw DomainError("graph: more links than ordered pairs");
}

WeightedDigraph WeightedDigraph::threshold_at(double min_weight) const {
  std::vector<Link> kept;
  for (const Link &lk : links_)
    if (lk.weight >= min_weight) kept.push_back(lk);
  return WeightedDigraph(n_, std::move(kept));
}

WeightedDigraph WeightedDigraph::relabeled(const std::vector<std::int32_t> &perm) const {
  if (static_cast<std::int64_t>(perm.size()) != n_)
    throw DomainError("relabeled: permutation size mismatch");
  std::vector<Link> out;
  out.reserve(links_.size());
  for (const Link &lk : links_)
    out.push_back({perm[static_cast<std::size_t>(lk.src)],
                   perm[static_cast<std::size_t>(lk.dst)], lk.weight});
  return WeightedDigraph(n_, std::move(out));
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string &what) {
  throw ParseError("edge list line " + std::to_string(line_no) + ": " + what);
}

} // namespace

WeightedDigraph WeightedDigraph::parse(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  std::int64_t n = -1;
  std::vector<Link> links;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      ls >> tag >> n;
      if (tag != "n" || ls.fail() || n < 1)
        fail(line_no, "expected header 'n <count>' with count >= 1");
      continue;
    }
    std::int64_t src, dst;
    double w;
    ls >> src >> dst >> w;
    if (ls.fail()) fail(line_no, "expected 'src dst weight'");
    std::string trailing;
    if (ls >> trailing) fail(line_no, "trailing content '" + trailing + "'");
    if (src < 0 || src >= n || dst < 0 || dst >= n)
      fail(line_no, "node id outside [0," + std::to_string(n) + ")");
    if (src == dst) fail(line_no, "self-loop " + std::to_string(src) + " -> " +
                                      std::to_string(dst) + " is not allowed");
    if (!(w > 0.0) || !std::isfinite(w)) fail(line_no, "weight must be > 0");
    links.push_back({static_cast<std::int32_t>(src), static_cast<std::int32_t>(dst), w});
  }
  if (n < 0) throw ParseError("edge list: missing 'n <count>' header");
  try {
    return WeightedDigraph(n, std::move(links));
  } catch (const DomainError &e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

WeightedDigraph WeightedDigraph::load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse(in);
}

std::string format_weight(double w) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  (void)ec;
  return std::string(buf, end);
}

void WeightedDigraph::serialize(std::ostream &out) const {
  out << "n " << n_ << "\n";
  for (const Link &lk : links_)
    out << lk.src << " " << lk.dst << " " << format_weight(lk.weight) << "\n";
}

} // namespace netc
