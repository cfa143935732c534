#include "netc/automorphism.hpp"
#include "netc/encoding.hpp"
#include "netc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace netc {

namespace {

// Non-isolated subgraph with bitset adjacency for O(1) edge tests.
struct Core {
  int n = 0;
  std::vector<std::vector<int>> out_adj, in_adj;
  std::vector<std::uint64_t> out_bits; // row-major, n words_per_row words each
  int words_per_row = 0;

  bool edge(int a, int b) const {
    return (out_bits[static_cast<std::size_t>(a) * words_per_row + (b >> 6)] >>
            (b & 63)) & 1u;
  }
};

Core build_core(const WeightedDigraph &g, std::vector<int> &core_of,
                int &isolated) {
  std::int64_t n = g.node_count();
  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  for (const Link &lk : g.links()) {
    touched[static_cast<std::size_t>(lk.src)] = 1;
    touched[static_cast<std::size_t>(lk.dst)] = 1;
  }
  core_of.assign(static_cast<std::size_t>(n), -1);
  Core c;
  for (std::int64_t v = 0; v < n; ++v)
    if (touched[static_cast<std::size_t>(v)]) core_of[static_cast<std::size_t>(v)] = c.n++;
  isolated = static_cast<int>(n) - c.n;
  c.out_adj.resize(static_cast<std::size_t>(c.n));
  c.in_adj.resize(static_cast<std::size_t>(c.n));
  c.words_per_row = (c.n + 63) / 64;
  c.out_bits.assign(static_cast<std::size_t>(c.n) * c.words_per_row, 0);
  for (const Link &lk : g.links()) {
    int a = core_of[static_cast<std::size_t>(lk.src)];
    int b = core_of[static_cast<std::size_t>(lk.dst)];
    c.out_adj[static_cast<std::size_t>(a)].push_back(b);
    c.in_adj[static_cast<std::size_t>(b)].push_back(a);
    c.out_bits[static_cast<std::size_t>(a) * c.words_per_row + (b >> 6)] |=
        std::uint64_t{1} << (b & 63);
  }
  for (auto &v : c.out_adj) std::sort(v.begin(), v.end());
  for (auto &v : c.in_adj) std::sort(v.begin(), v.end());
  return c;
}

// Ordered partition; cells keep their members sorted ascending so the
// search is deterministic regardless of input link order.
struct Partition {
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of;

  static Partition unit(int n) {
    Partition p;
    p.cells.emplace_back(n);
    std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
    p.cell_of.assign(static_cast<std::size_t>(n), 0);
    return p;
  }

  bool discrete() const {
    for (const auto &c : cells)
      if (c.size() > 1) return false;
    return true;
  }

  int first_nonsingleton() const {
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) return static_cast<int>(i);
    return -1;
  }

  // Cell c becomes {v}; the remaining members form a new cell appended at
  // the end.
  void individualize(int c, int v) {
    auto rest = cells[static_cast<std::size_t>(c)];
    rest.erase(std::find(rest.begin(), rest.end(), v));
    cells[static_cast<std::size_t>(c)] = {v};
    int nc = static_cast<int>(cells.size());
    for (int w : rest) cell_of[static_cast<std::size_t>(w)] = nc;
    cells.push_back(std::move(rest));
  }
};

using Perm = std::vector<int>;

struct SearchCtx {
  const Core *core = nullptr;
  std::int64_t budget = 0;
  std::int64_t *nodes = nullptr; // shared across sub-searches of one graph
  std::vector<Perm> generators;

  void tick() {
    if (++*nodes > budget)
      throw ResourceError("automorphism search exceeded backtrack budget of " +
                          std::to_string(budget) + " nodes");
  }
};

using Key = std::pair<int, int>; // (out-edges into splitter, in-edges from splitter)

// Refines `parts` (1 or 2 aligned partitions over the same core) to the
// common equitable fixed point.  Returns false when the sides become
// distinguishable, i.e. no alignment-respecting automorphism exists.
bool refine(SearchCtx &ctx, std::vector<Partition *> parts) {
  const Core &core = *ctx.core;
  std::size_t sides = parts.size();
  std::vector<std::vector<int>> cnt_out(sides), cnt_in(sides);
  for (auto &v : cnt_out) v.assign(static_cast<std::size_t>(core.n), 0);
  for (auto &v : cnt_in) v.assign(static_cast<std::size_t>(core.n), 0);

  std::vector<int> worklist;
  for (std::size_t i = 0; i < parts[0]->cells.size(); ++i)
    worklist.push_back(static_cast<int>(i));
  std::size_t head = 0;

  std::vector<std::vector<int>> touched(sides);
  while (head < worklist.size()) {
    ctx.tick();
    int s = worklist[head++];
    for (auto &t : touched) t.clear();
    for (std::size_t side = 0; side < sides; ++side) {
      for (int w : parts[side]->cells[static_cast<std::size_t>(s)]) {
        for (int u : core.in_adj[static_cast<std::size_t>(w)]) {
          if (cnt_out[side][static_cast<std::size_t>(u)]++ == 0 &&
              cnt_in[side][static_cast<std::size_t>(u)] == 0)
            touched[side].push_back(u);
        }
        for (int u : core.out_adj[static_cast<std::size_t>(w)]) {
          if (cnt_in[side][static_cast<std::size_t>(u)]++ == 0 &&
              cnt_out[side][static_cast<std::size_t>(u)] == 0)
            touched[side].push_back(u);
        }
      }
    }
    // Cells touched on either side get re-keyed on both sides.
    std::vector<int> cell_ids;
    for (std::size_t side = 0; side < sides; ++side)
      for (int u : touched[side]) cell_ids.push_back(parts[side]->cell_of[static_cast<std::size_t>(u)]);
    std::sort(cell_ids.begin(), cell_ids.end());
    cell_ids.erase(std::unique(cell_ids.begin(), cell_ids.end()), cell_ids.end());

    bool ok = true;
    for (int c : cell_ids) {
      // Group members by key, key-ascending; sides must agree on the key
      // histogram or no automorphism respects the current alignment.
      std::vector<std::map<Key, std::vector<int>>> groups(sides);
      for (std::size_t side = 0; side < sides; ++side)
        for (int u : parts[side]->cells[static_cast<std::size_t>(c)])
          groups[side][{cnt_out[side][static_cast<std::size_t>(u)],
                        cnt_in[side][static_cast<std::size_t>(u)]}]
              .push_back(u);
      if (sides == 2) {
        if (groups[0].size() != groups[1].size()) { ok = false; break; }
        auto it0 = groups[0].begin(), it1 = groups[1].begin();
        for (; it0 != groups[0].end(); ++it0, ++it1)
          if (it0->first != it1->first || it0->second.size() != it1->second.size()) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (groups[0].size() <= 1) continue;
      for (std::size_t side = 0; side < sides; ++side) {
        auto it = groups[side].begin();
        parts[side]->cells[static_cast<std::size_t>(c)] = it->second;
        ++it;
        for (; it != groups[side].end(); ++it) {
          int nc = static_cast<int>(parts[side]->cells.size());
          for (int u : it->second) parts[side]->cell_of[static_cast<std::size_t>(u)] = nc;
          parts[side]->cells.push_back(it->second);
        }
      }
      worklist.push_back(c);
      for (std::size_t i = parts[0]->cells.size() - (groups[0].size() - 1);
           i < parts[0]->cells.size(); ++i)
        worklist.push_back(static_cast<int>(i));
    }
    // Reset counters for the next splitter.
    for (std::size_t side = 0; side < sides; ++side)
      for (int u : touched[side]) {
        cnt_out[side][static_cast<std::size_t>(u)] = 0;
        cnt_in[side][static_cast<std::size_t>(u)] = 0;
      }
    if (!ok) return false;
  }
  return true;
}

bool is_automorphism(const Core &core, const Perm &p) {
  for (int a = 0; a < core.n; ++a)
    for (int b : core.out_adj[static_cast<std::size_t>(a)])
      if (!core.edge(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

// Extends the alignment of two refined partitions to a full automorphism,
// or proves none exists under this alignment.
std::optional<Perm> match(SearchCtx &ctx, const Partition &p1, const Partition &p2) {
  ctx.tick();
  int c = p1.first_nonsingleton();
  if (c < 0) {
    Perm perm(static_cast<std::size_t>(ctx.core->n));
    for (std::size_t i = 0; i < p1.cells.size(); ++i)
      perm[static_cast<std::size_t>(p1.cells[i][0])] = p2.cells[i][0];
    if (is_automorphism(*ctx.core, perm)) return perm;
    return std::nullopt;
  }
  int a = p1.cells[static_cast<std::size_t>(c)][0];
  for (int b : p2.cells[static_cast<std::size_t>(c)]) {
    Partition q1 = p1, q2 = p2;
    q1.individualize(c, a);
    q2.individualize(c, b);
    if (!refine(ctx, {&q1, &q2})) continue;
    if (auto perm = match(ctx, q1, q2)) return perm;
  }
  return std::nullopt;
}

std::optional<Perm> find_mapping(SearchCtx &ctx, const Partition &base, int c,
                                 int v, int u) {
  Partition p1 = base, p2 = base;
  p1.individualize(c, v);
  p2.individualize(c, u);
  if (!refine(ctx, {&p1, &p2})) return std::nullopt;
  return match(ctx, p1, p2);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// log2 of the order of the subgroup of Aut(core) respecting the ordered
// partition `pi` (already refined), by orbit-stabilizer recursion.
double group_log_size(SearchCtx &ctx, const Partition &pi) {
  ctx.tick();
  int c = pi.first_nonsingleton();
  if (c < 0) return 0.0;
  int v = pi.cells[static_cast<std::size_t>(c)][0];

  Partition stab = pi;
  stab.individualize(c, v);
  bool ok = refine(ctx, {&stab});
  (void)ok; // single-sided refinement cannot fail
  double stab_log = group_log_size(ctx, stab);

  UnionFind uf(ctx.core->n);
  for (const Perm &g : ctx.generators)
    for (int a = 0; a < ctx.core->n; ++a) uf.unite(a, g[static_cast<std::size_t>(a)]);

  std::int64_t orbit = 1;
  for (std::size_t i = 1; i < pi.cells[static_cast<std::size_t>(c)].size(); ++i) {
    int u = pi.cells[static_cast<std::size_t>(c)][i];
    if (uf.find(u) == uf.find(v)) {
      ++orbit;
      continue;
    }
    if (auto perm = find_mapping(ctx, pi, c, v, u)) {
      ++orbit;
      for (int a = 0; a < ctx.core->n; ++a) uf.unite(a, (*perm)[static_cast<std::size_t>(a)]);
      ctx.generators.push_back(std::move(*perm));
    }
  }
  return std::log2(static_cast<double>(orbit)) + stab_log;
}

// Subgraph induced by `verts` (core indices, ascending), relabeled 0..k-1.
Core sub_core(const Core &big, const std::vector<int> &verts) {
  std::vector<int> local(static_cast<std::size_t>(big.n), -1);
  Core c;
  c.n = static_cast<int>(verts.size());
  for (int i = 0; i < c.n; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
  c.out_adj.resize(static_cast<std::size_t>(c.n));
  c.in_adj.resize(static_cast<std::size_t>(c.n));
  c.words_per_row = (c.n + 63) / 64;
  c.out_bits.assign(static_cast<std::size_t>(c.n) * c.words_per_row, 0);
  for (int i = 0; i < c.n; ++i) {
    int v = verts[static_cast<std::size_t>(i)];
    for (int w : big.out_adj[static_cast<std::size_t>(v)]) {
      int j = local[static_cast<std::size_t>(w)];
      if (j < 0) continue;
      c.out_adj[static_cast<std::size_t>(i)].push_back(j);
      c.in_adj[static_cast<std::size_t>(j)].push_back(i);
      c.out_bits[static_cast<std::size_t>(i) * c.words_per_row + (j >> 6)] |=
          std::uint64_t{1} << (j & 63);
    }
  }
  for (auto &v : c.out_adj) std::sort(v.begin(), v.end());
  for (auto &v : c.in_adj) std::sort(v.begin(), v.end());
  return c;
}

// Are the weakly connected components spanned by va and vb isomorphic?
// Searches for an automorphism of their disjoint union moving va[0] into
// the vb side; connectivity then forces the whole of va onto vb.
bool components_isomorphic(const Core &big, const std::vector<int> &va,
                           const std::vector<int> &vb, std::int64_t budget,
                           std::int64_t *ticks) {
  std::vector<int> verts = va;
  verts.insert(verts.end(), vb.begin(), vb.end());
  Core both = sub_core(big, verts);
  SearchCtx ctx;
  ctx.core = &both;
  ctx.budget = budget;
  ctx.nodes = ticks;
  Partition base = Partition::unit(both.n);
  refine(ctx, {&base});
  int a = 0; // va[0]'s local index
  int c = base.cell_of[0];
  int split = static_cast<int>(va.size());
  for (int u : base.cells[static_cast<std::size_t>(c)]) {
    if (u < split) continue;
    if (find_mapping(ctx, base, c, a, u)) return true;
  }
  return false;
}

// (out-degree, in-degree) multiset; cheap pre-filter for isomorphism classes.
std::vector<std::pair<int, int>> degree_signature(const Core &big,
                                                  const std::vector<int> &verts) {
  std::vector<std::pair<int, int>> sig;
  sig.reserve(verts.size());
  for (int v : verts)
    sig.emplace_back(static_cast<int>(big.out_adj[static_cast<std::size_t>(v)].size()),
                     static_cast<int>(big.in_adj[static_cast<std::size_t>(v)].size()));
  std::sort(sig.begin(), sig.end());
  return sig;
}

} // namespace

AutResult automorphism_log_size(const WeightedDigraph &g, std::int64_t node_budget) {
  std::vector<int> core_of;
  int isolated = 0;
  Core core = build_core(g, core_of, isolated);

  AutResult res;
  res.log2_aut = log2_factorial(isolated);
  if (core.n == 0) {
    res.orbit_count = isolated > 0 ? 1 : 0;
    return res;
  }

  // Weakly connected components, each listed ascending and ordered by
  // smallest member.  Aut factorizes over isomorphism classes: each class
  // with m components contributes |Aut(component)|^m * m! and its full-group
  // orbits are exactly the orbits of one representative.
  UnionFind comp_uf(core.n);
  for (int a = 0; a < core.n; ++a)
    for (int b : core.out_adj[static_cast<std::size_t>(a)]) comp_uf.unite(a, b);
  std::map<int, std::vector<int>> by_root;
  for (int a = 0; a < core.n; ++a) by_root[comp_uf.find(a)].push_back(a);

  struct IsoClass {
    std::vector<int> rep;
    double log2_aut = 0.0;
    std::int64_t orbits = 0;
    std::int64_t generators = 0;
    std::int64_t members = 0;
  };
  std::int64_t ticks = 0;
  std::map<std::vector<std::pair<int, int>>, std::vector<IsoClass>> classes;
  for (const auto &[root, verts] : by_root) {
    std::vector<IsoClass> &bucket = classes[degree_signature(core, verts)];
    bool placed = false;
    for (IsoClass &cls : bucket)
      if (components_isomorphic(core, cls.rep, verts, node_budget, &ticks)) {
        ++cls.members;
        placed = true;
        break;
      }
    if (placed) continue;
    IsoClass cls;
    cls.rep = verts;
    cls.members = 1;
    Core sub = sub_core(core, verts);
    SearchCtx ctx;
    ctx.core = &sub;
    ctx.budget = node_budget;
    ctx.nodes = &ticks;
    Partition pi = Partition::unit(sub.n);
    refine(ctx, {&pi});
    cls.log2_aut = group_log_size(ctx, pi);
    cls.generators = static_cast<std::int64_t>(ctx.generators.size());
    UnionFind uf(sub.n);
    for (const Perm &gen : ctx.generators)
      for (int a = 0; a < sub.n; ++a) uf.unite(a, gen[static_cast<std::size_t>(a)]);
    for (int a = 0; a < sub.n; ++a)
      if (uf.find(a) == a) ++cls.orbits;
    bucket.push_back(std::move(cls));
  }

  std::int64_t orbits = 0;
  std::int64_t generators = 0;
  for (const auto &[sig, bucket] : classes)
    for (const IsoClass &cls : bucket) {
      res.log2_aut += static_cast<double>(cls.members) * cls.log2_aut +
                      log2_factorial(cls.members);
      orbits += cls.orbits;
      generators += cls.generators + (cls.members - 1);
    }
  res.orbit_count = orbits + (isolated > 0 ? 1 : 0);
  res.generators_found = generators;
  return res;
}

AutResult automorphism_brute_force(const WeightedDigraph &g) {
  std::int64_t n = g.node_count();
  if (n > 8)
    throw DomainError("automorphism_brute_force: refused for n > 8 (got n=" +
                      std::to_string(n) + ")");
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Link &lk : g.links())
    adj[static_cast<std::size_t>(lk.src)][static_cast<std::size_t>(lk.dst)] = 1;

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  UnionFind uf(static_cast<int>(n));
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
            adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]
               [static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])])
          ok = false;
    if (ok) {
      ++count;
      for (int a = 0; a < n; ++a) uf.unite(a, perm[static_cast<std::size_t>(a)]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  AutResult res;
  res.log2_aut = std::log2(static_cast<double>(count));
  std::int64_t orbits = 0;
  for (int a = 0; a < n; ++a)
    if (uf.find(a) == a) ++orbits;
  res.orbit_count = orbits;
  res.generators_found = count - 1;
  return res;
}

} // namespace netc
