#include "dbc/doubledimer.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <memory>
#include <deque>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace dbc {

namespace {

// Every edge of H(n) crosses exactly one lattice line: horizontal edges
// cross the vertical lines u = const, ne edges the lines u+t = const, nw
// edges the lines u-t = const. Along each line the crossing multiplicity
// of a valid configuration is forced exactly: on one side of the line the
// crossing edges end only on east triangles (resp. only on west), so
// summing the degree targets over that side gives
//     crossings = (caps of west triangles) - (caps of east triangles).
// This is the de Bruijn count rigidity, extended to node configurations.
// The DFS prunes any partial assignment that can no longer meet a line's
// exact count, and lower-bounds the final exponent by filling each
// horizontal line's remaining count with its cheapest undecided rows.
struct CutLine {
  std::vector<int> edge_ids;  // edges crossing this line; horizontal lines
                              // keep them sorted by ascending exponent
  int exact = 0;
  bool horizontal = false;
};

struct SearchContext {
  const HexGraph& g;
  std::vector<int> order;        // vertex ids in scan order
  std::vector<int> required;     // degree target per vertex (1 node, 2 else)
  std::vector<CutLine> lines;
  std::vector<int> line_of_edge;
  int cut = 0;  // max admissible total exponent

  SearchContext(const HexGraph& g_, const NodeSpec& spec, int min_expo,
                int max_excess)
      : g(g_) {
    const auto& verts = g.verts();
    order.resize(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const auto& a = verts[x];
      const auto& b = verts[y];
      return std::tuple(a.t, a.u, !a.east) < std::tuple(b.t, b.u, !b.east);
    });

    required.assign(verts.size(), 2);
    for (int v : spec.cyclic) required[v] = 1;

    // group edges by crossed line: (family, key)
    std::map<std::pair<int, int>, std::vector<int>> groups;
    auto line_key = [&](int e) -> std::pair<int, int> {
      const auto& ed = g.edges()[e];
      const auto& ve = verts[ed.a].east ? verts[ed.a] : verts[ed.b];
      switch (ed.dir) {
        case HexGraph::Dir::horizontal:
          return {0, ve.u};
        case HexGraph::Dir::ne:
          return {1, ve.u + ve.t + 2};
        default:
          return {2, ve.u - ve.t};
      }
    };
    for (int e = 0; e < (int)g.edges().size(); ++e)
      groups[line_key(e)].push_back(e);

    line_of_edge.assign(g.edges().size(), -1);
    for (auto& [key, ids] : groups) {
      auto [family, k] = key;
      CutLine line;
      line.horizontal = family == 0;
      line.edge_ids = ids;
      if (line.horizontal)
        std::sort(line.edge_ids.begin(), line.edge_ids.end(),
                  [&](int x, int y) {
                    return g.edges()[x].exponent < g.edges()[y].exponent;
                  });
      // caps on the side of the line where crossing edges end on west
      // triangles only (family 0), resp. east triangles only (1 and 2)
      long capE = 0, capW = 0;
      for (int v = 0; v < (int)verts.size(); ++v) {
        const auto& vx = verts[v];
        bool on_side;
        switch (family) {
          case 0:  // west side: E(u',.) iff u' < k, W(u',.) iff u' <= k
            on_side = vx.east ? vx.u < k : vx.u <= k;
            break;
          case 1:  // southwest side: strip upper bound u+t+2 <= k
            on_side = vx.u + vx.t + 2 <= k;
            break;
          default:  // side with strip upper bound u-t <= k
            on_side = vx.u - vx.t <= k;
            break;
        }
        if (!on_side) continue;
        (vx.east ? capE : capW) += required[v];
      }
      line.exact = family == 0 ? (int)(capW - capE) : (int)(capE - capW);
      if (line.exact < 0)
        throw std::logic_error("negative line crossing count");
      lines.push_back(std::move(line));
      for (int e : ids) line_of_edge[e] = (int)lines.size() - 1;
    }
    cut = min_expo + max_excess;
  }
};

// Mutable search state; reconstructable from the mult vector alone.
struct SearchState {
  std::vector<int8_t> mult;    // -1 undecided
  std::vector<int8_t> rem;     // remaining degree requirement
  std::vector<int8_t> undec;   // undecided incident edges
  std::vector<int> line_cur;   // decided multiplicity per line
  std::vector<int> line_und;   // undecided edges per line
  std::vector<int> line_cost;  // cheapest completion cost per line
  int expo = 0;
  int total_cost = 0;
  int scan = 0;  // index into ctx.order

  void init(const SearchContext& ctx) {
    const auto& g = ctx.g;
    mult.assign(g.edges().size(), -1);
    rem.assign(ctx.required.begin(), ctx.required.end());
    undec.assign(g.verts().size(), 0);
    for (size_t v = 0; v < g.verts().size(); ++v)
      undec[v] = (int8_t)g.verts()[v].degree;
    line_cur.assign(ctx.lines.size(), 0);
    line_und.assign(ctx.lines.size(), 0);
    line_cost.assign(ctx.lines.size(), 0);
    for (int li = 0; li < (int)ctx.lines.size(); ++li)
      line_und[li] = (int)ctx.lines[li].edge_ids.size();
    expo = 0;
    total_cost = 0;
    scan = 0;
    for (int li = 0; li < (int)ctx.lines.size(); ++li) {
      line_cost[li] = completion_cost(ctx, li);
      total_cost += line_cost[li];
    }
  }

  // Rebuild derived fields from a partially filled mult vector.
  void restore(const SearchContext& ctx, const std::vector<int8_t>& m) {
    init(ctx);
    total_cost = 0;
    for (int e = 0; e < (int)m.size(); ++e)
      if (m[e] >= 0) {
        const auto& ed = ctx.g.edges()[e];
        mult[e] = m[e];
        rem[ed.a] = (int8_t)(rem[ed.a] - m[e]);
        rem[ed.b] = (int8_t)(rem[ed.b] - m[e]);
        --undec[ed.a];
        --undec[ed.b];
        expo += m[e] * ed.exponent;
        line_cur[ctx.line_of_edge[e]] += m[e];
        --line_und[ctx.line_of_edge[e]];
      }
    for (int li = 0; li < (int)ctx.lines.size(); ++li) {
      line_cost[li] = completion_cost(ctx, li);
      total_cost += line_cost[li];
    }
    while (scan < (int)ctx.order.size() && undec[ctx.order[scan]] == 0)
      ++scan;
  }

  // The line's final crossing count is pinned to lines[li].exact; the
  // cheapest completion puts the remaining units on undecided edges in
  // ascending row order, two per edge. Infeasible lines cost "infinity".
  int completion_cost(const SearchContext& ctx, int li) const {
    const auto& line = ctx.lines[li];
    int need = line.exact - line_cur[li];
    if (need < 0 || need > 2 * line_und[li]) return INT32_MAX / 4;
    if (need == 0 || !line.horizontal) return 0;
    int cost = 0;
    for (int e : line.edge_ids) {
      if (mult[e] >= 0) continue;
      int take = std::min(2, need);
      cost += take * ctx.g.edges()[e].exponent;
      need -= take;
      if (need == 0) break;
    }
    return cost;
  }
};

// Applies multiplicity m to edge e; returns false (fully rolled back) if a
// degree or line constraint is already violated or the exponent bound is
// exceeded.
bool apply_edge(const SearchContext& ctx, SearchState& st, int e, int m) {
  const auto& ed = ctx.g.edges()[e];
  int v = ed.a, w = ed.b;
  if (m > st.rem[v] || m > st.rem[w]) return false;
  st.mult[e] = (int8_t)m;
  st.rem[v] = (int8_t)(st.rem[v] - m);
  st.rem[w] = (int8_t)(st.rem[w] - m);
  --st.undec[v];
  --st.undec[w];
  st.expo += m * ed.exponent;
  int li = ctx.line_of_edge[e];
  st.line_cur[li] += m;
  --st.line_und[li];
  int old_cost = st.line_cost[li];
  st.line_cost[li] = st.completion_cost(ctx, li);
  st.total_cost += st.line_cost[li] - old_cost;
  bool ok = st.expo + st.total_cost <= ctx.cut;
  for (int x : {v, w}) {
    if (st.undec[x] == 0 && st.rem[x] != 0) ok = false;
    if (st.rem[x] > 2 * st.undec[x]) ok = false;
  }
  return ok;
}

void undo_edge(const SearchContext& ctx, SearchState& st, int e, int m,
               int old_cost) {
  const auto& ed = ctx.g.edges()[e];
  int li = ctx.line_of_edge[e];
  st.total_cost += old_cost - st.line_cost[li];
  st.line_cost[li] = old_cost;
  st.line_cur[li] -= m;
  ++st.line_und[li];
  st.expo -= m * ed.exponent;
  st.mult[e] = -1;
  st.rem[ed.a] = (int8_t)(st.rem[ed.a] + m);
  st.rem[ed.b] = (int8_t)(st.rem[ed.b] + m);
  ++st.undec[ed.a];
  ++st.undec[ed.b];
}

// Depth-first enumeration branching on one undecided edge of the first
// unsatisfied vertex in scan order. In parallel mode, branch alternatives
// are forked as OpenMP tasks (each on a copy of the state) while the
// in-flight task count is low; the deterministic order of the output is
// restored by the caller's final sort.
class DdcSearch {
 public:
  explicit DdcSearch(const SearchContext& ctx, int buckets = 1)
      : ctx_(ctx), sinks_(std::max(1, buckets)) {}

  void run_serial(SearchState& st) { rec(st, 0, sinks_[0]); }

#ifdef _OPENMP
  void run_parallel(SearchState& st, int nthreads) {
#pragma omp parallel num_threads(nthreads)
#pragma omp single nowait
    rec(st, kSpawnDepth, sinks_[omp_get_thread_num()]);
  }
#endif

  std::vector<std::vector<int8_t>> collect() {
    std::vector<std::vector<int8_t>> all;
    for (auto& s : sinks_)
      for (auto& m : s) all.push_back(std::move(m));
    return all;
  }

 private:
  const SearchContext& ctx_;
  std::vector<std::vector<std::vector<int8_t>>> sinks_;
  std::atomic<int> open_tasks_{0};
  // fork only in the first levels of true branching; forced chains do not
  // consume the budget and deep subtrees run in place
  static constexpr int kSpawnDepth = 40;

  void rec(SearchState& st, int spawn_depth,
           std::vector<std::vector<int8_t>>& sink) {
    while (st.scan < (int)ctx_.order.size() &&
           st.undec[ctx_.order[st.scan]] == 0)
      ++st.scan;
    if (st.scan == (int)ctx_.order.size()) {
      sink.push_back(st.mult);
      return;
    }
    int v = ctx_.order[st.scan];
    int e = -1;
    for (int cand : ctx_.g.verts()[v].edge_ids)
      if (cand >= 0 && st.mult[cand] < 0) {
        e = cand;
        break;
      }
    int hi = std::min(2, (int)st.rem[v]);

#ifdef _OPENMP
    if (spawn_depth > 0 && hi > 0 &&
        open_tasks_.load(std::memory_order_relaxed) <
            8 * (int)sinks_.size()) {
      for (int m = 0; m <= hi; ++m) {
        auto child = std::make_shared<SearchState>(st);
        if (!apply_edge(ctx_, *child, e, m)) continue;
        open_tasks_.fetch_add(1, std::memory_order_relaxed);
#pragma omp task firstprivate(child)
        {
          rec(*child, spawn_depth - 1, sinks_[omp_get_thread_num()]);
          open_tasks_.fetch_sub(1, std::memory_order_relaxed);
        }
      }
#pragma omp taskwait
      return;
    }
#endif
    int next_depth =
        (hi > 0 && spawn_depth > 0) ? spawn_depth - 1 : spawn_depth;
    for (int m = 0; m <= hi; ++m) {
      int old_cost = st.line_cost[ctx_.line_of_edge[e]];
      if (apply_edge(ctx_, st, e, m)) {
        int saved_scan = st.scan;
        rec(st, next_depth, sink);
        st.scan = saved_scan;
      }
      if (st.mult[e] >= 0) undo_edge(ctx_, st, e, m, old_cost);
    }
  }
};

}  // namespace

DoubleDimerConfig make_config(const HexGraph& g, const NodeSpec& spec,
                              std::vector<uint8_t> mult, int min_exponent) {
  DoubleDimerConfig cfg;
  cfg.a = spec.a;
  cfg.b = spec.b;
  cfg.c = spec.c;
  cfg.mult = std::move(mult);
  std::vector<int> cov(g.verts().size(), 0);
  for (int e = 0; e < (int)g.edges().size(); ++e) {
    if (cfg.mult[e] > 2) throw std::invalid_argument("multiplicity > 2");
    cov[g.edges()[e].a] += cfg.mult[e];
    cov[g.edges()[e].b] += cfg.mult[e];
    cfg.weight_exponent += cfg.mult[e] * g.edges()[e].exponent;
    if (cfg.mult[e] == 2) cfg.doubled.push_back(e);
  }
  for (int v = 0; v < (int)g.verts().size(); ++v) {
    int want = spec.is_node(v) ? 1 : 2;
    if (cov[v] != want)
      throw std::invalid_argument("degree law violated at a vertex");
  }
  cfg.excess = cfg.weight_exponent - min_exponent;

  // Decompose the single edges into node-to-node paths and closed loops.
  std::vector<std::vector<std::pair<int, int>>> adj(g.verts().size());
  for (int e = 0; e < (int)g.edges().size(); ++e)
    if (cfg.mult[e] == 1) {
      adj[g.edges()[e].a].push_back({g.edges()[e].b, e});
      adj[g.edges()[e].b].push_back({g.edges()[e].a, e});
    }
  std::vector<char> used_edge(g.edges().size(), 0);
  auto walk = [&](int start) {
    std::vector<int> seq{start};
    int cur = start;
    while (true) {
      int next = -1;
      for (auto [w, e] : adj[cur])
        if (!used_edge[e]) {
          used_edge[e] = 1;
          next = w;
          break;
        }
      if (next < 0) break;
      seq.push_back(next);
      cur = next;
    }
    return seq;
  };
  std::vector<std::pair<int, int>> ends;
  for (int v : spec.cyclic) {
    if (adj[v].empty()) continue;
    bool fresh = false;
    for (auto [w, e] : adj[v])
      if (!used_edge[e]) fresh = true;
    if (!fresh) continue;
    auto seq = walk(v);
    ends.push_back({seq.front(), seq.back()});
    cfg.paths.push_back(std::move(seq));
  }
  for (int v = 0; v < (int)g.verts().size(); ++v) {
    for (auto [w, e] : adj[v]) {
      if (used_edge[e]) continue;
      auto seq = walk(v);
      if (seq.size() < 4 || seq.front() != seq.back())
        throw std::logic_error("bad loop in decomposition");
      seq.pop_back();
      cfg.loops.push_back(std::move(seq));
    }
  }
  cfg.loops_count = (int)cfg.loops.size();
  cfg.pairing = normalize_pairing(std::move(ends));
  if (cfg.pairing.pairs.size() * 2 != spec.cyclic.size())
    throw std::logic_error("paths do not pair all nodes");
  return cfg;
}

std::vector<DoubleDimerConfig> enumerate_ddc(const HexGraph& g,
                                             const NodeSpec& spec,
                                             int max_excess, int jobs) {
  if (max_excess < 0) throw std::invalid_argument("max_excess must be >= 0");
  std::vector<int> frozen = frozen_background(g, spec.a, spec.b, spec.c);
  int min_expo = 0;
  for (int e = 0; e < (int)g.edges().size(); ++e)
    min_expo += frozen[e] * g.edges()[e].exponent;
  std::vector<uint8_t> fm(frozen.begin(), frozen.end());
  DoubleDimerConfig frozen_cfg = make_config(g, spec, fm, min_expo);
  const Pairing sigma = frozen_cfg.pairing;

  SearchContext ctx(g, spec, min_expo, max_excess);

#ifdef _OPENMP
  int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  int nthreads = 1;
  (void)jobs;
#endif
  DdcSearch search(ctx, nthreads);
  SearchState st;
  st.init(ctx);
#ifdef _OPENMP
  if (nthreads > 1)
    search.run_parallel(st, nthreads);
  else
    search.run_serial(st);
#else
  search.run_serial(st);
#endif
  std::vector<std::vector<int8_t>> full = search.collect();

  std::vector<DoubleDimerConfig> out;
  for (auto& m : full) {
    std::vector<uint8_t> um(m.begin(), m.end());
    DoubleDimerConfig cfg = make_config(g, spec, std::move(um), min_expo);
    if (cfg.excess < 0)
      throw std::logic_error("configuration below the frozen minimum");
    if (cfg.pairing == sigma) out.push_back(std::move(cfg));
  }
  std::sort(out.begin(), out.end(),
            [](const DoubleDimerConfig& x, const DoubleDimerConfig& y) {
              if (x.excess != y.excess) return x.excess < y.excess;
              return x.mult < y.mult;
            });
  return out;
}

WindowSeries zddc_window(int a, int b, int c, int n, int trunc_order,
                         int jobs) {
  if (n < a + b + c)
    throw std::invalid_argument("window too small: need n >= a+b+c");
  HexGraph g = HexGraph::build(n);
  NodeSpec spec = place_nodes(g, a, b, c);
  auto configs = enumerate_ddc(g, spec, trunc_order, jobs);
  if (configs.empty())
    throw std::runtime_error("node convention invalid: no configuration");
  std::vector<BigInt> coeffs(trunc_order + 1, BigInt(0));
  for (const auto& cfg : configs) {
    BigInt w = 1;
    w <<= cfg.loops_count;
    coeffs[cfg.excess] += w;
  }
  return WindowSeries{QSeries(std::move(coeffs), trunc_order), n,
                      (int)configs.size()};
}

StabilizedSeries zddc(int a, int b, int c, int trunc_order, int n_ceiling,
                      int jobs) {
  StabilizedSeries result;
  int n0 = std::max(1, a + b + c);
  if (n0 > n_ceiling)
    throw std::invalid_argument("window ceiling below the smallest window");

  // Consecutive windows are independent computations, so each round fills
  // the next two in parallel; the second is speculative.
  int next = n0;
  auto extend = [&]() {
    int n1 = next;
    int n2 = next + 1 <= n_ceiling ? next + 1 : -1;
    WindowSeries w1, w2;
    std::exception_ptr err1, err2;
#ifdef _OPENMP
#pragma omp parallel sections num_threads(2) if (jobs != 1 && n2 > 0)
    {
#pragma omp section
      {
        try {
          w1 = zddc_window(a, b, c, n1, trunc_order, jobs);
        } catch (...) {
          err1 = std::current_exception();
        }
      }
#pragma omp section
      {
        if (n2 > 0) {
          try {
            w2 = zddc_window(a, b, c, n2, trunc_order, jobs);
          } catch (...) {
            err2 = std::current_exception();
          }
        }
      }
    }
#else
    try {
      w1 = zddc_window(a, b, c, n1, trunc_order, jobs);
    } catch (...) {
      err1 = std::current_exception();
    }
    if (n2 > 0) {
      try {
        w2 = zddc_window(a, b, c, n2, trunc_order, jobs);
      } catch (...) {
        err2 = std::current_exception();
      }
    }
#endif
    if (err1) std::rethrow_exception(err1);
    result.windows.push_back(std::move(w1));
    if (n2 > 0) {
      if (err2) std::rethrow_exception(err2);
      result.windows.push_back(std::move(w2));
    }
    next = n2 > 0 ? n2 + 1 : n1 + 1;
  };

  extend();
  while (true) {
    for (size_t i = 1; i < result.windows.size(); ++i) {
      if (result.windows[i - 1].series == result.windows[i].series) {
        result.series = result.windows[i].series;
        result.stabilized_at = result.windows[i - 1].n;
        result.windows.resize(i + 1);
        return result;
      }
    }
    if (next > n_ceiling) break;
    extend();
  }
  throw StabilizationError(
      "window series did not stabilize by n=" + std::to_string(n_ceiling),
      result.windows.back().series, n_ceiling);
}

DoubleDimerConfig dbc_to_ddc(const HexGraph& g, const DoubleBoxClass& cls,
                             const Assignment& rep) {
  const BoxTyping& ty = cls.typing;
  Box center{ty.a, ty.b, ty.c};
  std::vector<int> mult(g.edges().size(), 0);
  for (int m = 1; m <= 3; ++m) {
    PlanePartition eta = reconstruct_eta(ty, rep, m);
    for (int e : surface_matching(g, eta, center)) ++mult[e];
  }
  std::vector<Box> inner = ty.type2;
  inner.insert(inner.end(), ty.type3.begin(), ty.type3.end());
  PlanePartition eta_int = PlanePartition::from_absolute(inner, center);
  for (int e : surface_matching(g, eta_int, center)) --mult[e];
  for (int m : mult)
    if (m < 0 || m > 2)
      throw std::invalid_argument(
          "window too small: boxes spill past the merged background");

  NodeSpec spec = place_nodes(g, ty.a, ty.b, ty.c);
  std::vector<int> frozen = frozen_background(g, ty.a, ty.b, ty.c);
  int min_expo = 0;
  for (int e = 0; e < (int)g.edges().size(); ++e)
    min_expo += frozen[e] * g.edges()[e].exponent;
  try {
    return make_config(g, spec,
                       std::vector<uint8_t>(mult.begin(), mult.end()),
                       min_expo);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "window too small: boxes spill past the merged background");
  }
}

std::string DoubleDimerConfig::to_json(const HexGraph& g) const {
  nlohmann::json j;
  j["n"] = g.n();
  j["params"] = {a, b, c};
  auto vert_json = [&](int v) {
    const auto& vx = g.verts()[v];
    return nlohmann::json{vx.u, vx.t, vx.east};
  };
  auto multiset = nlohmann::json::array();
  for (int e = 0; e < (int)g.edges().size(); ++e)
    if (mult[e] > 0)
      multiset.push_back({vert_json(g.edges()[e].a), vert_json(g.edges()[e].b),
                          (int)mult[e]});
  j["edge_multiset"] = multiset;
  auto dj = nlohmann::json::array();
  for (int e : doubled)
    dj.push_back({vert_json(g.edges()[e].a), vert_json(g.edges()[e].b)});
  j["doubled"] = dj;
  auto seqs = [&](const std::vector<std::vector<int>>& ss) {
    auto arr = nlohmann::json::array();
    for (const auto& s : ss) {
      auto sj = nlohmann::json::array();
      for (int v : s) sj.push_back(vert_json(v));
      arr.push_back(sj);
    }
    return arr;
  };
  j["loops"] = seqs(loops);
  j["paths"] = seqs(paths);
  auto pj = nlohmann::json::array();
  for (auto& [p, q] : pairing.pairs) pj.push_back({vert_json(p), vert_json(q)});
  j["pairing"] = pj;
  j["loops_count"] = loops_count;
  j["weight_exponent"] = weight_exponent;
  j["excess"] = excess;
  return j.dump();
}

}  // namespace dbc
