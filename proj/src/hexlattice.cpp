#include "dbc/hexlattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace dbc {

namespace {

inline int64_t key_of(int u, int t, bool east) {
  return ((int64_t)(u + 4096) << 26) | ((int64_t)(t + 8192) << 2) |
         (east ? 1 : 0);
}

inline bool lattice_in(int n, int u, int t) {
  if ((u + t) & 1) return false;
  return std::abs(u) <= n && std::abs(t) <= 2 * n - std::abs(u);
}

bool tri_in(int n, int u, int t, bool east) {
  int u3 = east ? u + 1 : u - 1;
  return lattice_in(n, u, t) && lattice_in(n, u, t + 2) &&
         lattice_in(n, u3, t + 1);
}

struct LatticeSeg {
  int u1, t1, u2, t2;
};

// Side index 0..5 (L1..L6) of a boundary lattice segment, or -1.
int side_of_segment(int n, const LatticeSeg& s) {
  auto on = [&](auto pred) { return pred(s.u1, s.t1) && pred(s.u2, s.t2); };
  if (on([&](int u, int) { return u == -n; })) return 0;            // L1 west
  if (on([&](int u, int t) { return t == -u - 2 * n; })) return 1;  // L2 SSW
  if (on([&](int u, int t) { return t == u - 2 * n; })) return 2;   // L3 SSE
  if (on([&](int u, int) { return u == n; })) return 3;             // L4 east
  if (on([&](int u, int t) { return t == -u + 2 * n; })) return 4;  // L5 NNE
  if (on([&](int u, int t) { return t == u + 2 * n; })) return 5;   // L6 NNW
  return -1;
}

// Projection of a Z^3 point along (1,1,1).
inline std::pair<int, int> project(const Box& p) {
  return {p.x - p.y, 2 * p.z - p.x - p.y};
}

}  // namespace

int HexGraph::vertex_id(int u, int t, bool east) const {
  auto it = vert_index_.find(key_of(u, t, east));
  return it == vert_index_.end() ? -1 : it->second;
}

bool HexGraph::has_vertex(int u, int t, bool east) const {
  return vertex_id(u, t, east) >= 0;
}

int HexGraph::edge_between(int v1, int v2) const {
  for (int e : verts_[v1].edge_ids)
    if (e >= 0 && (edges_[e].a == v2 || edges_[e].b == v2)) return e;
  return -1;
}

HexGraph HexGraph::build(int n) {
  if (n <= 0) throw std::invalid_argument("hexagon side must be positive");
  HexGraph g;
  g.n_ = n;
  for (int t = -2 * n; t <= 2 * n; ++t)
    for (int u = -n; u <= n; ++u) {
      if ((u + t) & 1) continue;
      for (bool east : {true, false})
        if (tri_in(n, u, t, east)) {
          g.vert_index_[key_of(u, t, east)] = (int)g.verts_.size();
          g.verts_.push_back({u, t, east});
        }
    }

  auto add_edge = [&](int a, int b, Dir d, int expo) {
    int id = (int)g.edges_.size();
    if (a > b) std::swap(a, b);
    g.edges_.push_back({a, b, d, expo});
    for (int v : {a, b}) {
      auto& vx = g.verts_[v];
      vx.edge_ids[vx.degree++] = id;
    }
  };

  for (int v = 0; v < (int)g.verts_.size(); ++v) {
    const auto vx = g.verts_[v];
    if (!vx.east) continue;
    int u = vx.u, t = vx.t;
    if (int w = g.vertex_id(u, t, false); w >= 0)
      add_edge(v, w, Dir::horizontal, (t + 2 * n - std::abs(u)) / 2);
    if (int w = g.vertex_id(u + 1, t + 1, false); w >= 0)
      add_edge(v, w, Dir::ne, 0);
    if (int w = g.vertex_id(u + 1, t - 1, false); w >= 0)
      add_edge(v, w, Dir::nw, 0);
  }

  // Hexagonal faces around internal lattice points.
  for (int t = -2 * n; t <= 2 * n; ++t)
    for (int u = -n; u <= n; ++u) {
      if ((u + t) & 1) continue;
      int e_ut = g.vertex_id(u, t, true), w_ut = g.vertex_id(u, t, false);
      int e_lo = g.vertex_id(u, t - 2, true);
      int w_lo = g.vertex_id(u, t - 2, false);
      int e_l = g.vertex_id(u - 1, t - 1, true);
      int w_r = g.vertex_id(u + 1, t - 1, false);
      if (e_ut < 0 || w_ut < 0 || e_lo < 0 || w_lo < 0 || e_l < 0 || w_r < 0)
        continue;
      Face f;
      f.u = u;
      f.t = t;
      f.hi = {g.edge_between(e_ut, w_ut), g.edge_between(e_l, w_lo),
              g.edge_between(e_lo, w_r)};
      f.lo = {g.edge_between(e_l, w_ut), g.edge_between(e_lo, w_lo),
              g.edge_between(e_ut, w_r)};
      for (int e : f.hi) assert(e >= 0);
      for (int e : f.lo) assert(e >= 0);
      g.faces_.push_back(f);
    }

  // Boundary classification: each boundary triangle misses exactly one
  // neighbor, and the crossed lattice segment lies on one of the six sides.
  struct SideEntry {
    int dist, v;
  };
  std::array<std::vector<SideEntry>, 6> acc;
  const std::array<std::pair<int, int>, 6> ref_corner = {{
      {-n, -n},   // A for L1
      {-n, -n},   // A for L2
      {n, -n},    // B for L3
      {n, -n},    // B for L4
      {0, 2 * n}, // C for L5
      {0, 2 * n}, // C for L6
  }};
  for (int v = 0; v < (int)g.verts_.size(); ++v) {
    auto& vx = g.verts_[v];
    if (vx.degree == 3) continue;
    vx.boundary = true;
    int u = vx.u, t = vx.t;
    std::vector<std::pair<int64_t, LatticeSeg>> cands;
    if (vx.east) {
      cands = {{key_of(u, t, false), {u, t, u, t + 2}},
               {key_of(u + 1, t + 1, false), {u, t + 2, u + 1, t + 1}},
               {key_of(u + 1, t - 1, false), {u, t, u + 1, t + 1}}};
    } else {
      cands = {{key_of(u, t, true), {u, t, u, t + 2}},
               {key_of(u - 1, t - 1, true), {u - 1, t + 1, u, t}},
               {key_of(u - 1, t + 1, true), {u - 1, t + 1, u, t + 2}}};
    }
    for (auto& [k, seg] : cands) {
      if (g.vert_index_.count(k)) continue;
      int s = side_of_segment(n, seg);
      assert(s >= 0);
      vx.side = s;
      auto [cu, ct] = ref_corner[s];
      acc[s].push_back({std::abs(u - cu) + std::abs(t - ct), v});
    }
  }
  for (int s = 0; s < 6; ++s) {
    std::sort(acc[s].begin(), acc[s].end(), [](auto& a, auto& b) {
      return a.dist < b.dist;
    });
    for (auto& e : acc[s]) g.sides_[s].push_back(e.v);
    assert((int)g.sides_[s].size() == n);
  }

  // Boundary cycle A -> NW -> C -> NE -> B -> S -> A.
  auto append = [&](const std::vector<int>& side, bool rev) {
    if (rev)
      g.boundary_cycle_.insert(g.boundary_cycle_.end(), side.rbegin(), side.rend());
    else
      g.boundary_cycle_.insert(g.boundary_cycle_.end(), side.begin(), side.end());
  };
  append(g.sides_[0], false);  // L1 from A to NW
  append(g.sides_[5], true);   // L6 from NW to C
  append(g.sides_[4], false);  // L5 from C to NE
  append(g.sides_[3], true);   // L4 from NE to B
  append(g.sides_[2], false);  // L3 from B to S
  append(g.sides_[1], true);   // L2 from S to A
  return g;
}

int gauge_exponent(const HexGraph& g, const Matching& m) {
  int e = 0;
  for (int id : m) e += g.edges()[id].exponent;
  return e;
}

bool is_perfect_matching(const HexGraph& g, const Matching& m) {
  std::vector<int> cov(g.verts().size(), 0);
  for (int id : m) {
    if (id < 0 || id >= (int)g.edges().size()) return false;
    ++cov[g.edges()[id].a];
    ++cov[g.edges()[id].b];
  }
  for (int c : cov)
    if (c != 1) return false;
  return true;
}

Matching face_flip(const HexGraph& g, const Matching& m,
                   const HexGraph::Face& f) {
  (void)g;
  auto contains_all = [&](const std::array<int, 3>& tri) {
    for (int e : tri)
      if (!std::binary_search(m.begin(), m.end(), e)) return false;
    return true;
  };
  const std::array<int, 3>*from = nullptr, *to = nullptr;
  if (contains_all(f.hi)) {
    from = &f.hi;
    to = &f.lo;
  } else if (contains_all(f.lo)) {
    from = &f.lo;
    to = &f.hi;
  } else {
    throw std::invalid_argument("face not flippable in this matching");
  }
  Matching r = m;
  for (int e : *from) r.erase(std::find(r.begin(), r.end(), e));
  for (int e : *to) r.push_back(e);
  std::sort(r.begin(), r.end());
  return r;
}

// ---- surface tilings ----------------------------------------------------

std::vector<int> surface_matching(const HexGraph& g, const PlanePartition& pp,
                                  Box center) {
  auto [u0, t0] = project(center);
  const Box p = pp.basepoint();
  const int n = g.n();
  const int span = 4 * n + pp.extent() + 8;

  // Surface height over absolute column (x,y); -1 outside the octant.
  auto zsurf = [&](int64_t x, int64_t y) -> int64_t {
    if (x < p.x || y < p.y) return -1;
    return p.z + pp.height((int)(x - p.x), (int)(y - p.y));
  };

  std::vector<int> out;
  for (int id = 0; id < (int)g.edges().size(); ++id) {
    const auto& e = g.edges()[id];
    const auto& va = g.verts()[e.a];
    const auto& vb = g.verts()[e.b];
    const auto& ve = va.east ? va : vb;  // the east triangle of the pair
    int64_t U = ve.u + u0, T = ve.t + t0;
    bool found = false;
    switch (e.dir) {
      case HexGraph::Dir::horizontal: {
        // top face of column (x, x-U) at height z = (T+2+2x-U)/2
        int64_t xlo = std::max<int64_t>(p.x, p.y + U);
        for (int64_t x = xlo; x <= xlo + span; ++x) {
          int64_t z = (T + 2 + 2 * x - U) / 2;
          int64_t h = zsurf(x, x - U);
          if (h == z) {
            found = true;
            break;
          }
          if (h < z) break;  // strictly decreasing gap
        }
        break;
      }
      case HexGraph::Dir::ne: {
        // x-normal face {X} x [y,y+1] x [z,z+1], X - y = U+1, z = (T+2X-U)/2
        int64_t xlo = std::max<int64_t>(p.x, p.y + U + 1);
        for (int64_t X = xlo; X <= xlo + span; ++X) {
          int64_t y = X - (U + 1);
          int64_t z = (T + 2 * X - U) / 2;
          if (zsurf(X, y) <= z && (X == p.x || z < zsurf(X - 1, y))) {
            found = true;
            break;
          }
        }
        break;
      }
      case HexGraph::Dir::nw: {
        // y-normal face [x,x+1] x {Y} x [z,z+1], x - Y = U, z = (T+2x-U)/2
        int64_t xlo = std::max<int64_t>(p.x, p.y + U);
        for (int64_t x = xlo; x <= xlo + span; ++x) {
          int64_t Y = x - U;
          int64_t z = (T + 2 * x - U) / 2;
          if (zsurf(x, Y) <= z && (Y == p.y || z < zsurf(x, Y - 1))) {
            found = true;
            break;
          }
        }
        break;
      }
    }
    if (found) out.push_back(id);
  }
  return out;
}

Matching to_matching(const PlanePartition& pp, const HexGraph& g) {
  if (pp.extent() > g.n())
    throw std::invalid_argument("partition does not fit in the n-box");
  PlanePartition at_origin =
      PlanePartition::from_boxes(pp.boxes(), {0, 0, 0});
  Matching m = surface_matching(g, at_origin, {0, 0, 0});
  if (!is_perfect_matching(g, m))
    throw std::logic_error("surface tiling is not a perfect matching");
  return m;
}

PlanePartition from_matching(const HexGraph& g, const Matching& m) {
  if (!is_perfect_matching(g, m))
    throw std::invalid_argument("not a perfect matching of H(n)");
  const int n = g.n();
  // Along diagonal U: the matching's horizontal edges, ordered by t
  // descending, are the top faces of columns (x, x-U) for x ascending.
  std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
  for (int U = -(n - 1); U <= n - 1; ++U) {
    std::vector<int> ts;
    for (int id : m) {
      const auto& e = g.edges()[id];
      if (e.dir != HexGraph::Dir::horizontal) continue;
      const auto& ve = g.verts()[e.a].east ? g.verts()[e.a] : g.verts()[e.b];
      if (ve.u == U) ts.push_back(ve.t);
    }
    if ((int)ts.size() != n - std::abs(U))
      throw std::invalid_argument("horizontal edge count violates de Bruijn rigidity");
    std::sort(ts.rbegin(), ts.rend());
    for (int i = 0; i < (int)ts.size(); ++i) {
      int x = std::max(0, U) + i;
      int y = x - U;
      int z = (ts[i] + 2 + 2 * x - U) / 2;
      if (z < 0 || z > n)
        throw std::invalid_argument("matching does not come from a boxed partition");
      h[x][y] = z;
    }
  }
  return PlanePartition::from_heights(h);
}

// ---- nodes and pairings --------------------------------------------------

std::vector<int> frozen_background(const HexGraph& g, int a, int b, int c) {
  auto empty_at = [](int x, int y, int z) {
    return PlanePartition::from_boxes({}, {x, y, z});
  };
  Box center{a, b, c};
  std::vector<int> mult(g.edges().size(), 0);
  for (int id : surface_matching(g, empty_at(0, b, c), center)) ++mult[id];
  for (int id : surface_matching(g, empty_at(a, 0, c), center)) ++mult[id];
  for (int id : surface_matching(g, empty_at(a, b, 0), center)) ++mult[id];
  for (int id : surface_matching(g, empty_at(a, b, c), center)) --mult[id];
  return mult;
}

bool NodeSpec::is_node(int v) const {
  auto in = [&](const std::vector<int>& s) {
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  return in(red) || in(green) || in(blue);
}

NodeSpec place_nodes(const HexGraph& g, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("node parameters must be nonnegative");
  // Each side holds its own node run, so max(a,b,c) <= n suffices; the
  // degree-law and per-side validation below rejects anything tighter.
  if (g.n() < std::max({a, b, c}))
    throw std::invalid_argument("hexagon too small: need n >= max(a,b,c)");

  std::vector<int> mult = frozen_background(g, a, b, c);
  std::vector<int> cov(g.verts().size(), 0);
  for (int id = 0; id < (int)g.edges().size(); ++id) {
    if (mult[id] < 0 || mult[id] > 2)
      throw std::logic_error("frozen background has invalid multiplicity");
    cov[g.edges()[id].a] += mult[id];
    cov[g.edges()[id].b] += mult[id];
  }

  NodeSpec spec;
  spec.a = a;
  spec.b = b;
  spec.c = c;
  for (int v = 0; v < (int)g.verts().size(); ++v) {
    if (cov[v] == 2) continue;
    if (cov[v] != 1 || !g.verts()[v].boundary)
      throw std::logic_error("frozen background violates the degree law");
    int s = g.verts()[v].side;
    spec.by_side[s].push_back(v);
  }

  // Per-side counts forced by the construction: a,c,c,b,b,a on L1..L6.
  const std::array<int, 6> expect = {a, c, c, b, b, a};
  for (int s = 0; s < 6; ++s) {
    if ((int)spec.by_side[s].size() != expect[s])
      throw std::logic_error("node count on side L" + std::to_string(s + 1) +
                             " does not match");
    // The nodes come out as the run of boundary triangles nearest the
    // side's reference corner; keep them in that order.
    std::vector<int> ordered;
    for (int v : g.sides()[s])
      if (std::find(spec.by_side[s].begin(), spec.by_side[s].end(), v) !=
          spec.by_side[s].end())
        ordered.push_back(v);
    for (int i = 0; i < expect[s]; ++i)
      if (ordered[i] != g.sides()[s][i])
        throw std::logic_error("nodes are not the corner-nearest run on L" +
                               std::to_string(s + 1));
    spec.by_side[s] = ordered;
  }
  for (int s : {0, 1})
    spec.red.insert(spec.red.end(), spec.by_side[s].begin(), spec.by_side[s].end());
  for (int s : {2, 3})
    spec.green.insert(spec.green.end(), spec.by_side[s].begin(), spec.by_side[s].end());
  for (int s : {4, 5})
    spec.blue.insert(spec.blue.end(), spec.by_side[s].begin(), spec.by_side[s].end());
  for (int v : g.boundary_cycle())
    if (cov[v] == 1) spec.cyclic.push_back(v);
  return spec;
}

Pairing normalize_pairing(std::vector<std::pair<int, int>> pairs) {
  for (auto& p : pairs)
    if (p.first > p.second) std::swap(p.first, p.second);
  std::sort(pairs.begin(), pairs.end());
  return Pairing{std::move(pairs)};
}

Pairing tripartite_pairing(const HexGraph& g, const NodeSpec& spec) {
  (void)g;
  auto color = [&](int v) {
    if (std::find(spec.red.begin(), spec.red.end(), v) != spec.red.end()) return 0;
    if (std::find(spec.green.begin(), spec.green.end(), v) != spec.green.end())
      return 1;
    return 2;
  };
  const auto& cyc = spec.cyclic;
  int m = (int)cyc.size();
  // Stack scan; rotate the starting point until the scan closes without a
  // wrap-around pair. Adjacent different-colored nodes always pair.
  for (int start = 0; start < std::max(1, m); ++start) {
    std::vector<int> stack;
    std::vector<std::pair<int, int>> pairs;
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      int v = cyc[(start + i) % m];
      if (!stack.empty() && color(stack.back()) != color(v)) {
        pairs.emplace_back(stack.back(), v);
        stack.pop_back();
      } else {
        stack.push_back(v);
      }
    }
    if (!stack.empty()) ok = false;
    if (ok) return normalize_pairing(std::move(pairs));
  }
  if (m == 0) return Pairing{};
  throw std::logic_error("no planar tripartite pairing found");
}

// ---- JSON ----------------------------------------------------------------

std::string HexGraph::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto verts = nlohmann::json::array();
  for (const auto& v : verts_) {
    nlohmann::json jv;
    jv["u"] = v.u;
    jv["t"] = v.t;
    jv["east"] = v.east;
    jv["boundary"] = v.boundary;
    if (v.side >= 0) jv["side"] = v.side + 1;
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  auto edges = nlohmann::json::array();
  for (const auto& e : edges_) {
    nlohmann::json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["dir"] = e.dir == Dir::horizontal ? "horizontal"
                : e.dir == Dir::ne       ? "ne"
                                         : "nw";
    je["exponent"] = e.exponent;
    edges.push_back(je);
  }
  j["edges"] = edges;
  j["face_count"] = faces_.size();
  return j.dump();
}

}  // namespace dbc
