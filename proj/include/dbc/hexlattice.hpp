#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dbc/planepart.hpp"

namespace dbc {

// The hexagon graph H(n): unit triangles of the side-n triangular hexagon,
// adjacent when they share a lattice edge.
//
// Planar coordinates: a point (x,y,z) of Z^3 projects along (1,1,1) to the
// lattice point (u,t) = (x-y, 2z-x-y); t increases to the north. Lattice
// points satisfy u == t (mod 2). An east-pointing triangle E(u,t) has
// corners (u,t), (u,t+2), (u+1,t+1); a west-pointing W(u,t) has corners
// (u,t), (u,t+2), (u-1,t+1). The hexagon is the projection of [0,n]^3:
// |u| <= n and |t| <= 2n - |u|.
//
// Edge direction classes are the three lozenge orientations:
//   horizontal  E(u,t)-W(u,t)      crosses the vertical lattice edge; the
//                                  lozenge is the top face of a unit cube
//   ne          E(u,t)-W(u+1,t+1)  x-normal cube face
//   nw          E(u,t)-W(u+1,t-1)  y-normal cube face
//
// Gauge: horizontal edges carry exponent row(e) = (t + 2n - |u|)/2, the
// edge's index from the bottom boundary within its column; other edges
// carry 0. The two alternating triples of every hexagonal face then have
// exponent sums differing by exactly 1, so a face flip multiplies the
// configuration weight by q^{+-1}, matching box addition/removal.
class HexGraph {
 public:
  enum class Dir : uint8_t { horizontal, ne, nw };

  struct Vertex {
    int u, t;
    bool east;
    bool boundary = false;
    int side = -1;  // 0..5 for boundary vertices (L1..L6), else -1
    std::array<int, 3> edge_ids{-1, -1, -1};
    int degree = 0;
  };

  struct Edge {
    int a, b;  // vertex ids, a < b
    Dir dir;
    int exponent;  // gauge exponent r(e)
  };

  // Hexagonal face around an internal lattice point; `hi` is the
  // alternating triple containing the upper horizontal edge.
  struct Face {
    int u, t;
    std::array<int, 3> hi, lo;
  };

  static HexGraph build(int n);

  int n() const { return n_; }
  const std::vector<Vertex>& verts() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  // Boundary vertices per side L1..L6, each ordered outward from the side's
  // reference corner (A for L1/L2, B for L3/L4, C for L5/L6).
  const std::array<std::vector<int>, 6>& sides() const { return sides_; }
  // All boundary vertices in counterclockwise cyclic order starting at A.
  const std::vector<int>& boundary_cycle() const { return boundary_cycle_; }

  int vertex_id(int u, int t, bool east) const;
  bool has_vertex(int u, int t, bool east) const;
  int edge_between(int v1, int v2) const;  // -1 if absent

  std::string to_json() const;

 private:
  int n_ = 0;
  std::vector<Vertex> verts_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::array<std::vector<int>, 6> sides_;
  std::vector<int> boundary_cycle_;
  std::unordered_map<int64_t, int> vert_index_;
};

// A perfect matching of H(n), as a sorted list of edge ids.
using Matching = std::vector<int>;

int gauge_exponent(const HexGraph& g, const Matching& m);
bool is_perfect_matching(const HexGraph& g, const Matching& m);

// Replace one alternating triple of face f by the other. Throws if the
// matching contains neither triple entirely.
Matching face_flip(const HexGraph& g, const Matching& m, const HexGraph::Face& f);

// ---- surface tilings -------------------------------------------------

// The edges of H(n) covered by the lozenge tiling of the staircase surface
// of `pp` (a plane partition with its basepoint), drawn in the window whose
// center hexagonal face is the projection of the lattice point `center`.
// The surface consists of the top faces of every column of the partition's
// octant plus the exposed x- and y-wall faces; outside the partition's
// support this is the frozen corner pattern of the octant.
std::vector<int> surface_matching(const HexGraph& g, const PlanePartition& pp,
                                  Box center);

// Folklore bijection: plane partition (basepoint origin) in the n-box to a
// perfect matching of H(n), and back.
Matching to_matching(const PlanePartition& pp, const HexGraph& g);
PlanePartition from_matching(const HexGraph& g, const Matching& m);

// ---- nodes and pairings ----------------------------------------------

struct NodeSpec {
  int a = 0, b = 0, c = 0;
  std::vector<int> red, green, blue;       // vertex ids
  std::array<std::vector<int>, 6> by_side; // nodes per side, from the corner
  std::vector<int> cyclic;                 // all nodes in boundary cyclic order
  bool is_node(int v) const;
};

// Edge multiplicities of the frozen background for parameters (a,b,c):
// matchings of the three empty partitions based at (0,b,c), (a,0,c),
// (a,b,0) superposed, matching of the empty partition based at (a,b,c)
// removed. This is the minimal double-dimer configuration.
std::vector<int> frozen_background(const HexGraph& g, int a, int b, int c);

// Node placement for parameters (a,b,c): a and c red nodes on L1/L2 nearest
// corner A, c and b green nodes on L3/L4 nearest B, b and a blue nodes on
// L5/L6 nearest C. The concrete boundary vertices are derived from the
// frozen background: its single-covered boundary vertices are the nodes;
// they come out as the run of boundary triangles nearest each corner.
// Requires n >= max(a,b,c).
NodeSpec place_nodes(const HexGraph& g, int a, int b, int c);

struct Pairing {
  std::vector<std::pair<int, int>> pairs;  // vertex ids, normalized
  bool operator==(const Pairing&) const = default;
};

Pairing normalize_pairing(std::vector<std::pair<int, int>> pairs);

// The unique planar pairing of the nodes in which every pair joins nodes of
// different colors; computed by a stack scan of the boundary cycle.
Pairing tripartite_pairing(const HexGraph& g, const NodeSpec& spec);

}  // namespace dbc
