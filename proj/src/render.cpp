#include "dbc/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dbc {

namespace {

constexpr double kScale = 24.0;
// sqrt(3)/2, the horizontal spacing of the lattice in u units
constexpr double kUx = 0.8660254037844386;

// lattice point (u,t) -> svg coordinates (y grows downward)
inline std::pair<double, double> xy(double u, double t) {
  return {u * kUx * kScale, -t * 0.5 * kScale};
}

struct SvgDoc {
  std::ostringstream body;
  double minx = 1e9, miny = 1e9, maxx = -1e9, maxy = -1e9;

  void grow(double x, double y) {
    minx = std::min(minx, x - kScale);
    miny = std::min(miny, y - kScale);
    maxx = std::max(maxx, x + kScale);
    maxy = std::max(maxy, y + kScale);
  }
  void polygon(const std::vector<std::pair<double, double>>& pts,
               const std::string& fill, const std::string& stroke,
               double width) {
    body << "  <polygon points=\"";
    for (auto& [x, y] : pts) {
      body << x << "," << y << " ";
      grow(x, y);
    }
    body << "\" fill=\"" << fill << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << width << "\"/>\n";
  }
  void line(double x1, double y1, double x2, double y2,
            const std::string& stroke, double width) {
    body << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
         << "\" y2=\"" << y2 << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << width << "\" stroke-linecap=\"round\"/>\n";
    grow(x1, y1);
    grow(x2, y2);
  }
  void circle(double x, double y, double r, const std::string& fill) {
    body << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
         << "\" fill=\"" << fill << "\"/>\n";
    grow(x, y);
  }
  std::string finish() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx
        << " " << miny << " " << (maxx - minx) << " " << (maxy - miny)
        << "\">\n";
    out << body.str();
    out << "</svg>\n";
    return out.str();
  }
};

// The three visible faces of the unit cube at (x,y,z), projected.
// Face kind 0 = top (z-normal), 1 = x-normal, 2 = y-normal.
std::vector<std::pair<double, double>> cube_face(int x, int y, int z,
                                                 int kind) {
  auto pt = [&](int dx, int dy, int dz) {
    int px = x + dx, py = y + dy, pz = z + dz;
    return xy(px - py, 2 * pz - px - py);
  };
  switch (kind) {
    case 0:  // top: z = z+1 plane
      return {pt(0, 0, 1), pt(1, 0, 1), pt(1, 1, 1), pt(0, 1, 1)};
    case 1:  // x-normal: x = x+1 plane
      return {pt(1, 0, 0), pt(1, 1, 0), pt(1, 1, 1), pt(1, 0, 1)};
    default:  // y-normal: y = y+1 plane
      return {pt(0, 1, 0), pt(1, 1, 0), pt(1, 1, 1), pt(0, 1, 1)};
  }
}

const char* kFaceShade[3][2] = {
    // {light palette, dark palette} per face kind
    {"#e8e8f6", "#8888c8"},
    {"#c8c8e4", "#6666aa"},
    {"#a8a8d4", "#444488"},
};

}  // namespace

std::string render_pp_svg(const PlanePartition& pp, int n) {
  HexGraph g = HexGraph::build(n);
  Matching m = to_matching(pp, g);
  SvgDoc doc;
  const char* fills[3] = {"#f3e2a9", "#a9c9f3", "#b8e3b0"};
  for (int id : m) {
    const auto& e = g.edges()[id];
    const auto& va = g.verts()[e.a];
    const auto& vb = g.verts()[e.b];
    // the lozenge is the union of the two triangles; its four corners are
    // the union of their lattice corners
    auto corners = [&](const HexGraph::Vertex& v) {
      std::vector<std::pair<int, int>> cs = {{v.u, v.t}, {v.u, v.t + 2}};
      cs.push_back({v.east ? v.u + 1 : v.u - 1, v.t + 1});
      return cs;
    };
    auto ca = corners(va), cb = corners(vb);
    std::vector<std::pair<int, int>> quad = ca;
    for (auto& p : cb)
      if (std::find(quad.begin(), quad.end(), p) == quad.end())
        quad.push_back(p);
    // order the 4 corners around the centroid
    double cx = 0, cy = 0;
    std::vector<std::pair<double, double>> pts;
    for (auto& [u, t] : quad) {
      auto [x, y] = xy(u, t);
      pts.push_back({x, y});
      cx += x / 4;
      cy += y / 4;
    }
    std::sort(pts.begin(), pts.end(), [&](auto& p, auto& q) {
      return std::atan2(p.second - cy, p.first - cx) <
             std::atan2(q.second - cy, q.first - cx);
    });
    doc.polygon(pts, fills[(int)e.dir], "#555555", 1.0);
  }
  return doc.finish();
}

std::string render_dbc_svg(const DoubleBoxClass& cls) {
  struct Entry {
    Box b;
    int palette;  // 0 light (type II), 1 dark (type III), 2.. per type I
    bool moveable;
  };
  std::vector<Entry> entries;
  auto is_moveable = [&](const Box& b) {
    return std::find(cls.moveable.begin(), cls.moveable.end(), b) !=
           cls.moveable.end();
  };
  for (const Box& b : cls.typing.type3) entries.push_back({b, 1, false});
  for (const Box& b : cls.typing.type2)
    entries.push_back({b, 0, is_moveable(b)});
  for (int m = 0; m < 3; ++m)
    for (const Box& b : cls.typing.type1[m]) entries.push_back({b, 2, false});
  // far-to-near painter order along the (1,1,1) view direction
  std::sort(entries.begin(), entries.end(), [](const Entry& p, const Entry& q) {
    int sp = p.b.x + p.b.y + p.b.z, sq = q.b.x + q.b.y + q.b.z;
    if (sp != sq) return sp < sq;
    return p.b < q.b;
  });
  SvgDoc doc;
  const char* type1_fill[3] = {"#f0d0d0", "#d0f0d0", "#d0d0f0"};
  for (const auto& en : entries) {
    for (int kind = 0; kind < 3; ++kind) {
      std::string fill;
      if (en.palette == 2)
        fill = type1_fill[kind];
      else
        fill = kFaceShade[kind][en.palette];
      doc.polygon(cube_face(en.b.x, en.b.y, en.b.z, kind), fill,
                  en.moveable ? "#cc2222" : "#333333",
                  en.moveable ? 2.5 : 1.0);
    }
  }
  return doc.finish();
}

std::string render_ddc_svg(const HexGraph& g, const DoubleDimerConfig& cfg,
                           const NodeSpec& spec) {
  SvgDoc doc;
  auto center = [&](int v) {
    const auto& vx = g.verts()[v];
    double uc = vx.u + (vx.east ? 1.0 / 3 : -1.0 / 3);
    return xy(uc, vx.t + 1);
  };
  for (int e = 0; e < (int)g.edges().size(); ++e) {
    auto [x1, y1] = center(g.edges()[e].a);
    auto [x2, y2] = center(g.edges()[e].b);
    doc.line(x1, y1, x2, y2, "#dddddd", 1.0);
  }
  for (int e = 0; e < (int)g.edges().size(); ++e) {
    if (!cfg.mult[e]) continue;
    auto [x1, y1] = center(g.edges()[e].a);
    auto [x2, y2] = center(g.edges()[e].b);
    if (cfg.mult[e] == 2) {
      double dx = y2 - y1, dy = x1 - x2;
      double len = std::sqrt(dx * dx + dy * dy);
      dx = dx / len * 2.2;
      dy = dy / len * 2.2;
      doc.line(x1 + dx, y1 + dy, x2 + dx, y2 + dy, "#222222", 2.2);
      doc.line(x1 - dx, y1 - dy, x2 - dx, y2 - dy, "#222222", 2.2);
    } else {
      doc.line(x1, y1, x2, y2, "#1f6fba", 3.0);
    }
  }
  for (int v : spec.red) {
    auto [x, y] = center(v);
    doc.circle(x, y, 5.0, "#d62728");
  }
  for (int v : spec.green) {
    auto [x, y] = center(v);
    doc.circle(x, y, 5.0, "#2ca02c");
  }
  for (int v : spec.blue) {
    auto [x, y] = center(v);
    doc.circle(x, y, 5.0, "#1f77b4");
  }
  return doc.finish();
}

}  // namespace dbc
