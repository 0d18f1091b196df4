#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dbc/hexlattice.hpp"

namespace dbc::test {

// Independent brute-force enumeration of all perfect matchings of the
// subgraph of H(n) induced by vertices not in `excluded`. Test-side oracle,
// kept away from the tiling machinery it is checking.
inline void all_matchings_rec(const dbc::HexGraph& g,
                              const std::vector<char>& excluded,
                              std::vector<char>& covered,
                              std::vector<int>& current, size_t from,
                              std::vector<dbc::Matching>& out) {
  size_t v = from;
  while (v < covered.size() && (covered[v] || excluded[v])) ++v;
  if (v == covered.size()) {
    dbc::Matching m = current;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  covered[v] = 1;
  for (int e : g.verts()[v].edge_ids) {
    if (e < 0) continue;
    const auto& ed = g.edges()[e];
    size_t w = (size_t)(ed.a == (int)v ? ed.b : ed.a);
    if (covered[w] || excluded[w]) continue;
    covered[w] = 1;
    current.push_back(e);
    all_matchings_rec(g, excluded, covered, current, v + 1, out);
    current.pop_back();
    covered[w] = 0;
  }
  covered[v] = 0;
}

inline std::vector<dbc::Matching> all_matchings(
    const dbc::HexGraph& g,
    const std::vector<char>& excluded = {}) {
  std::vector<char> excl = excluded;
  excl.resize(g.verts().size(), 0);
  std::vector<char> covered(g.verts().size(), 0);
  std::vector<int> current;
  std::vector<dbc::Matching> out;
  all_matchings_rec(g, excl, covered, current, 0, out);
  return out;
}

// Minimal XML well-formedness check: tag nesting and quoting.
inline bool xml_well_formed(const std::string& s) {
  std::vector<std::string> stack;
  size_t i = 0;
  bool seen_root = false;
  while (i < s.size()) {
    if (s[i] != '<') {
      ++i;
      continue;
    }
    size_t j = s.find('>', i);
    if (j == std::string::npos) return false;
    std::string tag = s.substr(i + 1, j - i - 1);
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') {
      i = j + 1;
      continue;
    }
    if (tag[0] == '/') {
      if (stack.empty()) return false;
      std::string name = tag.substr(1);
      if (stack.back() != name) return false;
      stack.pop_back();
    } else {
      bool self_close = tag.back() == '/';
      std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
      if (name.empty()) return false;
      if (stack.empty() && seen_root && !self_close) return false;
      if (!self_close) {
        stack.push_back(name);
        seen_root = true;
      } else if (stack.empty()) {
        return false;
      }
    }
    i = j + 1;
  }
  return stack.empty() && seen_root;
}

}  // namespace dbc::test
