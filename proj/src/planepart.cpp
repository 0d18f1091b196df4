#include "dbc/planepart.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace dbc {

bool is_order_ideal(const std::vector<Box>& sorted_boxes) {
  auto has = [&](const Box& b) {
    return std::binary_search(sorted_boxes.begin(), sorted_boxes.end(), b);
  };
  for (const Box& b : sorted_boxes) {
    if (b.x < 0 || b.y < 0 || b.z < 0) return false;
    if (b.x > 0 && !has({b.x - 1, b.y, b.z})) return false;
    if (b.y > 0 && !has({b.x, b.y - 1, b.z})) return false;
    if (b.z > 0 && !has({b.x, b.y, b.z - 1})) return false;
  }
  return true;
}

PlanePartition PlanePartition::from_boxes(std::vector<Box> boxes,
                                          Box basepoint) {
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  if (!is_order_ideal(boxes))
    throw std::invalid_argument("box set is not a plane partition");
  PlanePartition p;
  p.boxes_ = std::move(boxes);
  p.basepoint_ = basepoint;
  return p;
}

PlanePartition PlanePartition::from_absolute(const std::vector<Box>& boxes,
                                             Box basepoint) {
  std::vector<Box> rel;
  rel.reserve(boxes.size());
  for (const Box& b : boxes) rel.push_back(b - basepoint);
  return from_boxes(std::move(rel), basepoint);
}

PlanePartition PlanePartition::from_heights(
    const std::vector<std::vector<int>>& h, Box basepoint) {
  std::vector<Box> boxes;
  for (int i = 0; i < static_cast<int>(h.size()); ++i)
    for (int j = 0; j < static_cast<int>(h[i].size()); ++j)
      for (int k = 0; k < h[i][j]; ++k) boxes.push_back({i, j, k});
  return from_boxes(std::move(boxes), basepoint);
}

std::vector<Box> PlanePartition::absolute_boxes() const {
  std::vector<Box> abs;
  abs.reserve(boxes_.size());
  for (const Box& b : boxes_) abs.push_back(b + basepoint_);
  return abs;
}

bool PlanePartition::contains(const Box& rel) const {
  return std::binary_search(boxes_.begin(), boxes_.end(), rel);
}

int PlanePartition::height(int i, int j) const {
  int h = 0;
  while (contains({i, j, h})) ++h;
  return h;
}

std::vector<std::vector<int>> PlanePartition::to_heights() const {
  int rows = 0, cols = 0;
  for (const Box& b : boxes_) {
    rows = std::max(rows, b.x + 1);
    cols = std::max(cols, b.y + 1);
  }
  std::vector<std::vector<int>> h(rows, std::vector<int>(cols, 0));
  for (const Box& b : boxes_) h[b.x][b.y] = std::max(h[b.x][b.y], b.z + 1);
  return h;
}

int PlanePartition::extent() const {
  int e = 0;
  for (const Box& b : boxes_)
    e = std::max({e, b.x + 1, b.y + 1, b.z + 1});
  return e;
}

namespace {

// Candidate boxes whose addition keeps the set an ideal.
std::vector<Box> frontier(const std::set<Box>& cur) {
  if (cur.empty()) return {{0, 0, 0}};
  auto has = [&](const Box& b) { return cur.count(b) > 0; };
  std::set<Box> cand;
  for (const Box& b : cur) {
    for (const Box& nb : {Box{b.x + 1, b.y, b.z}, Box{b.x, b.y + 1, b.z},
                          Box{b.x, b.y, b.z + 1}}) {
      if (has(nb)) continue;
      bool ok = (nb.x == 0 || has({nb.x - 1, nb.y, nb.z})) &&
                (nb.y == 0 || has({nb.x, nb.y - 1, nb.z})) &&
                (nb.z == 0 || has({nb.x, nb.y, nb.z - 1}));
      if (ok) cand.insert(nb);
    }
  }
  return {cand.begin(), cand.end()};
}

void enumerate_ideals(int max_volume, const Box& bound,
                      std::vector<PlanePartition>& out) {
  std::set<Box> cur;
  std::vector<Box> stack;
  out.push_back(PlanePartition());

  // Depth-first growth adding boxes in strictly increasing lexicographic
  // order; each ideal is reached exactly once via its sorted box list.
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) >= max_volume) return;
    Box last = stack.empty() ? Box{-1, -1, -1} : stack.back();
    for (const Box& nb : frontier(cur)) {
      if (!(last < nb)) continue;
      if (nb.x >= bound.x || nb.y >= bound.y || nb.z >= bound.z) continue;
      cur.insert(nb);
      stack.push_back(nb);
      out.push_back(
          PlanePartition::from_boxes({cur.begin(), cur.end()}));
      rec();
      stack.pop_back();
      cur.erase(nb);
    }
  };
  rec();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.boxes() < b.boxes();
  });
}

}  // namespace

std::vector<PlanePartition> enumerate_by_volume(int max_volume) {
  if (max_volume < 0) throw std::invalid_argument("max_volume must be >= 0");
  std::vector<PlanePartition> out;
  int big = max_volume + 1;
  enumerate_ideals(max_volume, {big, big, big}, out);
  return out;
}

std::vector<PlanePartition> enumerate_boxed(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("box dimensions must be nonnegative");
  std::vector<PlanePartition> out;
  enumerate_ideals(a * b * c, {a, b, c}, out);
  return out;
}

std::string PlanePartition::to_json() const {
  nlohmann::json j;
  j["basepoint"] = {basepoint_.x, basepoint_.y, basepoint_.z};
  auto arr = nlohmann::json::array();
  for (const Box& b : boxes_) arr.push_back({b.x, b.y, b.z});
  j["boxes"] = arr;
  return j.dump();
}

PlanePartition PlanePartition::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  auto bp = j.at("basepoint");
  std::vector<Box> boxes;
  for (const auto& t : j.at("boxes"))
    boxes.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
  return from_boxes(std::move(boxes),
                    {bp.at(0).get<int>(), bp.at(1).get<int>(), bp.at(2).get<int>()});
}

}  // namespace dbc
