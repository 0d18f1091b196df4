#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dbc {

struct Box {
  int x = 0, y = 0, z = 0;
  auto operator<=>(const Box&) const = default;
  Box operator+(const Box& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Box operator-(const Box& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

// Finite order ideal of N^3 ("stack of boxes in the corner of a room"),
// stored as a sorted list of boxes relative to an integer basepoint.
class PlanePartition {
 public:
  PlanePartition() = default;

  // boxes are relative coordinates (all components >= 0); throws if the set
  // is not downward closed in each coordinate direction.
  static PlanePartition from_boxes(std::vector<Box> boxes,
                                   Box basepoint = {0, 0, 0});
  // Convenience: boxes given in absolute coordinates.
  static PlanePartition from_absolute(const std::vector<Box>& boxes,
                                      Box basepoint);
  // Heights array form (row i, column j -> stack height), used for I/O.
  static PlanePartition from_heights(const std::vector<std::vector<int>>& h,
                                     Box basepoint = {0, 0, 0});

  int volume() const { return static_cast<int>(boxes_.size()); }
  const std::vector<Box>& boxes() const { return boxes_; }  // sorted, relative
  Box basepoint() const { return basepoint_; }
  std::vector<Box> absolute_boxes() const;
  bool contains(const Box& rel) const;
  // Stack height over relative column (i,j).
  int height(int i, int j) const;
  std::vector<std::vector<int>> to_heights() const;
  // Largest coordinate appearing plus one; 0 for the empty partition.
  int extent() const;

  bool operator==(const PlanePartition&) const = default;

  std::string to_json() const;
  static PlanePartition from_json(const std::string& text);

 private:
  std::vector<Box> boxes_;  // relative, lexicographically sorted
  Box basepoint_{0, 0, 0};
};

bool is_order_ideal(const std::vector<Box>& sorted_boxes);

// Every plane partition with volume <= max_volume, each exactly once, in a
// deterministic lexicographic order of the sorted box lists. Generation is
// duplicate-free without a dedupe table: boxes are added in strictly
// increasing lexicographic order, and every prefix of a sorted ideal is
// itself an ideal.
std::vector<PlanePartition> enumerate_by_volume(int max_volume);

// Every plane partition fitting in the a x b x c box, each exactly once.
std::vector<PlanePartition> enumerate_boxed(int a, int b, int c);

}  // namespace dbc
