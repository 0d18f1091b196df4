#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dbc/planepart.hpp"
#include "dbc/qseries.hpp"

namespace dbc {

// Triple of plane partitions based at (0,b,c), (a,0,c), (a,b,0).
struct BoxTriple {
  PlanePartition eta1, eta2, eta3;
  int a = 0, b = 0, c = 0;

  static BoxTriple make(int a, int b, int c, const PlanePartition& e1,
                        const PlanePartition& e2, const PlanePartition& e3);
};

// A box is type III if it lies in all three partitions, type II if in
// exactly two, type I if in exactly one. Type II and III boxes always lie
// in the intersection space {x>=a, y>=b, z>=c}; the type I boxes of each
// partition lie in its exclusive region.
struct BoxTyping {
  int a = 0, b = 0, c = 0;
  std::vector<Box> type1[3];  // absolute, sorted, per partition index
  std::vector<Box> type2;     // absolute, sorted
  std::vector<Box> type3;     // absolute, sorted

  bool operator==(const BoxTyping&) const = default;
  std::vector<int32_t> key() const;  // canonical dedupe key
};

// Assignment of each type-II box (in sorted order) to the index of the
// partition it is NOT contained in.
using Assignment = std::vector<uint8_t>;

struct DoubleBoxClass {
  BoxTyping typing;
  int weight = 0;
  std::vector<Assignment> assignments;  // all valid representatives
  std::vector<Box> moveable;
  int components = 0;
  BigInt chi = 1;

  std::string to_json() const;
};

BoxTyping classify(const BoxTriple& t);

// Criterion 1: every box of the triple lying in the intersection space
// belongs to at least two of the three partitions.
bool criterion1(const BoxTriple& t);

// All assignments whose reconstructed triple consists of three valid plane
// partitions. Empty result means the typing is unrealizable.
std::vector<Assignment> valid_assignments(const BoxTyping& typing);

// Reconstruct the partitions of a representative; index m in 1..3.
PlanePartition reconstruct_eta(const BoxTyping& typing, const Assignment& f,
                               int m);

// Type-II boxes whose missing index is not constant across the valid
// assignments. Throws on an unrealizable typing.
std::vector<Box> moveable_boxes(const BoxTyping& typing);

// Number of face-adjacency components of a box set.
int box_components(const std::vector<Box>& boxes);

// chi = 2^(components of moveable boxes).
BigInt contribution(const BoxTyping& typing);

// |eta| = #typeI + #typeII + 2*#typeIII.
int weight(const BoxTyping& typing);

// Every double-box configuration with weight <= max_weight, exactly once,
// sorted by (weight, canonical key). Enumerates triples with |eta_m| <= W
// and total volume <= 2W (complete since |eta_m| <= |eta| and
// sum |eta_m| = |eta| + |eta_int| <= 2|eta|), filters by Criterion 1 and
// dedupes on the typing.
std::vector<DoubleBoxClass> enumerate_classes(int a, int b, int c,
                                              int max_weight, int jobs = 0);

// Z_DBC(q) = sum over classes of chi * q^weight, truncated.
QSeries zdbc(int a, int b, int c, int trunc_order, int jobs = 0);

}  // namespace dbc
