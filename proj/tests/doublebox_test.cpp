#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dbc/doublebox.hpp"
#include "dbc/qseries.hpp"

using namespace dbc;

namespace {

// The one-stack-per-room configuration of the second worked example at
// (a,b,c) = (1,1,1): a triple intersection box at (1,1,1), a pair box at
// (2,1,1) shared by eta1/eta2, a pair box at (1,1,2) shared by eta2/eta3,
// plus the support boxes each room forces below them.
BoxTriple example_two_triple() {
  auto e1 = PlanePartition::from_absolute(
      {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}}, {0, 1, 1});
  auto e2 = PlanePartition::from_absolute(
      {{1, 0, 1}, {2, 0, 1}, {1, 0, 2}, {1, 1, 1}, {2, 1, 1}, {1, 1, 2}},
      {1, 0, 1});
  auto e3 = PlanePartition::from_absolute(
      {{1, 1, 0}, {1, 1, 1}, {1, 1, 2}}, {1, 1, 0});
  return BoxTriple::make(1, 1, 1, e1, e2, e3);
}

QSeries make(std::vector<long long> v, int n) {
  std::vector<BigInt> c(v.begin(), v.end());
  return QSeries(std::move(c), n);
}

}  // namespace

TEST_CASE("classify the worked example") {
  BoxTriple t = example_two_triple();
  CHECK(criterion1(t));
  BoxTyping ty = classify(t);
  CHECK(ty.type3 == std::vector<Box>{{1, 1, 1}});
  CHECK(ty.type2 == std::vector<Box>{{1, 1, 2}, {2, 1, 1}});
  CHECK(ty.type1[0] == std::vector<Box>{{0, 1, 1}});
  CHECK(ty.type1[1] ==
        std::vector<Box>{{1, 0, 1}, {1, 0, 2}, {2, 0, 1}});
  CHECK(ty.type1[2] == std::vector<Box>{{1, 1, 0}});
  CHECK(weight(ty) == 9);
  // the two weight formulas agree: #I + #II + 2#III == sum|eta| - |eta_int|
  int sum = t.eta1.volume() + t.eta2.volume() + t.eta3.volume();
  CHECK(weight(ty) == sum - 3);
}

TEST_CASE("worked example has forced assignments and no moveable boxes") {
  BoxTyping ty = classify(example_two_triple());
  auto assigns = valid_assignments(ty);
  REQUIRE(assigns.size() == 1);
  // type2 sorted: (1,1,2) then (2,1,1); missing indices 1 and 3
  CHECK(assigns[0] == Assignment{1, 3});
  CHECK(moveable_boxes(ty).empty());
  CHECK(contribution(ty) == 1);

  // the stated exclusion reasons: membership fails exactly for lack of the
  // support box below
  BoxTyping with_support = ty;
  with_support.type1[0] = {{0, 1, 1}, {0, 1, 2}};  // add (0,1,2) to eta1
  auto more = valid_assignments(with_support);
  CHECK(more.size() == 3);  // (1,1,2) may now sit in any two partitions
  CHECK(moveable_boxes(with_support) == std::vector<Box>{{1, 1, 2}});
}

TEST_CASE("the printed intersection data alone is an unrealizable typing") {
  // Only the boxes the example prints: no type I support. Valid as a
  // typing (type2 U type3 is a partition based at (1,1,1)), weight 4 by
  // the typing formula, but no representative exists.
  BoxTyping printed;
  printed.a = printed.b = printed.c = 1;
  printed.type2 = {{1, 1, 2}, {2, 1, 1}};
  printed.type3 = {{1, 1, 1}};
  CHECK(weight(printed) == 4);
  CHECK(valid_assignments(printed).empty());
  CHECK_THROWS_AS(moveable_boxes(printed), std::invalid_argument);
  std::vector<Box> inner = printed.type2;
  inner.insert(inner.end(), printed.type3.begin(), printed.type3.end());
  CHECK_NOTHROW(PlanePartition::from_absolute(inner, {1, 1, 1}));
}

TEST_CASE("criterion 1 cases") {
  auto empty1 = PlanePartition::from_boxes({}, {0, 1, 1});
  auto empty2 = PlanePartition::from_boxes({}, {1, 0, 1});
  auto empty3 = PlanePartition::from_boxes({}, {1, 1, 0});
  CHECK(criterion1(BoxTriple::make(1, 1, 1, empty1, empty2, empty3)));

  // box outside the intersection space in a single partition: vacuous
  auto e1 = PlanePartition::from_absolute({{0, 1, 1}}, {0, 1, 1});
  CHECK(criterion1(BoxTriple::make(1, 1, 1, e1, empty2, empty3)));

  // intersection-space box in only one partition: violation
  auto e1b = PlanePartition::from_absolute({{0, 1, 1}, {1, 1, 1}}, {0, 1, 1});
  CHECK_FALSE(criterion1(BoxTriple::make(1, 1, 1, e1b, empty2, empty3)));
}

TEST_CASE("classify empty and basepoint validation") {
  auto empty1 = PlanePartition::from_boxes({}, {0, 1, 1});
  auto empty2 = PlanePartition::from_boxes({}, {1, 0, 1});
  auto empty3 = PlanePartition::from_boxes({}, {1, 1, 0});
  BoxTyping ty = classify(BoxTriple::make(1, 1, 1, empty1, empty2, empty3));
  CHECK(ty.type2.empty());
  CHECK(ty.type3.empty());
  CHECK(weight(ty) == 0);
  CHECK(valid_assignments(ty).size() == 1);
  CHECK(contribution(ty) == 1);
  CHECK_THROWS_AS(BoxTriple::make(1, 1, 1, empty2, empty1, empty3),
                  std::invalid_argument);
}

TEST_CASE("smallest moveable class is the first worked example") {
  auto classes = enumerate_classes(1, 1, 1, 4);
  std::vector<const DoubleBoxClass*> moveable;
  for (const auto& cls : classes)
    if (!cls.moveable.empty()) moveable.push_back(&cls);
  REQUIRE(moveable.size() == 1);
  const DoubleBoxClass& ex = *moveable[0];
  CHECK(ex.weight == 4);
  CHECK(ex.typing.type2 == std::vector<Box>{{1, 1, 1}});
  CHECK(ex.typing.type3.empty());
  CHECK(ex.moveable == std::vector<Box>{{1, 1, 1}});
  CHECK(ex.components == 1);
  CHECK(ex.chi == 2);
  // representatives include one omitting eta1 and one omitting eta2
  std::set<uint8_t> missing;
  for (const auto& f : ex.assignments) missing.insert(f[0]);
  CHECK(missing == std::set<uint8_t>{1, 2, 3});
}

TEST_CASE("box component counting") {
  CHECK(box_components({}) == 0);
  CHECK(box_components({{0, 0, 0}}) == 1);
  CHECK(box_components({{0, 0, 0}, {1, 0, 0}}) == 1);
  CHECK(box_components({{0, 0, 0}, {1, 1, 0}}) == 2);  // edge contact only
  CHECK(box_components({{0, 0, 0}, {1, 1, 1}}) == 2);  // corner contact only
  CHECK(box_components({{0, 0, 0}, {1, 0, 0}, {0, 0, 2}}) == 2);
}

TEST_CASE("zdbc at the origin parameters equals M(q)^2") {
  QSeries z = zdbc(0, 0, 0, 4);
  CHECK(z == make({1, 2, 7, 18, 47}, 4));
  QSeries m = macmahon(4);
  CHECK(z == mul(m, m));
}

TEST_CASE("zdbc(1,1,1) equals M(q)^2 (1+q)") {
  QSeries z = zdbc(1, 1, 1, 3);
  CHECK(z == make({1, 3, 9, 25}, 3));
  QSeries m = macmahon(3);
  CHECK(z == mul(mul(m, m), macmahon_box(1, 1, 1, 3)));
}

TEST_CASE("zdbc degenerate family: c=0 gives M(q)^2") {
  QSeries m2 = mul(macmahon(3), macmahon(3));
  CHECK(zdbc(1, 1, 0, 3) == m2);
  CHECK(zdbc(2, 1, 0, 3) == m2);
}

TEST_CASE("zdbc symmetry under axis permutations") {
  QSeries z = zdbc(1, 1, 2, 3);
  CHECK(zdbc(1, 2, 1, 3) == z);
  CHECK(zdbc(2, 1, 1, 3) == z);
}

TEST_CASE("enumerated classes are sound") {
  for (auto [a, b, c, W] :
       std::vector<std::array<int, 4>>{{1, 1, 1, 4}, {0, 0, 0, 3}}) {
    auto classes = enumerate_classes(a, b, c, W);
    std::set<std::vector<int32_t>> keys;
    for (const auto& cls : classes) {
      CHECK(cls.weight <= W);
      CHECK(keys.insert(cls.typing.key()).second);
      CHECK(!cls.assignments.empty());
      CHECK(cls.chi == (BigInt(1) << cls.components));
      for (const auto& f : cls.assignments) {
        PlanePartition e1 = reconstruct_eta(cls.typing, f, 1);
        PlanePartition e2 = reconstruct_eta(cls.typing, f, 2);
        PlanePartition e3 = reconstruct_eta(cls.typing, f, 3);
        BoxTriple t = BoxTriple::make(a, b, c, e1, e2, e3);
        CHECK(criterion1(t));
        BoxTyping again = classify(t);
        CHECK(again == cls.typing);
        // weight is well-defined across representatives
        int eint = (int)(cls.typing.type2.size() + cls.typing.type3.size());
        CHECK(e1.volume() + e2.volume() + e3.volume() - eint == cls.weight);
      }
    }
  }
}

TEST_CASE("a two-component moveable class exists at the origin parameters") {
  auto classes = enumerate_classes(0, 0, 0, 4);
  bool found_chi4 = false;
  for (const auto& cls : classes)
    if (cls.chi == 4) {
      found_chi4 = true;
      CHECK(cls.components == 2);
      CHECK(cls.moveable.size() >= 2);
    }
  CHECK(found_chi4);
}

TEST_CASE("parallel enumeration agrees with serial") {
  auto serial = enumerate_classes(1, 1, 1, 4, 1);
  auto parallel = enumerate_classes(1, 1, 1, 4, 4);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].typing == parallel[i].typing);
    CHECK(serial[i].chi == parallel[i].chi);
  }
  CHECK(zdbc(1, 1, 2, 3, 1) == zdbc(1, 1, 2, 3, 4));
}

TEST_CASE("class json dump") {
  auto classes = enumerate_classes(1, 1, 1, 4);
  REQUIRE(!classes.empty());
  std::string j = classes.back().to_json();
  CHECK(j.find("\"weight\"") != std::string::npos);
  CHECK(j.find("\"chi\"") != std::string::npos);
}
