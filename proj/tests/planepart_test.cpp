#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dbc/hexlattice.hpp"
#include "dbc/planepart.hpp"
#include "support.hpp"

using namespace dbc;

TEST_CASE("enumerate_by_volume counts and canonical order") {
  auto only_empty = enumerate_by_volume(0);
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty[0].volume() == 0);

  auto upto2 = enumerate_by_volume(2);
  CHECK(upto2.size() == 5);  // empty, one of volume 1, three of volume 2

  auto upto6 = enumerate_by_volume(6);
  CHECK(upto6.size() == 96);  // 1+1+3+6+13+24+48

  std::set<std::vector<Box>> seen;
  for (const auto& pp : upto6) {
    CHECK(is_order_ideal(pp.boxes()));
    CHECK(seen.insert(pp.boxes()).second);  // no duplicates
  }
  for (size_t i = 1; i < upto6.size(); ++i)
    CHECK(upto6[i - 1].boxes() < upto6[i].boxes());
}

TEST_CASE("enumerate_boxed counts") {
  CHECK(enumerate_boxed(1, 1, 1).size() == 2);
  CHECK(enumerate_boxed(2, 2, 2).size() == 20);
  CHECK(enumerate_boxed(3, 3, 3).size() == 980);
  for (const auto& pp : enumerate_boxed(2, 3, 2))
    for (const Box& b : pp.boxes()) {
      CHECK(b.x < 2);
      CHECK(b.y < 3);
      CHECK(b.z < 2);
    }
}

TEST_CASE("invalid box sets rejected") {
  CHECK_THROWS_AS(PlanePartition::from_boxes({{1, 0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PlanePartition::from_boxes({{0, 0, 0}, {0, 0, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PlanePartition::from_boxes({{-1, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("heights array round trip") {
  PlanePartition pp = PlanePartition::from_heights({{3, 1}, {2, 1}});
  CHECK(pp.volume() == 7);
  CHECK(pp.to_heights() == std::vector<std::vector<int>>{{3, 1}, {2, 1}});
  CHECK(PlanePartition::from_heights(pp.to_heights()) == pp);
  CHECK(pp.height(0, 0) == 3);
  CHECK(pp.height(5, 5) == 0);
}

TEST_CASE("json round trip") {
  PlanePartition pp = PlanePartition::from_heights({{2, 1}}, {1, 2, 3});
  PlanePartition back = PlanePartition::from_json(pp.to_json());
  CHECK(back == pp);
  CHECK(back.basepoint() == Box{1, 2, 3});
}

TEST_CASE("folklore bijection on H(1)") {
  HexGraph g = HexGraph::build(1);
  auto ms = dbc::test::all_matchings(g);
  REQUIRE(ms.size() == 2);

  Matching m_empty = to_matching(PlanePartition(), g);
  CHECK(m_empty.size() == 3);
  CHECK(gauge_exponent(g, m_empty) == 0);

  PlanePartition one_box = PlanePartition::from_boxes({{0, 0, 0}});
  Matching m_box = to_matching(one_box, g);
  CHECK(gauge_exponent(g, m_box) == 1);
  CHECK(m_box != m_empty);

  CHECK(from_matching(g, m_empty) == PlanePartition());
  CHECK(from_matching(g, m_box) == one_box);
}

TEST_CASE("bijection round trip and weight transport, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    HexGraph g = HexGraph::build(n);
    Matching min_m = to_matching(PlanePartition(), g);
    int min_expo = gauge_exponent(g, min_m);
    for (const auto& pp : enumerate_boxed(n, n, n)) {
      Matching m = to_matching(pp, g);
      CHECK(is_perfect_matching(g, m));
      CHECK(from_matching(g, m) == pp);
      CHECK(gauge_exponent(g, m) - min_expo == pp.volume());
    }
  }
}

TEST_CASE("matching count equals boxed count") {
  for (int n = 1; n <= 3; ++n) {
    HexGraph g = HexGraph::build(n);
    auto ms = dbc::test::all_matchings(g);
    CHECK(ms.size() == enumerate_boxed(n, n, n).size());
    // and every matching is hit by the bijection
    std::set<Matching> from_pps;
    for (const auto& pp : enumerate_boxed(n, n, n))
      from_pps.insert(to_matching(pp, g));
    CHECK(from_pps.size() == ms.size());
  }
}

TEST_CASE("extremal matchings of H(2)") {
  HexGraph g = HexGraph::build(2);
  auto ms = dbc::test::all_matchings(g);
  REQUIRE(ms.size() == 20);
  int best = -1, worst = 1 << 20;
  Matching argbest;
  for (const auto& m : ms) {
    int e = gauge_exponent(g, m);
    best = std::max(best, e);
    worst = std::min(worst, e);
    if (e == best) argbest = m;
  }
  CHECK(worst == gauge_exponent(g, to_matching(PlanePartition(), g)));
  PlanePartition full = PlanePartition::from_heights({{2, 2}, {2, 2}});
  CHECK(to_matching(full, g) == argbest);
  CHECK(best - worst == 8);
}

TEST_CASE("to_matching rejects oversized partitions") {
  HexGraph g = HexGraph::build(1);
  PlanePartition tall = PlanePartition::from_heights({{2}});
  CHECK_THROWS_AS(to_matching(tall, g), std::invalid_argument);
}

TEST_CASE("from_matching rejects non-matchings") {
  HexGraph g = HexGraph::build(2);
  CHECK_THROWS_AS(from_matching(g, Matching{0, 1, 2}), std::invalid_argument);
}
