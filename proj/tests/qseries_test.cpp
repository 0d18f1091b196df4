#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "dbc/planepart.hpp"
#include "dbc/qseries.hpp"

using namespace dbc;

namespace {

QSeries make(std::vector<long long> v, int n) {
  std::vector<BigInt> c(v.begin(), v.end());
  return QSeries(std::move(c), n);
}

// tiny deterministic generator for property tests
struct Rng {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  int next(int lo, int hi) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return lo + (int)(s % (uint64_t)(hi - lo + 1));
  }
};

QSeries random_series(Rng& rng, int n) {
  std::vector<BigInt> c(n + 1);
  for (auto& x : c) x = rng.next(-5, 5);
  return QSeries(std::move(c), n);
}

// Oracle: plane partition counts per volume by exhaustive generation.
std::vector<long long> pp_counts(int maxvol) {
  std::vector<long long> counts(maxvol + 1, 0);
  for (const auto& pp : enumerate_by_volume(maxvol)) ++counts[pp.volume()];
  return counts;
}

}  // namespace

TEST_CASE("add basics") {
  CHECK(add(make({1, 1}, 1), make({0, 2}, 1)) == make({1, 3}, 1));
  QSeries f = make({3, -1, 4}, 2);
  CHECK(add(f, QSeries(2)) == f);
  QSeries m = macmahon(2);
  std::vector<BigInt> neg;
  for (auto& c : m.coeffs()) neg.push_back(-c);
  CHECK(add(m, QSeries(std::move(neg), 2)) == QSeries(2));
  CHECK_THROWS_AS(add(make({1}, 0), make({1, 1}, 1)), std::invalid_argument);
}

TEST_CASE("mul basics") {
  CHECK(mul(make({1, 1}, 2), make({1, 1}, 2)) == make({1, 2, 1}, 2));
  QSeries f = make({2, 0, -3, 5}, 3);
  CHECK(mul(f, QSeries::one(3)) == f);
  QSeries m111 = macmahon_box(1, 1, 1, 2);
  CHECK(m111 == make({1, 1, 0}, 2));
  CHECK(mul(m111, m111) == make({1, 2, 1}, 2));
  CHECK_THROWS_AS(mul(make({1}, 0), make({1, 1}, 1)), std::invalid_argument);
}

TEST_CASE("inverse basics") {
  CHECK(inverse(make({1, -1}, 3)) == make({1, 1, 1, 1}, 3));
  CHECK(inverse(QSeries::one(4)) == QSeries::one(4));
  QSeries m = macmahon(4);
  CHECK(mul(inverse(m), m) == QSeries::one(4));
  CHECK_THROWS_AS(inverse(make({2, 1}, 1)), std::invalid_argument);
  CHECK_THROWS_AS(inverse(make({0, 1}, 1)), std::invalid_argument);
}

TEST_CASE("ring laws on random series") {
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.next(0, 8);
    QSeries f = random_series(rng, n), g = random_series(rng, n),
            h = random_series(rng, n);
    CHECK(add(f, g) == add(g, f));
    CHECK(mul(f, g) == mul(g, f));
    CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
    CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
  }
}

TEST_CASE("inverse is two-sided for unit series") {
  Rng rng;
  for (int trial = 0; trial < 25; ++trial) {
    int n = rng.next(0, 8);
    QSeries f = random_series(rng, n);
    std::vector<BigInt> c = f.coeffs();
    c[0] = (trial % 2) ? 1 : -1;
    f = QSeries(std::move(c), n);
    QSeries g = inverse(f);
    CHECK(mul(f, g) == QSeries::one(n));
    CHECK(mul(g, f) == QSeries::one(n));
  }
}

TEST_CASE("macmahon against the plane partition enumeration oracle") {
  auto counts = pp_counts(10);
  QSeries m = macmahon(10);
  for (int k = 0; k <= 10; ++k) CHECK(m.coeff(k) == counts[k]);
  CHECK(macmahon(0) == QSeries::one(0));
  CHECK(macmahon(2) == make({1, 1, 3}, 2));
  CHECK(macmahon(6) == make({1, 1, 3, 6, 13, 24, 48}, 6));
}

TEST_CASE("macmahon_box against the boxed enumeration oracle") {
  CHECK(macmahon_box(1, 1, 1, 3) == make({1, 1, 0, 0}, 3));
  CHECK(macmahon_box(0, 3, 2, 5) == QSeries::one(5));
  CHECK(macmahon_box(1, 1, 2, 4) == make({1, 1, 1, 0, 0}, 4));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        int N = a * b * c;
        std::vector<BigInt> counts(N + 1, BigInt(0));
        auto boxed = enumerate_boxed(a, b, c);
        for (const auto& pp : boxed) counts[pp.volume()] += 1;
        QSeries oracle(std::move(counts), N);
        QSeries fast = macmahon_box(a, b, c, N);
        CHECK(fast == oracle);
        CHECK(fast.eval_at_one() == (long long)boxed.size());
      }
}

TEST_CASE("macmahon_box symmetric under axis permutations") {
  const int N = 12;
  int dims[3] = {2, 3, 4};
  QSeries base = macmahon_box(2, 3, 4, N);
  std::sort(dims, dims + 3);
  do {
    CHECK(macmahon_box(dims[0], dims[1], dims[2], N) == base);
  } while (std::next_permutation(dims, dims + 3));
}

TEST_CASE("json round trip with arbitrary precision") {
  QSeries m = macmahon(30);
  QSeries back = QSeries::from_json(m.to_json());
  CHECK(back == m);
  BigInt huge("123456789012345678901234567890123456789");
  QSeries h = QSeries::monomial(huge, 2, 3);
  CHECK(QSeries::from_json(h.to_json()) == h);
  CHECK(h.to_json().find("\"123456789012345678901234567890123456789\"") !=
        std::string::npos);
}
