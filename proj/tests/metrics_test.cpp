#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "setlines/curve_order.hpp"
#include "setlines/metrics.hpp"
#include "test_util.hpp"

using namespace setlines;

namespace {

// Definitional quadratic counters, kept independent of the library path.
long long quadratic_crossings(const CurveLayout& l) {
  const int n = l.columns();
  const int m = l.curves();
  long long total = 0;
  auto count = [&](int p, int q) {
    long long c = 0;
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        if ((l.positions[p][x] < l.positions[p][y]) !=
            (l.positions[q][x] < l.positions[q][y])) {
          ++c;
        }
      }
    }
    return c;
  };
  for (int p = 0; p + 1 < n; ++p) total += count(p, p + 1);
  if (l.element_order.mode == Mode::Cycle && n >= 2) total += count(n - 1, 0);
  return total;
}

long long definitional_turns(const CurveLayout& l) {
  const int n = l.columns();
  long long total = 0;
  auto count = [&](int p, int q) {
    long long c = 0;
    for (int s = 0; s < l.curves(); ++s) {
      c += l.positions[p][s] != l.positions[q][s];
    }
    return c;
  };
  for (int p = 0; p + 1 < n; ++p) total += count(p, p + 1);
  if (l.element_order.mode == Mode::Cycle && n >= 2) total += count(n - 1, 0);
  return total;
}

}  // namespace

TEST_CASE("crossings on pinned layouts") {
  CurveLayout l;
  l.element_order = testutil::identity_order(2);
  SUBCASE("single curve") {
    l.positions = {{1}, {1}};
    CHECK(crossings(l) == 0);
  }
  SUBCASE("one swap, one crossing") {
    l.positions = {{1, 2}, {2, 1}};
    CHECK(crossings(l) == 1);
    CHECK(turns(l) == 2);
    CHECK(wiggle(l) == 2);
  }
  SUBCASE("full reversal of three curves") {
    l.positions = {{1, 2, 3}, {3, 2, 1}};
    CHECK(crossings(l) == 3);
    CHECK(wiggle(l) == 4);  // strictly below 2x crossings
  }
  SUBCASE("constant positions") {
    l.positions = {{2, 1, 3}, {2, 1, 3}};
    CHECK(crossings(l) == 0);
    CHECK(turns(l) == 0);
    CHECK(wiggle(l) == 0);
  }
}

TEST_CASE("metrics match their quadratic definitions") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(gen() % 8);
    const int n = 1 + static_cast<int>(gen() % 7);
    const Mode mode = (gen() & 1) ? Mode::Cycle : Mode::Path;
    CurveLayout l = testutil::random_layout(m, n, mode, gen);
    CHECK(crossings(l) == quadratic_crossings(l));
    CHECK(turns(l) == definitional_turns(l));
  }
}

TEST_CASE("cycle mode counts the wrap-around pair") {
  CurveLayout l;
  l.element_order = testutil::identity_order(3, Mode::Cycle);
  l.positions = {{1, 2}, {1, 2}, {2, 1}};
  CHECK(crossings(l) == 2);  // between columns 1-2 and the seam 2-0
  CHECK(turns(l) == 4);
  CHECK(wiggle(l) == 4);
  l.element_order.mode = Mode::Path;
  CHECK(crossings(l) == 1);
  CHECK(turns(l) == 2);
  CHECK(wiggle(l) == 2);
}

TEST_CASE("metrics are invariant under flipping the vertical axis") {
  std::mt19937_64 gen(32);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(gen() % 6);
    const int n = 2 + static_cast<int>(gen() % 6);
    const Mode mode = (gen() & 1) ? Mode::Cycle : Mode::Path;
    CurveLayout l = testutil::random_layout(m, n, mode, gen);
    CurveLayout flipped = l;
    for (auto& col : flipped.positions) {
      for (int& s : col) s = m + 1 - s;
    }
    CHECK(crossings(l) == crossings(flipped));
    CHECK(turns(l) == turns(flipped));
    CHECK(wiggle(l) == wiggle(flipped));
  }
}

TEST_CASE("wiggle never exceeds twice the crossings") {
  std::mt19937_64 gen(33);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(gen() % 7);
    const int n = 2 + static_cast<int>(gen() % 6);
    const Mode mode = (gen() & 1) ? Mode::Cycle : Mode::Path;
    CurveLayout l = testutil::random_layout(m, n, mode, gen);
    CHECK(wiggle(l) <= 2 * crossings(l));
  }
}

TEST_CASE("turns are bounded by crossings plus bin changes") {
  std::mt19937_64 gen(34);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(gen() % 5);
    const int n = 2 + static_cast<int>(gen() % 5);
    BinMatrix b = testutil::random_bins(m, n, 3, gen);
    ElementOrder pi = testutil::random_order(n, Mode::Path, gen);
    CurveLayout l = order_curves(b, pi);
    long long bin_changes = 0;
    for (int s = 0; s < m; ++s) {
      for (int p = 0; p + 1 < n; ++p) {
        bin_changes += b.at(s, pi.pi[p]) != b.at(s, pi.pi[p + 1]);
      }
    }
    CHECK(turns(l) <= 2 * crossings(l) + bin_changes);
  }
}

TEST_CASE("oracle handles pinned instances") {
  SUBCASE("single curve") {
    BinMatrix b(1, 3, 3);
    b.bins = {1, 3, 2};
    CHECK(min_crossings_oracle(b, testutil::identity_order(3)) == 0);
  }
  SUBCASE("forced inversion") {
    BinMatrix b(2, 2, 2);
    b.bins = {1, 2, 2, 1};
    CHECK(min_crossings_oracle(b, testutil::identity_order(2)) == 1);
  }
  SUBCASE("ties allow zero") {
    BinMatrix b(2, 2, 2);
    b.bins = {1, 1, 1, 1};
    CHECK(min_crossings_oracle(b, testutil::identity_order(2)) == 0);
  }
}

TEST_CASE("oracle refuses oversized instances") {
  BinMatrix wide(2, kOracleMaxElements + 1, 2);
  CHECK_THROWS_AS(
      min_crossings_oracle(wide, testutil::identity_order(wide.cols)),
      CapacityError);
  BinMatrix tall(kOracleMaxCurves + 1, 2, 2);
  CHECK_THROWS_AS(min_crossings_oracle(tall, testutil::identity_order(2)),
                  CapacityError);
}

TEST_CASE("compute_metrics bundles the counters") {
  CurveLayout l;
  l.element_order = testutil::identity_order(2);
  l.positions = {{1, 2}, {2, 1}};
  LayoutMetrics m = compute_metrics(l, 12.5);
  CHECK(m.crossings == 1);
  CHECK(m.turns == 2);
  CHECK(m.wiggle == 2);
  CHECK(m.runtime_ms == 12.5);
}
