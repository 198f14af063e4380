#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "setlines/set_system.hpp"
#include "test_util.hpp"

using namespace setlines;

namespace {

UncertaintyLevels five_levels() {
  return UncertaintyLevels({0.0, 0.25, 0.5, 0.75, 1.0});
}

UncertainSetSystem tiny_system(std::vector<double> beta_values, int m, int n) {
  RealMatrix beta(m, n);
  beta.v = std::move(beta_values);
  std::vector<std::string> elements, sets;
  for (int j = 0; j < n; ++j) elements.push_back("e" + std::to_string(j));
  for (int i = 0; i < m; ++i) sets.push_back("s" + std::to_string(i));
  return UncertainSetSystem(elements, sets, five_levels(), beta);
}

}  // namespace

TEST_CASE("level sets validate their invariants") {
  CHECK_THROWS_AS(UncertaintyLevels({0.0}), InputError);
  CHECK_THROWS_AS(UncertaintyLevels({0.0, 0.5, 0.5, 1.0}), InputError);
  CHECK_THROWS_AS(UncertaintyLevels({0.1, 1.0}), InputError);
  CHECK_THROWS_AS(UncertaintyLevels({0.0, 0.9}), InputError);
  CHECK(five_levels().count() == 5);
}

TEST_CASE("bin_from_beta maps levels to bins") {
  auto system = tiny_system({0.0, 1.0, 0.5, 0.25}, 2, 2);
  BinMatrix b = bin_from_beta(system);
  CHECK(b.at(0, 0) == 1);  // certainty 0 -> lowest bin
  CHECK(b.at(0, 1) == 5);  // certainty 1 -> top bin
  CHECK(b.at(1, 0) == 3);
  CHECK(b.at(1, 1) == 2);
}

TEST_CASE("bin_from_beta rejects values off the level set") {
  CHECK_THROWS_AS(tiny_system({0.0, 0.3, 0.5, 0.25}, 2, 2), InputError);
}

TEST_CASE("bins and levels are in bijection per cell") {
  auto levels = five_levels();
  for (int p = 1; p <= levels.count(); ++p) {
    CHECK(levels.find(levels.value(p)) == p);
  }
}

TEST_CASE("bin_from_raw uses half-open intervals closed at 1") {
  const std::vector<double> bounds{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  RealMatrix raw(1, 5);
  raw.v = {0.35, 0.0, 1.0, 0.2, 0.799};
  BinMatrix b = bin_from_raw(raw, bounds);
  CHECK(b.at(0, 0) == 2);
  CHECK(b.at(0, 1) == 1);
  CHECK(b.at(0, 2) == 5);
  CHECK(b.at(0, 3) == 2);  // boundary value falls in the upper bin
  CHECK(b.at(0, 4) == 4);
}

TEST_CASE("bin_from_raw rejects bad input") {
  RealMatrix raw(1, 1);
  raw.v = {1.2};
  CHECK_THROWS_AS(bin_from_raw(raw, {0.0, 0.5, 1.0}), InputError);
  raw.v = {0.5};
  CHECK_THROWS_AS(bin_from_raw(raw, {0.0, 0.5, 0.4, 1.0}), InputError);
  CHECK_THROWS_AS(bin_from_raw(raw, {0.1, 0.5, 1.0}), InputError);
}

TEST_CASE("bin_from_raw is monotone") {
  const std::vector<double> bounds{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = (gen() >> 11) * (1.0 / 9007199254740992.0);
    const double b = (gen() >> 11) * (1.0 / 9007199254740992.0);
    RealMatrix raw(1, 2);
    raw.v = {std::min(a, b), std::max(a, b)};
    BinMatrix bins = bin_from_raw(raw, bounds);
    CHECK(bins.at(0, 0) <= bins.at(0, 1));
  }
}

TEST_CASE("is_uncertain_subset is componentwise") {
  BinMatrix b(2, 3, 3);
  b.bins = {1, 2, 3, 2, 2, 3};
  CHECK(is_uncertain_subset(b, 0, 1));
  CHECK_FALSE(is_uncertain_subset(b, 1, 0));
  CHECK(is_uncertain_subset(b, 0, 0));  // reflexive
}

TEST_CASE("is_uncertain_subset is reflexive and transitive") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    BinMatrix b = testutil::random_bins(4, 5, 3, gen);
    for (int s = 0; s < 4; ++s) CHECK(is_uncertain_subset(b, s, s));
    for (int s = 0; s < 4; ++s) {
      for (int t = 0; t < 4; ++t) {
        for (int u = 0; u < 4; ++u) {
          if (is_uncertain_subset(b, s, t) && is_uncertain_subset(b, t, u)) {
            CHECK(is_uncertain_subset(b, s, u));
          }
        }
      }
    }
  }
}

TEST_CASE("kernelize collapses duplicate rows") {
  SUBCASE("all distinct") {
    BinMatrix b(3, 2, 3);
    b.bins = {1, 1, 1, 2, 2, 1};
    KernelGroups g = kernelize(b);
    CHECK(g.representatives == std::vector<int>{0, 1, 2});
    for (const auto& mem : g.members) CHECK(mem.empty());
  }
  SUBCASE("two identical rows") {
    // Rows 1 and 4 share a bin vector: 1 represents, 4 is its member.
    BinMatrix b(5, 2, 3);
    b.bins = {1, 1, 2, 3, 1, 2, 3, 3, 2, 3};
    KernelGroups g = kernelize(b);
    CHECK(g.representatives == std::vector<int>{0, 1, 2, 3});
    CHECK(g.members[1] == std::vector<int>{4});
  }
  SUBCASE("rows (1,1),(1,1),(2,1)") {
    BinMatrix b(3, 2, 2);
    b.bins = {1, 1, 1, 1, 2, 1};
    KernelGroups g = kernelize(b);
    REQUIRE(g.representatives == std::vector<int>{0, 2});
    CHECK(g.members[0] == std::vector<int>{1});
    CHECK(g.members[1].empty());
  }
}

TEST_CASE("kernel groups partition the curves") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + static_cast<int>(gen() % 7);
    BinMatrix b = testutil::random_bins(m, 3, 2, gen);  // few bins: duplicates likely
    KernelGroups g = kernelize(b);
    std::vector<int> all;
    for (size_t i = 0; i < g.representatives.size(); ++i) {
      all.push_back(g.representatives[i]);
      for (int mem : g.members[i]) {
        all.push_back(mem);
        CHECK(b.row(mem) == b.row(g.representatives[i]));
      }
    }
    std::sort(all.begin(), all.end());
    std::vector<int> expect(m);
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(all == expect);
    // Representatives carry pairwise distinct rows (brute-force check).
    for (size_t i = 0; i < g.representatives.size(); ++i) {
      for (size_t j = i + 1; j < g.representatives.size(); ++j) {
        CHECK(b.row(g.representatives[i]) != b.row(g.representatives[j]));
      }
    }
  }
}

TEST_CASE("append_dummy adds an all-bin-1 column") {
  BinMatrix b(2, 3, 4);
  b.bins = {1, 2, 3, 4, 3, 2};
  BinMatrix d = append_dummy(b);
  CHECK(d.cols == 4);
  CHECK(d.rows == 2);
  CHECK(d.at(0, 3) == 1);
  CHECK(d.at(1, 3) == 1);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 3; ++c) CHECK(d.at(r, c) == b.at(r, c));
  }
}
