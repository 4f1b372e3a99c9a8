#include <doctest.h>

#include <functional>

#include "jumppath/enumerate.hpp"
#include "jumppath/pathcount.hpp"

using namespace jumppath;

TEST_CASE("enumerate_unrestricted examples") {
  CHECK(enumerate_unrestricted({1, 1}).size() == 6);
  CHECK(enumerate_unrestricted({0, 0}).size() == 1);
  CHECK(enumerate_unrestricted({2, 2}).size() == 52);
  CHECK(enumerate_unrestricted({2, 2}, 1).size() == 9);
  CHECK(enumerate_unrestricted({2, 2}, 0).size() == 1);
}

TEST_CASE("enumerate_unrestricted order and rendering") {
  const auto paths = enumerate_unrestricted({1, 1});
  std::vector<std::string> text;
  for (const auto& p : paths) text.push_back(p.to_string());
  const std::vector<std::string> expected = {
      "(1,1)",       "(1,1)->(0,0)", "(1,1)->(0,1)", "(1,1)->(0,1)->(0,0)",
      "(1,1)->(1,0)", "(1,1)->(1,0)->(0,0)"};
  CHECK(text == expected);
  CHECK(std::is_sorted(paths.begin(), paths.end()));
}

TEST_CASE("enumerate_restricted examples") {
  CHECK(enumerate_restricted({1, 1}).size() == 3);
  CHECK(enumerate_restricted({0, 0}).size() == 1);
  const auto one = enumerate_restricted({1, 0});
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "(1,0)->(0,0)");
}

TEST_CASE("enumerate_simple examples") {
  const auto chains = enumerate_simple({1, 1});
  REQUIRE(chains.size() == 2);
  CHECK(chains[0].to_string() == "(1,1)");
  CHECK(chains[1].to_string() == "(1,1)->(0,0)");
  CHECK(enumerate_simple({1, 0}).size() == 1);
}

TEST_CASE("simple chain count satisfies the dominance recursion") {
  std::function<std::size_t(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t x,
                                                                      std::uint32_t y) {
    std::size_t total = 1;
    for (std::uint32_t a = 0; a < x; ++a)
      for (std::uint32_t b = 0; b < y; ++b) total += rec(a, b);
    return total;
  };
  for (std::uint32_t x = 0; x <= 4; ++x)
    for (std::uint32_t y = 0; y <= 4; ++y) REQUIRE(enumerate_simple({x, y}).size() == rec(x, y));
}

TEST_CASE("length_histogram examples") {
  using H = std::map<std::size_t, Count>;
  CHECK(length_histogram({1, 1}) == H{{0, 1}, {1, 3}, {2, 2}});
  CHECK(length_histogram({0, 0}) == H{{0, 1}});
  CHECK(length_histogram({2, 2}) == H{{0, 1}, {1, 8}, {2, 19}, {3, 18}, {4, 6}});
}

TEST_CASE("directional_counts") {
  auto t = directional_counts(1, 1, 1);
  CHECK(t.left == 1);
  CHECK(t.down == 1);
  CHECK(t.both == 1);
  t = directional_counts(0, 3, 2);
  CHECK(t.left == 0);
  CHECK(t.both == 0);
  CHECK(t.down == 3);
  t = directional_counts(2, 2, 2);
  CHECK(t.left + t.down + t.both == 19);
  CHECK_THROWS_AS(directional_counts(1, 1, 0), std::invalid_argument);
  for (std::uint32_t p = 1; p <= 4; ++p)
    for (std::uint32_t q = 1; q <= 4; ++q)
      for (std::size_t n = 1; n <= p + q; ++n) {
        t = directional_counts(p, q, n);
        REQUIRE(t.left + t.down + t.both == unrestricted_count(p, q, n));
      }
}

TEST_CASE("enumeration matches closed forms for p, q <= 5") {
  for (std::uint32_t p = 0; p <= 5; ++p) {
    for (std::uint32_t q = 0; q <= 5; ++q) {
      const auto hist = length_histogram({p, q});
      for (std::uint64_t n = 0; n <= p + q + 1; ++n) {
        const auto it = hist.find(n);
        REQUIRE((it == hist.end() ? Count(0) : it->second) == unrestricted_count(p, q, n));
      }
      std::map<std::size_t, Count> g;
      for (const auto& path : enumerate_restricted({p, q})) g[path.jumps()] += 1;
      for (std::uint64_t n = 0; n <= p + q + 1; ++n) {
        const auto it = g.find(n);
        REQUIRE((it == g.end() ? Count(0) : it->second) == restricted_count_2d(p, q, n));
      }
    }
  }
}

TEST_CASE("three-dimensional restricted enumeration") {
  for (std::uint32_t a = 0; a <= 2; ++a)
    for (std::uint32_t b = 0; b <= 2; ++b)
      for (std::uint32_t c = 0; c <= 2; ++c) {
        const LatticePoint pt{a, b, c};
        std::map<std::size_t, Count> g;
        for (const auto& path : enumerate_restricted(pt)) g[path.jumps()] += 1;
        for (std::uint64_t n = 0; n <= a + b + c + 1; ++n) {
          const auto it = g.find(n);
          REQUIRE((it == g.end() ? Count(0) : it->second) == restricted_count(pt, n));
        }
      }
}

TEST_CASE("every enumerated path is structurally valid") {
  for (const auto& path : enumerate_unrestricted({3, 2})) {
    REQUIRE(is_valid_path(path));
    REQUIRE(path.points.front() == LatticePoint({3, 2}));
  }
  for (const auto& path : enumerate_simple({3, 3})) REQUIRE(is_valid_path(path, true));
  JumpPath bad{{LatticePoint{1, 1}, LatticePoint{1, 1}}};
  CHECK_FALSE(is_valid_path(bad));
  JumpPath up{{LatticePoint{1, 0}, LatticePoint{0, 1}}};
  CHECK_FALSE(is_valid_path(up));
  JumpPath side{{LatticePoint{1, 1}, LatticePoint{0, 1}}};
  CHECK(is_valid_path(side));
  CHECK_FALSE(is_valid_path(side, true));
}

TEST_CASE("enumeration size guard") {
  try {
    enumerate_unrestricted({8, 7});
    FAIL("expected GuardError");
  } catch (const GuardError& e) {
    CHECK(e.guard() == "enumeration-size");
  }
  CHECK_THROWS_AS(enumerate_restricted({15}), GuardError);
  CHECK_THROWS_AS(enumerate_simple({10, 5}), GuardError);
}
