#include <doctest.h>

#include <cmath>

#include "jumppath/cltlab.hpp"
#include "jumppath/genfunc.hpp"
#include "jumppath/lattice.hpp"

using namespace jumppath;

namespace {

Ratio sum(const std::vector<Ratio>& v) {
  Ratio s = 0;
  for (const auto& x : v) s += x;
  return s;
}

std::vector<Ratio> ratios(std::initializer_list<std::pair<long, long>> fr) {
  std::vector<Ratio> out;
  for (auto [n, d] : fr) {
    Ratio r(n, d);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("exact_distribution examples") {
  const auto d11 = exact_distribution(1, 1);
  CHECK(d11.probs == ratios({{1, 6}, {1, 2}, {1, 3}}));
  CHECK(d11.mean_exact == Ratio(7, 6));
  const auto d00 = exact_distribution(0, 0);
  CHECK(d00.probs == ratios({{1, 1}}));
  CHECK(d00.mean_exact == 0);
  CHECK(d00.var_exact == 0);
  const auto d22 = exact_distribution(2, 2);
  CHECK(d22.probs == ratios({{1, 52}, {2, 13}, {19, 52}, {9, 26}, {3, 26}}));
  CHECK(d22.mean_exact == Ratio(31, 13));
}

TEST_CASE("moments agree with the generating function") {
  for (std::uint32_t p = 0; p <= 6; ++p)
    for (std::uint32_t q = 0; q <= 6; ++q) {
      const Polynomial f = path_length_poly(p, q).poly;
      const Ratio total(f.coefficient_sum());
      const Ratio mean = evaluate(derivative(f), Ratio(1)) / total;
      const Ratio second = evaluate(derivative(derivative(f)), Ratio(1)) / total;
      const auto d = exact_distribution(p, q);
      REQUIRE(d.mean_exact == mean);
      REQUIRE(d.var_exact == second + mean - mean * mean);
    }
}

TEST_CASE("normalization, convolution and additivity") {
  for (std::uint32_t p = 0; p <= 60; p += 5)
    for (std::uint32_t q = 0; q <= 60; q += 6) {
      const auto d = exact_distribution(p, q);
      REQUIRE(sum(d.probs) == 1);
      const auto laws = component_distributions(p, q);
      REQUIRE(sum(laws.law_a) == 1);
      REQUIRE(sum(laws.law_b) == 1);
      REQUIRE(convolve(laws.law_a, laws.law_b) == d.probs);
      REQUIRE(law_mean(laws.law_a) + law_mean(laws.law_b) == d.mean_exact);
      REQUIRE(law_variance(laws.law_a) + law_variance(laws.law_b) == d.var_exact);
    }
}

TEST_CASE("component laws examples") {
  const auto l = component_distributions(1, 1);
  CHECK(l.law_a == ratios({{1, 2}, {1, 2}}));
  CHECK(l.law_b == ratios({{1, 3}, {2, 3}}));
  CHECK(convolve(l.law_a, l.law_b) == ratios({{1, 6}, {1, 2}, {1, 3}}));
}

TEST_CASE("distribution size guard") {
  CHECK_THROWS_AS(exact_distribution(1001, 1000), GuardError);
}

TEST_CASE("asymptotic parameters") {
  CHECK(asymp_mean(1, 1) == doctest::Approx((2 + std::sqrt(8.0)) / 4).epsilon(1e-14));
  CHECK(asymp_mean(1, 1) == doctest::Approx(1.207106781).epsilon(1e-9));
  CHECK(asymp_var(1, 1) == doctest::Approx(0.426776695).epsilon(1e-9));
  for (std::uint32_t n : {3u, 10u, 77u})
    CHECK(asymp_mean(n, n) == doctest::Approx(n * (1 + std::sqrt(2.0)) / 2).epsilon(1e-14));
  CHECK_THROWS_AS(asymp_mean(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(asymp_var(0, 0), std::invalid_argument);
  CHECK(a_param(1) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
  CHECK(chi_param(1) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(chi_param(0.5), std::invalid_argument);
  CHECK_THROWS_AS(a_param(0.99), std::invalid_argument);
  for (double c : {1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, 37.5})
    CHECK(std::abs(chi_variance_consistency(c) - 1) < 1e-12);
}

TEST_CASE("variance of B along the ray matches p / (2 chi)") {
  const std::uint32_t p = 400;
  for (std::uint32_t mult : {1u, 2u, 3u}) {
    const auto laws = component_distributions(p, mult * p);
    const double var_b = law_variance(laws.law_b).get_d();
    CHECK(var_b / (p / (2 * chi_param(mult))) == doctest::Approx(1).epsilon(0.02));
  }
}

TEST_CASE("ratio expansion") {
  CHECK(ratio_expansion_check(100, 100, 100).exact_ratio == 0.0);
  CHECK_THROWS_AS(ratio_expansion_check(5, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(ratio_expansion_check(5, 5, 6), std::invalid_argument);
  CHECK_THROWS_AS(ratio_expansion_check(0, 5, 1), std::invalid_argument);
  double prev_gap = 1e9;
  for (std::uint32_t n : {100u, 400u}) {
    const auto k0 = static_cast<std::uint32_t>(std::lround(a_param(1) * n));
    const auto r = ratio_expansion_check(n, n, k0);
    CHECK(std::abs(r.exact_ratio - r.first_order) < prev_gap);
    CHECK(std::abs(r.exact_ratio - 1) < 2 / std::sqrt(double(n)));
    prev_gap = std::abs(r.exact_ratio - r.first_order);
  }
  for (std::uint32_t n : {10u, 60u, 200u}) {
    double prev = 1e300;
    for (std::uint32_t k = 1; k < n; ++k) {
      const double r = ratio_expansion_check(n, n, k).exact_ratio;
      REQUIRE(r < prev);
      prev = r;
    }
  }
  CHECK(ratio_slope(1) == doctest::Approx(8 * std::sqrt(8.0) / 4).epsilon(1e-14));
}

TEST_CASE("tail mass") {
  const std::uint32_t ns[] = {25, 50, 100, 200, 400};
  const double frozen[] = {5.41928e-4, 2.99647e-4, 1.20448e-4, 5.33521e-5, 1.443274e-5};
  double prev = 1;
  for (int i = 0; i < 5; ++i) {
    const double t = tail_mass(ns[i], ns[i], 0.1);
    CHECK(t == doctest::Approx(frozen[i]).epsilon(1e-4));
    CHECK(t < prev);
    prev = t;
  }
  CHECK(tail_mass(50, 50, 2.0) == 0.0);
}

TEST_CASE("curvature check") {
  const auto c = curvature_check(400, 1);
  CHECK(c.predicted == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(c.numeric / c.predicted == doctest::Approx(1).epsilon(0.05));
  CHECK(c.k0 == 283);
  const auto c100 = curvature_check(100, 1);
  const double ratio = std::abs(c100.first_difference / c.first_difference);
  CHECK(ratio >= 1.4);
  CHECK(ratio <= 2.6);
  CHECK_THROWS_AS(curvature_check(10, 1), std::invalid_argument);
  CHECK_THROWS_AS(curvature_check(100, 1.005), std::invalid_argument);
}

TEST_CASE("ks distance") {
  CHECK_THROWS_AS(ks_distance(0, 0), std::invalid_argument);
  const std::uint32_t ns[] = {25, 50, 100, 200, 400};
  const double frozen[] = {2.16418e-3, 1.51005e-3, 1.05368e-3, 7.47466e-4, 5.270509e-4};
  double prev = 1;
  for (int i = 0; i < 5; ++i) {
    const double k = ks_distance(ns[i], ns[i]);
    CHECK(k == doctest::Approx(frozen[i]).epsilon(1e-4));
    CHECK(k < prev);
    prev = k;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("convergence report") {
  CHECK(convergence_report(1, {}).empty());
  const auto rows = convergence_report(1, {25, 50});
  REQUIRE(rows.size() == 2);
  auto rel = [](const ReportRow& r) {
    return std::abs(r.mean_exact.get_d() - r.mean_asymp) / r.mean_asymp;
  };
  CHECK(rel(rows[1]) < rel(rows[0]));
  const auto c2 = convergence_report(2, {30});
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].p == 30);
  CHECK(c2[0].q == 60);
  CHECK(c2[0].mean_exact == exact_distribution(30, 60).mean_exact);
  CHECK_THROWS_AS(convergence_report(1.5, {25}), std::invalid_argument);

  const auto serial = convergence_report(1, {50, 25, 100}, 1);
  const auto threaded = convergence_report(1, {50, 25, 100}, 3);
  REQUIRE(serial.size() == 3);
  CHECK(serial[0].n == 50);
  CHECK(serial[1].n == 25);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(serial[i].mean_exact == threaded[i].mean_exact);
    CHECK(serial[i].var_exact == threaded[i].var_exact);
    CHECK(serial[i].ks == threaded[i].ks);
    CHECK(serial[i].tail_mass == threaded[i].tail_mass);
  }
}
