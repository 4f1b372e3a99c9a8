#include "jumppath/genfunc.hpp"

#include <string>
#include <utility>
#include <vector>

#include "jumppath/lattice.hpp"
#include "jumppath/pathcount.hpp"

namespace jumppath {

GenFunResult path_length_poly(std::uint32_t p, std::uint32_t q) {
  const std::uint32_t lo = std::min(p, q);
  const std::uint32_t hi = std::max(p, q);
  std::vector<Count> inner(hi + 1);
  for (std::uint32_t k = 0; k <= hi; ++k) inner[k] = binom(hi, k) * binom(lo + k, k);
  return {p, q, Polynomial::one_plus_x_pow(lo) * Polynomial(std::move(inner))};
}

GenFunResult path_length_poly_direct(std::uint32_t p, std::uint32_t q) {
  const std::uint64_t top = static_cast<std::uint64_t>(p) + q;
  std::vector<Count> c(top + 1);
  for (std::uint64_t k = 0; k <= top; ++k) c[k] = unrestricted_count(p, q, k);
  return {p, q, Polynomial(std::move(c))};
}

namespace {

// Runs x_i = (A_i x_{i-1} - B_i x_{i-2}) / i from two seeds.
template <typename Step>
Polynomial three_term(std::uint32_t i, const Polynomial& first, const Polynomial& second,
                      Step step) {
  if (i == 0) return first;
  Polynomial prev2 = first;
  Polynomial prev1 = second;
  for (std::uint32_t j = 2; j <= i; ++j) {
    Polynomial next = step(j, prev1, prev2).exact_divided(Count(j));
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

}  // namespace

Polynomial legendre_coeff_poly(std::uint32_t i) {
  const Polynomial one_plus_2z{1, 2};
  return three_term(i, Polynomial{1}, one_plus_2z,
                    [&](std::uint32_t j, const Polynomial& a1, const Polynomial& a2) {
                      return one_plus_2z * a1 * Count(2 * j - 1) - a2 * Count(j - 1);
                    });
}

Polynomial legendre_coeff_poly_explicit(std::uint32_t n) {
  std::vector<Count> c(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k) c[k] = binom(n, k) * binom(n + k, k);
  return Polynomial(std::move(c));
}

Polynomial b_poly(std::uint32_t i) {
  const Polynomial mid = Polynomial{1, 2} * Polynomial{1, 1};
  const Polynomial sq = Polynomial::one_plus_x_pow(2);
  return three_term(i, Polynomial{1}, Polynomial{1, 3, 2},
                    [&](std::uint32_t j, const Polynomial& b1, const Polynomial& b2) {
                      return mid * b1 * Count(2 * j - 1) - sq * b2 * Count(j - 1);
                    });
}

Count trivariate_coeff(std::uint32_t p, std::uint32_t q, std::uint64_t n) {
  if (static_cast<std::uint64_t>(p) + q > kMaxTrivariateDegree) {
    throw GuardError("trivariate-truncation", "p + q = " + std::to_string(p + q) + " exceeds " +
                                                  std::to_string(kMaxTrivariateDegree));
  }
  // series[a][b] is the z-polynomial coefficient of x^a y^b. The map
  // B -> 1 + (1+z)(x + y - xy) B only feeds total degree a+b from lower total
  // degrees, so iterating it to its fixed point settles one anti-diagonal per
  // pass; sweeping the anti-diagonals in order performs exactly those passes.
  const Polynomial one_plus_z{1, 1};
  std::vector<std::vector<Polynomial>> series(p + 1, std::vector<Polynomial>(q + 1));
  for (std::uint32_t total = 0; total <= p + q; ++total) {
    for (std::uint32_t a = 0; a <= std::min(total, p); ++a) {
      const std::uint32_t b = total - a;
      if (b > q) continue;
      Polynomial shifted;
      if (a > 0) shifted += series[a - 1][b];
      if (b > 0) shifted += series[a][b - 1];
      if (a > 0 && b > 0) shifted -= series[a - 1][b - 1];
      Polynomial cell = one_plus_z * shifted;
      if (total == 0) cell += Polynomial{1};
      series[a][b] = std::move(cell);
    }
  }
  return series[p][q].coefficient(n);
}

}  // namespace jumppath
