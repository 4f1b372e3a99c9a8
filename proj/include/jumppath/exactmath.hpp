#pragma once

// Exact integer/rational arithmetic shared by every counting module.
//
// Counts and polynomial coefficients are GMP integers; probabilities are GMP
// rationals (always canonicalized, so the denominator is positive and the
// fraction is in lowest terms).

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace jumppath {

using Count = mpz_class;
using Ratio = mpq_class;

/// Binomial coefficient C(n, k).
///
/// Zero when k < 0 or (n >= 0 and k > n). For n < 0 the usual extension
/// C(n, k) = (-1)^k C(k - n - 1, k) is applied, so C(-1, k) = (-1)^k. The
/// closed-form path counts rely on both conventions at the lattice boundary.
Count binom(std::int64_t n, std::int64_t k);

/// Divides and throws std::logic_error if the remainder is non-zero.
Count exact_divide(const Count& numerator, const Count& denominator);

/// Pascal triangle rows 0..max_n for loops that hit the same small binomials
/// millions of times. Zero outside 0 <= k <= n; rows outside [0, max_n]
/// throw std::out_of_range.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  const Count& operator()(std::int64_t n, std::int64_t k) const;

 private:
  std::vector<std::vector<Count>> rows_;
  Count zero_{0};
};

/// Dense univariate polynomial with integer coefficients; coefficient(k) is
/// the coefficient of x^k. Trailing zeros are stripped so the zero polynomial
/// has no coefficients and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Count> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Count& c);
  /// (1 + x)^n
  static Polynomial one_plus_x_pow(unsigned n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Count>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Count coefficient(std::size_t k) const;
  Count coefficient_sum() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Count& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Count& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Divides every coefficient by d; throws std::logic_error if any division
  /// leaves a remainder.
  Polynomial exact_divided(const Count& d) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Count> coeffs_;
};

Polynomial multiply(const Polynomial& a, const Polynomial& b);
Ratio evaluate(const Polynomial& p, const Ratio& at);
Count evaluate(const Polynomial& p, const Count& at);
Polynomial derivative(const Polynomial& p);

/// Decimal rendering of an exact rational with `digits` significant digits,
/// never in scientific notation and independent of the global locale.
std::string format_decimal(const Ratio& value, int digits = 12);
/// Same contract for doubles (used for asymptotic/statistical quantities).
std::string format_decimal(double value, int digits = 12);

}  // namespace jumppath
