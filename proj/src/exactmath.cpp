#include "jumppath/exactmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace jumppath {

Count binom(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Count out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(std::min(k, n - k)));
    return out;
  }
  Count out = binom(k - n - 1, k);
  if (k % 2 != 0) out = -out;
  return out;
}

Count exact_divide(const Count& numerator, const Count& denominator) {
  if (denominator == 0) throw std::logic_error("exact_divide: division by zero");
  Count quotient;
  Count remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0) {
    throw std::logic_error("exact_divide: " + numerator.get_str() + " is not divisible by " +
                           denominator.get_str());
  }
  return quotient;
}

BinomialTable::BinomialTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("BinomialTable: max_n must be >= 0");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  rows_[0] = {Count(1)};
  for (int n = 1; n <= max_n; ++n) {
    auto& row = rows_[n];
    const auto& prev = rows_[n - 1];
    row.resize(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    row[n] = 1;
    for (int k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
  }
}

const Count& BinomialTable::operator()(std::int64_t n, std::int64_t k) const {
  if (k < 0) return zero_;
  if (n < 0 || n > max_n()) {
    throw std::out_of_range("BinomialTable: row " + std::to_string(n) + " not tabulated");
  }
  return k > n ? zero_ : rows_[n][k];
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Count> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Count& c) { return Polynomial(std::vector<Count>{c}); }

Polynomial Polynomial::one_plus_x_pow(unsigned n) {
  std::vector<Count> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = binom(n, k);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Count Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Count(0);
}

Count Polynomial::coefficient_sum() const {
  Count s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Count& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

Polynomial Polynomial::exact_divided(const Count& d) const {
  std::vector<Count> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(exact_divide(c, d));
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c == 0) continue;
    if (!s.empty()) s += (c < 0) ? " - " : " + ";
    else if (c < 0) s += "-";
    Count mag = abs(c);
    if (k == 0 || mag != 1) s += mag.get_str();
    if (k >= 1) s += var;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  std::vector<Count> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Ratio evaluate(const Polynomial& p, const Ratio& at) {
  Ratio acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * at + Ratio(*it);
  }
  acc.canonicalize();
  return acc;
}

Count evaluate(const Polynomial& p, const Count& at) {
  Count acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Count> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

Count pow10(long e) {
  Count out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return out;
}

// round(v * 10^shift) for v >= 0, halves rounded up.
Count scaled_round(const Ratio& v, long shift) {
  Count num = v.get_num();
  Count den = v.get_den();
  if (shift >= 0) num *= pow10(shift);
  else den *= pow10(-shift);
  Count twice = 2 * num + den;
  Count out;
  mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), Count(2 * den).get_mpz_t());
  return out;
}

}  // namespace

std::string format_decimal(const Ratio& value, int digits) {
  if (digits < 1) throw std::invalid_argument("format_decimal: digits must be >= 1");
  if (value == 0) return "0";
  Ratio mag = abs(value);
  const long num_digits = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10));
  const long den_digits = static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
  long shift = digits - (num_digits - den_digits);
  const Count lo = pow10(digits - 1);
  const Count hi = pow10(digits);
  Count n = scaled_round(mag, shift);
  for (int guard = 0; guard < 8 && (n < lo || n >= hi); ++guard) {
    shift += (n < lo) ? 1 : -1;
    n = scaled_round(mag, shift);
  }

  std::string body = n.get_str();
  if (shift <= 0) {
    body.append(static_cast<std::size_t>(-shift), '0');
  } else {
    if (static_cast<long>(body.size()) <= shift) {
      body.insert(0, static_cast<std::size_t>(shift - static_cast<long>(body.size()) + 1), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(shift), ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
  }
  return value < 0 ? "-" + body : body;
}

std::string format_decimal(double value, int digits) {
  if (value != value) return "nan";
  if (value == 0.0) return "0";
  if (value > 1.7e308) return "inf";
  if (value < -1.7e308) return "-inf";
  Ratio exact(value);
  return format_decimal(exact, digits);
}

}  // namespace jumppath
