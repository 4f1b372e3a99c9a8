#pragma once

// Path-length generating functions F_{p,q}(x) = sum_k u((p,q),k) x^k and the
// diagonal machinery around them.

#include <cstdint>

#include "jumppath/exactmath.hpp"

namespace jumppath {

struct GenFunResult {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  Polynomial poly;
};

/// Product form: for p <= q,
///   F_{p,q}(x) = (1+x)^p * sum_k C(q,k) C(p+k,k) x^k.
/// Arguments are swapped when p > q (F is symmetric in p and q).
GenFunResult path_length_poly(std::uint32_t p, std::uint32_t q);

/// Coefficient-by-coefficient from the closed form for u((p,q),k).
GenFunResult path_length_poly_direct(std::uint32_t p, std::uint32_t q);

/// a_i(z) from the three-term recurrence
///   a_0 = 1, a_1 = 1 + 2z,
///   a_i = ((2i-1)(1+2z) a_{i-1} - (i-1) a_{i-2}) / i,
/// i.e. the shifted Legendre polynomial P_i(2z+1). The division is checked.
Polynomial legendre_coeff_poly(std::uint32_t i);

/// sum_k C(n,k) C(n+k,k) z^k, the explicit form of a_n.
Polynomial legendre_coeff_poly_explicit(std::uint32_t n);

/// b_i(z), the diagonal coefficients of B(x,x,z), from
///   b_0 = 1, b_1 = 1 + 3z + 2z^2,
///   b_i = ((2i-1)(1+2z)(1+z) b_{i-1} - (1+z)^2 (i-1) b_{i-2}) / i.
Polynomial b_poly(std::uint32_t i);

/// Series truncation guard for trivariate_coeff ("trivariate-truncation").
inline constexpr std::uint32_t kMaxTrivariateDegree = 60;

/// [x^p y^q z^n] of B(x,y,z) = 1 / (1 - (1+z)(x+y-xy)), obtained by solving
/// B = 1 + (1+z)(x+y-xy) B on the series truncated to x-degree <= p and
/// y-degree <= q. Requires p + q <= kMaxTrivariateDegree.
Count trivariate_coeff(std::uint32_t p, std::uint32_t q, std::uint64_t n);

}  // namespace jumppath
