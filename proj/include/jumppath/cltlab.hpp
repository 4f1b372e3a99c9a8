#pragma once

// Exact laws of the path length X_{p,q} of a uniformly chosen unrestricted
// path from (p, q), the asymptotic Gaussian parameters along the ray q = c p,
// and the numerical checks that tie the two together.
//
// X = A + B with A, B independent,
//   P(A = k) proportional to C(p, k),
//   P(B = k) proportional to C(q, k) C(p + k, k),
// which is the product form of the generating function read as a convolution.

#include <cstdint>
#include <vector>

#include "jumppath/exactmath.hpp"

namespace jumppath {

/// Sweep guard for exact distributions ("distribution-size").
inline constexpr std::uint64_t kMaxDistributionSum = 2000;

struct DistSummary {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::vector<Ratio> probs;  // probs[k] = P(X = k)
  Ratio mean_exact;
  Ratio var_exact;
  double mean_asymp = 0.0;
  double var_asymp = 0.0;
  double ks_distance = 0.0;
  double tail_mass = 0.0;
};

/// Fills probs, mean_exact and var_exact. Throws GuardError when p + q
/// exceeds kMaxDistributionSum.
DistSummary exact_distribution(std::uint32_t p, std::uint32_t q);

/// (p + q + sqrt(p^2 + 6pq + q^2)) / 4. Throws std::invalid_argument at (0, 0).
double asymp_mean(std::uint32_t p, std::uint32_t q);
/// (p + q)/8 + (p + q)^2 / (8 sqrt(p^2 + 6pq + q^2)). Throws at (0, 0).
double asymp_var(std::uint32_t p, std::uint32_t q);

/// Centre of B along q = c p, in units of p: (c - 1 + sqrt(c^2 + 6c + 1)) / 4.
double a_param(double c);
/// Curvature chi(c) of log P(B = k) in t = (k - a p) / sqrt(p):
/// log P(B = k) ~ -chi t^2 + const. Throws std::invalid_argument for c < 1.
double chi_param(double c);
/// 2 chi(c) ((c-1)/8 + (c+1)^2 / (8 sqrt(c^2+6c+1))); equals 1 because the
/// variance of B is p / (2 chi).
double chi_variance_consistency(double c);

struct ComponentLaws {
  std::vector<Ratio> law_a;
  std::vector<Ratio> law_b;
};
ComponentLaws component_distributions(std::uint32_t p, std::uint32_t q);

/// Exact convolution of two laws.
std::vector<Ratio> convolve(const std::vector<Ratio>& a, const std::vector<Ratio>& b);

Ratio law_mean(const std::vector<Ratio>& law);
Ratio law_variance(const std::vector<Ratio>& law);

struct RatioExpansion {
  double exact_ratio;  // P(B = k+1) / P(B = k)
  double first_order;  // 1 - c' t / sqrt(p), t = (k - a p) / sqrt(p)
};
/// Requires p >= 1 and 0 < k <= q (k = q gives ratio 0).
RatioExpansion ratio_expansion_check(std::uint32_t p, std::uint32_t q, std::uint32_t k);

/// c' = 8 sqrt(c^2+6c+1) / ((1+c)^2 + (c-1) sqrt(c^2+6c+1)).
double ratio_slope(double c);

/// P(|t| > p^exponent) under the law of B, with t = (K - a p) / sqrt(p) and
/// c = q / p. Exact rational sum, converted to double at the end.
double tail_mass(std::uint32_t p, std::uint32_t q, double exponent);

struct CurvatureCheck {
  double numeric;     // -(n/2) * second central difference of log w at k0
  double predicted;   // chi(c)
  double first_difference;  // sqrt(n) * (L(a n + 1/2) - L(a n - 1/2))
  std::uint64_t k0;
};
/// w(k) = C(q, k) C(p + k, k) with p = n, q = c n (must be integral), and
/// k0 = round(a n). The second difference is evaluated exactly on integer
/// weights; the first difference uses the log-gamma extension L of log w
/// centred on the real point a n, in t units. Requires n >= 20 and c >= 1.
CurvatureCheck curvature_check(std::uint32_t n, double c);

/// sup_k |F(k) - Phi((k + 1/2 - mean) / sd)|, standardized by the exact
/// moments. Throws std::invalid_argument for a degenerate law.
double ks_distance(const DistSummary& dist);
double ks_distance(std::uint32_t p, std::uint32_t q);

struct ReportRow {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  Ratio mean_exact;
  double mean_asymp = 0.0;
  Ratio var_exact;
  double var_asymp = 0.0;
  double ks = 0.0;
  double tail_mass = 0.0;
};

/// Tail exponent used by convergence_report.
inline constexpr double kReportTailExponent = 0.1;

/// One row per n (p = n, q = c n), in the order of n_list. Rows are computed
/// on up to `threads` worker threads. Throws std::invalid_argument when c n is
/// not an integer.
std::vector<ReportRow> convergence_report(double c, const std::vector<std::uint32_t>& n_list,
                                          unsigned threads = 1);

}  // namespace jumppath
