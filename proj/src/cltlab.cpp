#include "jumppath/cltlab.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "jumppath/genfunc.hpp"
#include "jumppath/lattice.hpp"

namespace jumppath {

namespace {

double discriminant_root(double p, double q) { return std::sqrt(p * p + 6.0 * p * q + q * q); }

void require_nondegenerate(std::uint32_t p, std::uint32_t q, const char* what) {
  if (p == 0 && q == 0) {
    throw std::invalid_argument(std::string(what) + ": undefined at (p, q) = (0, 0)");
  }
}

void require_ray(double c, const char* what) {
  if (!(c >= 1.0)) throw std::invalid_argument(std::string(what) + ": requires c >= 1");
}

Count b_weight(std::uint32_t p, std::uint32_t q, std::int64_t k) {
  return binom(q, k) * binom(static_cast<std::int64_t>(p) + k, k);
}

std::vector<Ratio> normalized(const std::vector<Count>& weights) {
  Count total = 0;
  for (const auto& w : weights) total += w;
  std::vector<Ratio> out;
  out.reserve(weights.size());
  for (const auto& w : weights) {
    Ratio r(w, total);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

std::uint32_t ray_partner(std::uint32_t n, double c) {
  const double q = c * static_cast<double>(n);
  const double rounded = std::round(q);
  if (std::fabs(q - rounded) > 1e-9 || rounded < 0 || rounded > 4e9) {
    throw std::invalid_argument("c * n must be a non-negative integer (c = " + std::to_string(c) +
                                ", n = " + std::to_string(n) + ")");
  }
  return static_cast<std::uint32_t>(rounded);
}

}  // namespace

DistSummary exact_distribution(std::uint32_t p, std::uint32_t q) {
  if (static_cast<std::uint64_t>(p) + q > kMaxDistributionSum) {
    throw GuardError("distribution-size", "p + q = " + std::to_string(std::uint64_t{p} + q) +
                                              " exceeds " + std::to_string(kMaxDistributionSum));
  }
  const Polynomial f = path_length_poly(p, q).poly;
  DistSummary out;
  out.p = p;
  out.q = q;
  out.probs = normalized(f.coefficients());

  const Count total = f.coefficient_sum();
  const Polynomial f1 = derivative(f);
  const Polynomial f2 = derivative(f1);
  out.mean_exact = Ratio(evaluate(f1, Count(1)), total);
  out.mean_exact.canonicalize();
  Ratio second_factorial(evaluate(f2, Count(1)), total);
  second_factorial.canonicalize();
  out.var_exact = second_factorial + out.mean_exact - out.mean_exact * out.mean_exact;
  out.var_exact.canonicalize();
  if (p != 0 || q != 0) {
    out.mean_asymp = asymp_mean(p, q);
    out.var_asymp = asymp_var(p, q);
  }
  return out;
}

double asymp_mean(std::uint32_t p, std::uint32_t q) {
  require_nondegenerate(p, q, "asymp_mean");
  const double dp = p, dq = q;
  return (dq + dp + discriminant_root(dp, dq)) / 4.0;
}

double asymp_var(std::uint32_t p, std::uint32_t q) {
  require_nondegenerate(p, q, "asymp_var");
  const double dp = p, dq = q;
  return (dp + dq) / 8.0 + (dp + dq) * (dp + dq) / (8.0 * discriminant_root(dp, dq));
}

double a_param(double c) {
  require_ray(c, "a_param");
  return (c - 1.0 + std::sqrt(c * c + 6.0 * c + 1.0)) / 4.0;
}

double chi_param(double c) {
  require_ray(c, "chi_param");
  const double s = std::sqrt(1.0 + c * (6.0 + c));
  const double c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c;
  return (2 * c2 + 10 * c3 - 10 * c4 - 2 * c5 + 2 * c2 * s + 4 * c3 * s + 2 * c4 * s) /
         (8 * c4);
}

double chi_variance_consistency(double c) {
  const double s = std::sqrt(c * c + 6.0 * c + 1.0);
  return 2.0 * chi_param(c) * ((c - 1.0) / 8.0 + (c + 1.0) * (c + 1.0) / (8.0 * s));
}

// ---------------------------------------------------------------------------

ComponentLaws component_distributions(std::uint32_t p, std::uint32_t q) {
  std::vector<Count> a(p + 1), b(q + 1);
  for (std::uint32_t k = 0; k <= p; ++k) a[k] = binom(p, k);
  for (std::uint32_t k = 0; k <= q; ++k) b[k] = b_weight(p, q, k);
  return {normalized(a), normalized(b)};
}

std::vector<Ratio> convolve(const std::vector<Ratio>& a, const std::vector<Ratio>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Ratio> out(a.size() + b.size() - 1, Ratio(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& r : out) r.canonicalize();
  return out;
}

Ratio law_mean(const std::vector<Ratio>& law) {
  Ratio m = 0;
  for (std::size_t k = 0; k < law.size(); ++k) m += law[k] * static_cast<unsigned long>(k);
  m.canonicalize();
  return m;
}

Ratio law_variance(const std::vector<Ratio>& law) {
  Ratio m2 = 0;
  for (std::size_t k = 0; k < law.size(); ++k) {
    m2 += law[k] * static_cast<unsigned long>(k * k);
  }
  const Ratio m = law_mean(law);
  Ratio v = m2 - m * m;
  v.canonicalize();
  return v;
}

double ratio_slope(double c) {
  const double s = std::sqrt(c * c + 6.0 * c + 1.0);
  return 8.0 * s / ((1.0 + c) * (1.0 + c) + (c - 1.0) * s);
}

RatioExpansion ratio_expansion_check(std::uint32_t p, std::uint32_t q, std::uint32_t k) {
  if (p == 0) throw std::invalid_argument("ratio_expansion_check: requires p >= 1");
  if (k == 0 || k > q) {
    throw std::invalid_argument("ratio_expansion_check: k = " + std::to_string(k) +
                                " outside (0, q]");
  }
  Ratio exact(b_weight(p, q, k + 1), b_weight(p, q, k));
  exact.canonicalize();
  const double n = p;
  const double c = static_cast<double>(q) / n;
  const double t = (static_cast<double>(k) - a_param(c) * n) / std::sqrt(n);
  return {exact.get_d(), 1.0 - ratio_slope(c) * t / std::sqrt(n)};
}

double tail_mass(std::uint32_t p, std::uint32_t q, double exponent) {
  if (p == 0) throw std::invalid_argument("tail_mass: requires p >= 1");
  const double n = p;
  const double a = a_param(static_cast<double>(q) / n);
  const double cutoff = std::pow(n, exponent);
  Count tail = 0;
  Count total = 0;
  for (std::uint32_t k = 0; k <= q; ++k) {
    Count w = b_weight(p, q, k);
    const double t = (static_cast<double>(k) - a * n) / std::sqrt(n);
    if (std::fabs(t) > cutoff) tail += w;
    total += w;
  }
  Ratio r(tail, total);
  r.canonicalize();
  return r.get_d();
}

CurvatureCheck curvature_check(std::uint32_t n, double c) {
  if (n < 20) throw std::invalid_argument("curvature_check: requires n >= 20");
  require_ray(c, "curvature_check");
  const std::uint32_t p = n;
  const std::uint32_t q = ray_partner(n, c);
  const double a = a_param(c);
  const auto k0 = static_cast<std::int64_t>(std::llround(a * n));
  if (k0 <= 0 || k0 >= static_cast<std::int64_t>(q)) {
    throw std::invalid_argument("curvature_check: k0 = " + std::to_string(k0) +
                                " is on the support boundary");
  }
  Ratio second(b_weight(p, q, k0 + 1) * b_weight(p, q, k0 - 1),
               b_weight(p, q, k0) * b_weight(p, q, k0));
  second.canonicalize();
  const double numeric = -(static_cast<double>(n) / 2.0) * std::log(second.get_d());

  const long double lp = p, lq = q;
  auto log_weight = [&](long double k) {
    return std::lgamma(lq + 1) - 2 * std::lgamma(k + 1) - std::lgamma(lq - k + 1) +
           std::lgamma(lp + k + 1) - std::lgamma(lp + 1);
  };
  const long double centre = static_cast<long double>(a) * n;
  const long double first = std::sqrt(static_cast<long double>(n)) *
                            (log_weight(centre + 0.5L) - log_weight(centre - 0.5L));
  return {numeric, chi_param(c), static_cast<double>(first), static_cast<std::uint64_t>(k0)};
}

double ks_distance(const DistSummary& dist) {
  if (dist.var_exact <= 0) {
    throw std::invalid_argument("ks_distance: degenerate distribution (zero variance)");
  }
  const double mean = dist.mean_exact.get_d();
  const double sd = std::sqrt(dist.var_exact.get_d());
  // Breakpoint k + 1/2 for k = -1 .. max.
  double sup = standard_normal_cdf((-0.5 - mean) / sd);
  Ratio cdf = 0;
  for (std::size_t k = 0; k < dist.probs.size(); ++k) {
    cdf += dist.probs[k];
    const double gap =
        std::fabs(cdf.get_d() - standard_normal_cdf((static_cast<double>(k) + 0.5 - mean) / sd));
    sup = std::max(sup, gap);
  }
  return sup;
}

double ks_distance(std::uint32_t p, std::uint32_t q) {
  require_nondegenerate(p, q, "ks_distance");
  return ks_distance(exact_distribution(p, q));
}

// ---------------------------------------------------------------------------

std::vector<ReportRow> convergence_report(double c, const std::vector<std::uint32_t>& n_list,
                                          unsigned threads) {
  std::vector<ReportRow> rows(n_list.size());
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    rows[i].n = n_list[i];
    rows[i].p = n_list[i];
    rows[i].q = ray_partner(n_list[i], c);
    if (n_list[i] == 0) throw std::invalid_argument("convergence_report: n must be >= 1");
  }
  require_ray(c, "convergence_report");

  auto fill = [&](ReportRow& row) {
    const DistSummary dist = exact_distribution(row.p, row.q);
    row.mean_exact = dist.mean_exact;
    row.var_exact = dist.var_exact;
    row.mean_asymp = dist.mean_asymp;
    row.var_asymp = dist.var_asymp;
    row.ks = ks_distance(dist);
    row.tail_mass = tail_mass(row.p, row.q, kReportTailExponent);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, rows.size()));
  if (workers <= 1) {
    for (auto& row : rows) fill(row);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
        try {
          fill(rows[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace jumppath
