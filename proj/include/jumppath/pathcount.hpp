#pragma once

// Exact counts of generalized jump paths.
//
//   r(p, n)     relaxed paths to the origin (stationary repeats allowed)
//   s(p, n, k)  relaxed paths with at least k marked stationary steps
//   g(p, n)     generalized jump paths of exactly n jumps ending at the origin
//   u(p, q, n)  unrestricted paths (free endpoint), 2-D only
//   S(p)        total unrestricted paths of every length
//
// The empty path counts: g(origin, 0) = 1 and u(p, q, 0) = 1.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "jumppath/exactmath.hpp"
#include "jumppath/lattice.hpp"

namespace jumppath {

/// Lengths with a non-zero count, keyed by number of jumps.
struct CountTable {
  LatticePoint origin;
  std::map<std::uint64_t, Count> counts;
};

/// r(p, n) = prod_i C(p_i + n - 1, p_i).
Count relaxed_count(const LatticePoint& p, std::uint64_t n);

/// s(p, n, k) = C(n, k) r(p, n - k). Throws std::invalid_argument if k > n.
Count at_least_k_stationary(const LatticePoint& p, std::uint64_t n, std::uint64_t k);

/// Inclusion-exclusion over stationary steps, any dimension:
///   g(p, n) = sum_i (-1)^i C(n, i) prod_k C(p_k - 1 + n - i, n - 1 - i).
Count restricted_count(const LatticePoint& p, std::uint64_t n);

/// The same quantity re-summed directly from relaxed counts,
///   g(p, n) = sum_k (-1)^k C(n, k) r(p, n - k).
/// Kept as an independent route for cross-checks.
Count restricted_count_by_relaxed(const LatticePoint& p, std::uint64_t n);

/// Positive-sum closed form in two dimensions,
///   g((p, q), n) = sum_i C(p-1, i) C(p-1+n-i, p) C(q, n-i-1).
Count restricted_count_2d(std::uint32_t p, std::uint32_t q, std::uint64_t n);

/// u((p, q), n) = sum_i C(p, i) C(p+n-i, p) C(q, n-i).
Count unrestricted_count(std::uint32_t p, std::uint32_t q, std::uint64_t n);

/// u over the whole box [0,max_p] x [0,max_q] x [0,max_p+max_q], filled by the
/// six-term recurrence
///   u(p,q,n) = u(p,q-1,n) + u(p,q-1,n-1) + u(p-1,q,n) + u(p-1,q,n-1)
///            - u(p-1,q-1,n) - u(p-1,q-1,n-1)
/// from the axis values u((0,q),n) = C(q,n), u((p,0),n) = C(p,n).
class UnrestrictedRecurrence {
 public:
  UnrestrictedRecurrence(std::uint32_t max_p, std::uint32_t max_q);

  std::uint32_t max_p() const { return max_p_; }
  std::uint32_t max_q() const { return max_q_; }
  /// Zero for n beyond p + q. Throws std::out_of_range outside the box.
  const Count& operator()(std::uint32_t p, std::uint32_t q, std::uint64_t n) const;

 private:
  std::size_t index(std::uint32_t p, std::uint32_t q, std::uint64_t n) const;

  std::uint32_t max_p_;
  std::uint32_t max_q_;
  std::uint64_t lengths_;
  std::vector<Count> values_;
  Count zero_{0};
};

Count unrestricted_count_by_recurrence(std::uint32_t p, std::uint32_t q, std::uint64_t n);

/// Cell limit for the total_paths memo box.
inline constexpr std::uint64_t kMaxTotalPathCells = 100'000'000;

/// S(p) = 1 + sum over a != p in the box [0,p_1] x ... x [0,p_d] of S(a).
/// Memoized over the box with prefix sums; throws GuardError
/// ("total-paths-cells") for boxes above kMaxTotalPathCells.
Count total_paths(const LatticePoint& p);

/// Both sides of sum_i C(n,i) C(m+n-i, k-i) (-1)^i = C(m, k).
struct IdentitySides {
  Count lhs;
  Count rhs;
};
IdentitySides identity_macc(std::uint64_t m, std::uint64_t n, std::uint64_t k);

/// Non-zero u((p,q), n) for every length.
CountTable unrestricted_table(std::uint32_t p, std::uint32_t q);
/// Non-zero g(p, n) for every length, any dimension.
CountTable restricted_table(const LatticePoint& p);

}  // namespace jumppath
