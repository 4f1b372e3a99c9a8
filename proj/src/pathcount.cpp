#include "jumppath/pathcount.hpp"

#include <stdexcept>
#include <string>

namespace jumppath {

namespace {

std::int64_t as_signed(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX / 4)) {
    throw std::invalid_argument("path length " + std::to_string(v) + " is out of range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Count relaxed_count(const LatticePoint& p, std::uint64_t n) {
  const std::int64_t len = as_signed(n);
  Count out = 1;
  for (auto c : p.coords()) {
    out *= binom(static_cast<std::int64_t>(c) + len - 1, c);
    if (out == 0) break;
  }
  return out;
}

Count at_least_k_stationary(const LatticePoint& p, std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw std::invalid_argument("at_least_k_stationary: k = " + std::to_string(k) +
                                " exceeds path length n = " + std::to_string(n));
  }
  return binom(as_signed(n), as_signed(k)) * relaxed_count(p, n - k);
}

Count restricted_count(const LatticePoint& p, std::uint64_t n) {
  // From the origin the only path is the empty one; the alternating sum does
  // not see that case.
  if (p.is_origin()) return n == 0 ? 1 : 0;
  if (n > p.coordinate_sum()) return 0;
  const std::int64_t len = as_signed(n);
  Count total = 0;
  for (std::int64_t i = 0; i <= len; ++i) {
    Count term = binom(len, i);
    for (auto c : p.coords()) {
      term *= binom(static_cast<std::int64_t>(c) - 1 + len - i, len - 1 - i);
      if (term == 0) break;
    }
    if (i % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

Count restricted_count_by_relaxed(const LatticePoint& p, std::uint64_t n) {
  const std::int64_t len = as_signed(n);
  Count total = 0;
  for (std::int64_t k = 0; k <= len; ++k) {
    Count term = binom(len, k) * relaxed_count(p, n - static_cast<std::uint64_t>(k));
    if (k % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

Count restricted_count_2d(std::uint32_t p, std::uint32_t q, std::uint64_t n) {
  if (p == 0 && q == 0) return n == 0 ? 1 : 0;
  if (n > static_cast<std::uint64_t>(p) + q) return 0;
  const std::int64_t len = as_signed(n);
  const std::int64_t pp = p;
  Count total = 0;
  for (std::int64_t i = 0; i <= len - 1; ++i) {
    // C(p-1, i) is (-1)^i when p = 0, which is what makes the axis case
    // collapse to C(q-1, n-1).
    total += binom(pp - 1, i) * binom(pp - 1 + len - i, pp) * binom(q, len - i - 1);
  }
  return total;
}

Count unrestricted_count(std::uint32_t p, std::uint32_t q, std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(p) + q) return 0;
  const std::int64_t len = as_signed(n);
  Count total = 0;
  for (std::int64_t i = 0; i <= std::min<std::int64_t>(len, p); ++i) {
    total += binom(p, i) * binom(p + len - i, p) * binom(q, len - i);
  }
  return total;
}

// ---------------------------------------------------------------------------

UnrestrictedRecurrence::UnrestrictedRecurrence(std::uint32_t max_p, std::uint32_t max_q)
    : max_p_(max_p), max_q_(max_q), lengths_(static_cast<std::uint64_t>(max_p) + max_q + 1) {
  values_.resize(static_cast<std::size_t>(max_p + 1) * (max_q + 1) * lengths_);
  for (std::uint32_t p = 0; p <= max_p; ++p) {
    for (std::uint32_t q = 0; q <= max_q; ++q) {
      const std::uint64_t top = static_cast<std::uint64_t>(p) + q;
      for (std::uint64_t n = 0; n <= top; ++n) {
        Count& cell = values_[index(p, q, n)];
        if (n == 0) {
          cell = 1;
        } else if (p == 0) {
          cell = binom(q, static_cast<std::int64_t>(n));
        } else if (q == 0) {
          cell = binom(p, static_cast<std::int64_t>(n));
        } else {
          cell = (*this)(p, q - 1, n) + (*this)(p, q - 1, n - 1) + (*this)(p - 1, q, n) +
                 (*this)(p - 1, q, n - 1) - (*this)(p - 1, q - 1, n) - (*this)(p - 1, q - 1, n - 1);
        }
      }
    }
  }
}

std::size_t UnrestrictedRecurrence::index(std::uint32_t p, std::uint32_t q, std::uint64_t n) const {
  return (static_cast<std::size_t>(p) * (max_q_ + 1) + q) * lengths_ + n;
}

const Count& UnrestrictedRecurrence::operator()(std::uint32_t p, std::uint32_t q,
                                                std::uint64_t n) const {
  if (p > max_p_ || q > max_q_) {
    throw std::out_of_range("UnrestrictedRecurrence: (" + std::to_string(p) + "," +
                            std::to_string(q) + ") outside the tabulated box");
  }
  if (n > static_cast<std::uint64_t>(p) + q) return zero_;
  return values_[index(p, q, n)];
}

Count unrestricted_count_by_recurrence(std::uint32_t p, std::uint32_t q, std::uint64_t n) {
  return UnrestrictedRecurrence(p, q)(p, q, n);
}

// ---------------------------------------------------------------------------

Count total_paths(const LatticePoint& p) {
  const std::size_t d = p.dimension();
  std::vector<std::uint64_t> extent(d);
  std::vector<std::uint64_t> stride(d);
  std::uint64_t cells = 1;
  for (std::size_t i = d; i-- > 0;) {
    extent[i] = static_cast<std::uint64_t>(p[i]) + 1;
    stride[i] = cells;
    if (cells > kMaxTotalPathCells / extent[i]) {
      throw GuardError("total-paths-cells", "box around " + p.to_string() + " exceeds " +
                                                std::to_string(kMaxTotalPathCells) + " cells");
    }
    cells *= extent[i];
  }
  if (d > 20) throw GuardError("total-paths-dimension", "dimension above 20");

  // prefix[c] = sum of S over the box [0, c]. The strict lower box of c is the
  // inclusion-exclusion of prefix sums at c - e_J over non-empty J, restricted
  // to coordinates that are positive.
  std::vector<Count> prefix(cells);
  std::vector<std::uint64_t> coord(d, 0);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    Count below = 0;
    const std::uint32_t masks = 1u << d;
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      std::uint64_t other = idx;
      bool valid = true;
      int bits = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (mask & (1u << i)) {
          if (coord[i] == 0) {
            valid = false;
            break;
          }
          other -= stride[i];
          ++bits;
        }
      }
      if (!valid) continue;
      if (bits % 2 == 1) below += prefix[other];
      else below -= prefix[other];
    }
    // prefix(c) = S(c) + below, S(c) = 1 + below
    prefix[idx] = 1 + 2 * below;
    if (idx + 1 == cells) return 1 + below;

    for (std::size_t i = d; i-- > 0;) {
      if (++coord[i] < extent[i]) break;
      coord[i] = 0;
    }
  }
  return 1;
}

// ---------------------------------------------------------------------------

IdentitySides identity_macc(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  const std::int64_t mm = as_signed(m), nn = as_signed(n), kk = as_signed(k);
  Count lhs = 0;
  for (std::int64_t i = 0; i <= nn; ++i) {
    Count term = binom(nn, i) * binom(mm + nn - i, kk - i);
    if (i % 2 == 0) lhs += term;
    else lhs -= term;
  }
  return {lhs, binom(mm, kk)};
}

CountTable unrestricted_table(std::uint32_t p, std::uint32_t q) {
  CountTable t{LatticePoint{p, q}, {}};
  for (std::uint64_t n = 0; n <= static_cast<std::uint64_t>(p) + q; ++n) {
    Count c = unrestricted_count(p, q, n);
    if (c != 0) t.counts.emplace(n, std::move(c));
  }
  return t;
}

CountTable restricted_table(const LatticePoint& p) {
  CountTable t{p, {}};
  for (std::uint64_t n = 0; n <= p.coordinate_sum(); ++n) {
    Count c = restricted_count(p, n);
    if (c != 0) t.counts.emplace(n, std::move(c));
  }
  return t;
}

}  // namespace jumppath
