#include "jumppath/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <random>

#include "jumppath/cltlab.hpp"
#include "jumppath/enumerate.hpp"
#include "jumppath/genfunc.hpp"
#include "jumppath/kernels/bitset_kernels.hpp"
#include "jumppath/pathcount.hpp"
#include "jumppath/zeckseq.hpp"

namespace jumppath {

namespace {

// Nine anti-diagonals of the sequence grid, row y, column x.
constexpr std::uint64_t kSequenceRows[9][9] = {
    {1, 2, 4, 8, 16, 29, 54, 90, 159},
    {3, 5, 9, 17, 30, 56, 93, 160, 0},
    {7, 12, 20, 33, 59, 100, 171, 0, 0},
    {14, 24, 40, 66, 107, 184, 0, 0, 0},
    {28, 48, 74, 123, 198, 0, 0, 0, 0},
    {50, 82, 139, 230, 0, 0, 0, 0, 0},
    {84, 155, 259, 0, 0, 0, 0, 0, 0},
    {157, 263, 0, 0, 0, 0, 0, 0, 0},
    {280, 0, 0, 0, 0, 0, 0, 0, 0},
};

constexpr std::uint64_t kTotalPathRows[4][4] = {
    {1, 2, 4, 8}, {2, 6, 16, 40}, {4, 16, 52, 152}, {8, 40, 152, 504}};

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& where) {
    if (!(got == want) && result_.failures.size() < kMaxFailures) {
      result_.failures.push_back(where);
    }
  }
  void expect(bool ok, const std::string& where) {
    if (!ok && result_.failures.size() < kMaxFailures) result_.failures.push_back(where);
  }
  CheckResult take() { return std::move(result_); }

 private:
  static constexpr std::size_t kMaxFailures = 5;
  CheckResult result_;
};

std::string at(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  return "(p,q,n)=(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
}

using Check = std::function<CheckResult(std::uint32_t)>;

CheckResult check_total_path_table(std::uint32_t) {
  Recorder r("total-path-table");
  for (std::uint32_t y = 0; y < 4; ++y) {
    for (std::uint32_t x = 0; x < 4; ++x) {
      r.expect_eq(total_paths(LatticePoint{x, y}), Count(kTotalPathRows[y][x]),
                  "S" + LatticePoint{x, y}.to_string());
    }
  }
  return r.take();
}

CheckResult check_unrestricted_restricted(std::uint32_t m) {
  Recorder r("unrestricted-restricted");
  for (std::uint32_t p = 0; p <= m; ++p) {
    for (std::uint32_t q = 0; q <= m; ++q) {
      for (std::uint64_t n = 0; n <= std::uint64_t{p} + q + 1; ++n) {
        r.expect_eq(unrestricted_count(p, q, n),
                    restricted_count_2d(p, q, n) + restricted_count_2d(p, q, n + 1), at(p, q, n));
      }
    }
  }
  return r.take();
}

CheckResult check_recurrence(std::uint32_t m) {
  Recorder r("path-recurrence");
  const UnrestrictedRecurrence table(m, m);
  for (std::uint32_t p = 0; p <= m; ++p) {
    for (std::uint32_t q = 0; q <= m; ++q) {
      for (std::uint64_t n = 0; n <= std::uint64_t{p} + q + 1; ++n) {
        r.expect_eq(table(p, q, n), unrestricted_count(p, q, n), at(p, q, n));
      }
    }
  }
  return r.take();
}

CheckResult check_symmetry(std::uint32_t m) {
  Recorder r("symmetry");
  for (std::uint32_t p = 0; p <= m; ++p) {
    for (std::uint32_t q = 0; q < p; ++q) {
      for (std::uint64_t n = 0; n <= std::uint64_t{p} + q; ++n) {
        r.expect_eq(unrestricted_count(p, q, n), unrestricted_count(q, p, n), "u " + at(p, q, n));
        r.expect_eq(restricted_count_2d(p, q, n), restricted_count_2d(q, p, n),
                    "g2 " + at(p, q, n));
      }
    }
  }
  return r.take();
}

CheckResult check_restricted_routes(std::uint32_t m) {
  Recorder r("restricted-routes");
  for (std::uint32_t p = 0; p <= m; ++p) {
    for (std::uint32_t q = 0; q <= m; ++q) {
      const LatticePoint pt{p, q};
      for (std::uint64_t n = 0; n <= std::uint64_t{p} + q + 1; ++n) {
        const Count g2 = restricted_count_2d(p, q, n);
        r.expect_eq(restricted_count(pt, n), g2, "inclusion-exclusion " + at(p, q, n));
        r.expect_eq(restricted_count_by_relaxed(pt, n), g2, "relaxed " + at(p, q, n));
      }
    }
  }
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::uint32_t> coord(0, 4);
    const LatticePoint pt{coord(rng), coord(rng), coord(rng)};
    for (std::uint64_t n = 0; n <= pt.coordinate_sum() + 1; ++n) {
      r.expect_eq(restricted_count(pt, n), restricted_count_by_relaxed(pt, n),
                  "3-D " + pt.to_string() + " n=" + std::to_string(n));
    }
  }
  return r.take();
}

CheckResult check_total_paths(std::uint32_t m) {
  Recorder r("total-paths-sum");
  for (std::uint32_t p = 0; p <= m; ++p) {
    for (std::uint32_t q = 0; q <= m; ++q) {
      r.expect_eq(total_paths(LatticePoint{p, q}), path_length_poly(p, q).poly.coefficient_sum(),
                  "S(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  return r.take();
}

CheckResult check_enumeration(std::uint32_t m) {
  Recorder r("enumeration-oracle");
  const std::uint32_t lim = std::min<std::uint32_t>(m, 5);
  for (std::uint32_t p = 0; p <= lim; ++p) {
    for (std::uint32_t q = 0; q <= lim; ++q) {
      const LatticePoint pt{p, q};
      const auto hist = length_histogram(pt);
      std::map<std::size_t, Count> restricted;
      for (const auto& path : enumerate_restricted(pt)) ++restricted[path.jumps()];
      const Polynomial f = path_length_poly(p, q).poly;
      for (std::uint64_t n = 0; n <= std::uint64_t{p} + q + 1; ++n) {
        const auto h = hist.count(n) ? hist.at(n) : Count(0);
        const auto g = restricted.count(n) ? restricted.at(n) : Count(0);
        r.expect_eq(h, unrestricted_count(p, q, n), "u " + at(p, q, n));
        r.expect_eq(h, f.coefficient(n), "F " + at(p, q, n));
        r.expect_eq(g, restricted_count_2d(p, q, n), "g2 " + at(p, q, n));
        r.expect_eq(g, restricted_count(pt, n), "g " + at(p, q, n));
      }
    }
  }
  for (std::uint32_t a = 0; a <= 2; ++a) {
    for (std::uint32_t b = 0; b <= 2; ++b) {
      for (std::uint32_t c = 0; c <= 2; ++c) {
        const LatticePoint pt{a, b, c};
        std::map<std::size_t, Count> restricted;
        for (const auto& path : enumerate_restricted(pt)) ++restricted[path.jumps()];
        for (std::uint64_t n = 0; n <= pt.coordinate_sum(); ++n) {
          const auto g = restricted.count(n) ? restricted.at(n) : Count(0);
          r.expect_eq(g, restricted_count(pt, n), "3-D " + pt.to_string());
        }
      }
    }
  }
  return r.take();
}

CheckResult check_directional(std::uint32_t m) {
  Recorder r("directional-partition");
  const std::uint32_t lim = std::min<std::uint32_t>(m, 4);
  for (std::uint32_t p = 1; p <= lim; ++p) {
    for (std::uint32_t q = 1; q <= lim; ++q) {
      for (std::size_t n = 1; n <= p + q; ++n) {
        const auto t = directional_counts(p, q, n);
        r.expect_eq(t.left + t.down + t.both, unrestricted_count(p, q, n), at(p, q, n));
      }
    }
  }
  return r.take();
}

CheckResult check_generating_functions(std::uint32_t m) {
  Recorder r("generating-functions");
  for (std::uint32_t p = 0; p <= m; ++p) {
    for (std::uint32_t q = 0; q <= m; ++q) {
      const Polynomial f = path_length_poly(p, q).poly;
      r.expect_eq(f, path_length_poly_direct(p, q).poly, "direct " + at(p, q, 0));
      r.expect_eq(f, path_length_poly(q, p).poly, "swap " + at(p, q, 0));
    }
  }
  for (std::uint32_t i = 0; i <= 2 * m; ++i) {
    const Polynomial a = legendre_coeff_poly(i);
    r.expect_eq(a, legendre_coeff_poly_explicit(i), "a_" + std::to_string(i));
    r.expect_eq(b_poly(i), Polynomial::one_plus_x_pow(i) * a, "b_" + std::to_string(i));
    r.expect_eq(path_length_poly(i, i).poly, Polynomial::one_plus_x_pow(i) * a,
                "F_nn n=" + std::to_string(i));
  }
  return r.take();
}

CheckResult check_trivariate(std::uint32_t m) {
  Recorder r("trivariate-series");
  const std::uint32_t lim = std::min<std::uint32_t>(m, 10);
  for (std::uint32_t p = 0; p <= lim; ++p) {
    for (std::uint32_t q = 0; q <= lim; ++q) {
      for (std::uint64_t n = 0; n <= std::uint64_t{p} + q; ++n) {
        r.expect_eq(trivariate_coeff(p, q, n), unrestricted_count(p, q, n), at(p, q, n));
      }
    }
  }
  return r.take();
}

CheckResult check_macc(std::uint32_t m) {
  Recorder r("alternating-identity");
  for (std::uint64_t a = 0; a <= m; ++a) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      for (std::uint64_t k = 0; k <= m; ++k) {
        const auto s = identity_macc(a, n, k);
        r.expect_eq(s.lhs, s.rhs, "(m,n,k)=" + at(a, n, k).substr(8));
      }
    }
  }
  return r.take();
}

CheckResult check_sequence(std::uint32_t) {
  Recorder r("sequence-table");
  const SeqGrid grid = build_sequence(9);
  for (std::uint32_t y = 0; y < 9; ++y) {
    for (std::uint32_t x = 0; x + y < 9; ++x) {
      r.expect_eq(grid.at(x, y), kSequenceRows[y][x],
                  "value at " + LatticePoint{x, y}.to_string());
    }
  }
  const auto d = decompositions(25, grid);
  r.expect(d.size() == 2, "25 should have exactly two decompositions");
  for (const auto& dec : d) {
    for (std::size_t i = 1; i < dec.points.size(); ++i) {
      r.expect(dec.points[i].strictly_below(dec.points[i - 1]), "chain not strictly decreasing");
    }
  }
  // Every integer up to the largest placed value is representable.
  const auto reach = representable_set(grid, 280);
  r.expect(reach.size() == 280, "integers 1..280 not all representable");
  return r.take();
}

CheckResult check_kernels(std::uint32_t) {
  Recorder r("simd-kernels");
  const auto* wide = kernels::avx2_kernels();
  if (!wide) return r.take();
  const auto& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<kernels::Word> src(rng() % 40), a(rng() % 40);
    for (auto& w : src) w = rng();
    for (auto& w : a) w = rng();
    auto b = a;
    const std::size_t shift = rng() % 1500;
    ref.or_shifted(a, src, shift);
    wide->or_shifted(b, src, shift);
    r.expect(a == b, "or_shifted mismatch, shift " + std::to_string(shift));
  }
  return r.take();
}

CheckResult check_distributions(std::uint32_t m) {
  Recorder r("exact-distributions");
  for (std::uint32_t p = 0; p <= m; ++p) {
    for (std::uint32_t q = 0; q <= m; ++q) {
      const DistSummary d = exact_distribution(p, q);
      Ratio total = 0;
      for (const auto& x : d.probs) total += x;
      r.expect(total == 1, "normalization " + at(p, q, 0));
      const auto laws = component_distributions(p, q);
      r.expect(convolve(laws.law_a, laws.law_b) == d.probs, "convolution " + at(p, q, 0));
      r.expect(law_mean(laws.law_a) + law_mean(laws.law_b) == d.mean_exact,
               "mean additivity " + at(p, q, 0));
      r.expect(law_variance(laws.law_a) + law_variance(laws.law_b) == d.var_exact,
               "variance additivity " + at(p, q, 0));
    }
  }
  for (double c : {1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    r.expect(std::fabs(chi_variance_consistency(c) - 1.0) < 1e-12,
             "chi consistency c=" + std::to_string(c));
  }
  return r.take();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"total-path-table", check_total_path_table},
      {"unrestricted-restricted", check_unrestricted_restricted},
      {"path-recurrence", check_recurrence},
      {"symmetry", check_symmetry},
      {"restricted-routes", check_restricted_routes},
      {"total-paths-sum", check_total_paths},
      {"enumeration-oracle", check_enumeration},
      {"directional-partition", check_directional},
      {"generating-functions", check_generating_functions},
      {"trivariate-series", check_trivariate},
      {"alternating-identity", check_macc},
      {"sequence-table", check_sequence},
      {"simd-kernels", check_kernels},
      {"exact-distributions", check_distributions},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, check] : checks) {
    try {
      out.push_back(check(options.max_pq));
    } catch (const std::exception& e) {
      out.push_back({name, {std::string("exception: ") + e.what()}});
    }
  }
  return out;
}

}  // namespace jumppath
