// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jumppath/cltlab.hpp"
#include "jumppath/enumerate.hpp"
#include "jumppath/genfunc.hpp"
#include "jumppath/pathcount.hpp"
#include "jumppath/zeckseq.hpp"

using namespace jumppath;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

constexpr std::uint64_t kTotalPaths[4][4] = {
    {1, 2, 4, 8}, {2, 6, 16, 40}, {4, 16, 52, 152}, {8, 40, 152, 504}};

constexpr std::uint64_t kSequence[9][9] = {
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

const std::vector<std::uint32_t> kSweep = {25, 50, 100, 200, 400};

// Regression values at n = 400, c = 1, frozen from the first oracle run.
constexpr double kMeanRelErr400 = 4.4475e-5;
constexpr double kVarRelErr400 = 1.51853e-4;
constexpr double kKs400 = 5.270509e-4;
constexpr double kTail400 = 1.443274e-5;
constexpr double kRegressionTol = 1e-3;  // relative

bool close_rel(double got, double want) { return std::abs(got - want) <= kRegressionTol * want; }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

Count count_at(const std::map<std::size_t, Count>& m, std::size_t n) {
  const auto it = m.find(n);
  return it == m.end() ? Count(0) : it->second;
}

Outcome criterion1() {
  Outcome o;
  for (std::uint32_t p = 0; p < 4; ++p)
    for (std::uint32_t q = 0; q < 4; ++q)
      o.expect(total_paths({p, q}) == kTotalPaths[p][q],
               "S(" + std::to_string(p) + "," + std::to_string(q) + ")");
  o.detail = o.ok ? "16/16 values" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const SeqGrid g = build_sequence(9);
  int matched = 0;
  for (std::uint32_t y = 0; y < 9; ++y)
    for (std::uint32_t x = 0; x + y < 9; ++x) {
      const bool eq = g.value_at(x, y) == kSequence[y][x];
      matched += eq;
      o.expect(eq, "value at " + LatticePoint{x, y}.to_string());
    }
  o.expect(g.size() == 45, "grid size");
  if (o.ok) o.detail = std::to_string(matched) + "/45 values";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const SeqGrid g = build_sequence(9);
  const auto ds = decompositions(25, g);
  std::vector<std::vector<LatticePoint>> got;
  for (const auto& d : ds) got.push_back(d.points);
  std::sort(got.begin(), got.end());
  const std::vector<std::vector<LatticePoint>> want = {
      {LatticePoint{1, 3}, LatticePoint{0, 0}}, {LatticePoint{2, 2}, LatticePoint{1, 1}}};
  o.expect(got == want, "chains for 25");
  o.expect(g.at(1, 3) == 24 && g.at(0, 0) == 1 && g.at(2, 2) == 20 && g.at(1, 1) == 5,
           "chain values");
  if (o.ok) o.detail = "24+1, 20+5";
  return o;
}

Outcome criterion4() {
  Outcome o;
  UnrestrictedRecurrence rec(5, 5);
  std::size_t checks = 0;
  for (std::uint32_t p = 0; p <= 5; ++p) {
    for (std::uint32_t q = 0; q <= 5; ++q) {
      const auto hist = length_histogram({p, q});
      std::map<std::size_t, Count> g;
      for (const auto& path : enumerate_restricted({p, q})) g[path.jumps()] += 1;
      const Polynomial f = path_length_poly(p, q).poly;
      const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      for (std::uint64_t n = 0; n <= p + q + 1; ++n) {
        const Count u = count_at(hist, n);
        const Count r = count_at(g, n);
        o.expect(u == unrestricted_count(p, q, n), "unrestrictedCount " + at);
        o.expect(u == unrestricted_count_by_recurrence(p, q, n), "recurrence " + at);
        o.expect(u == rec(p, q, n), "recurrence table " + at);
        o.expect(u == f.coefficient(n), "genfunc " + at);
        o.expect(r == restricted_count({p, q}, n), "restrictedCount " + at);
        o.expect(r == restricted_count_2d(p, q, n), "restrictedCount2D " + at);
        checks += 6;
      }
    }
  }
  for (std::uint32_t a = 0; a <= 3; ++a)
    for (std::uint32_t b = 0; b <= 3; ++b)
      for (std::uint32_t c = 0; c <= 3; ++c) {
        const LatticePoint pt{a, b, c};
        std::map<std::size_t, Count> g;
        for (const auto& path : enumerate_restricted(pt)) g[path.jumps()] += 1;
        for (std::uint64_t n = 0; n <= a + b + c + 1; ++n) {
          o.expect(count_at(g, n) == restricted_count(pt, n), "3-D " + pt.to_string());
          ++checks;
        }
      }
  if (o.ok) o.detail = std::to_string(checks) + " exact comparisons";
  return o;
}

Outcome criterion5() {
  Outcome o;
  UnrestrictedRecurrence rec(40, 40);
  for (std::uint32_t p = 0; p <= 40; ++p)
    for (std::uint32_t q = 0; q <= 40; ++q)
      for (std::uint64_t n = 0; n <= p + q + 1; ++n) {
        const Count u = unrestricted_count(p, q, n);
        o.expect(u == restricted_count_2d(p, q, n) + restricted_count_2d(p, q, n + 1),
                 "unrestricted-restricted relation");
        o.expect(u == rec(p, q, n), "path recurrence");
        if (p <= 30 && q <= 30) o.expect(u == unrestricted_count(q, p, n), "symmetry");
      }
  for (std::uint32_t n = 0; n <= 60; ++n) {
    const Polynomial a = legendre_coeff_poly(n);
    o.expect(path_length_poly(n, n).poly == Polynomial::one_plus_x_pow(n) * a,
             "diagonal Legendre identity n=" + std::to_string(n));
    o.expect(a == legendre_coeff_poly_explicit(n), "Legendre explicit n=" + std::to_string(n));
    o.expect(b_poly(n) == Polynomial::one_plus_x_pow(n) * a, "b_i i=" + std::to_string(n));
  }
  for (std::uint64_t m = 0; m <= 30; ++m)
    for (std::uint64_t n = 0; n <= 30; ++n)
      for (std::uint64_t k = 0; k <= 30; ++k) {
        const auto s = identity_macc(m, n, k);
        o.expect(s.lhs == s.rhs, "alternating identity");
      }
  for (std::uint32_t p = 0; p <= 20; ++p)
    for (std::uint32_t q = 0; p + q <= 20; ++q)
      for (std::uint64_t n = 0; n <= p + q + 1; ++n)
        o.expect(trivariate_coeff(p, q, n) == unrestricted_count(p, q, n), "trivariate");
  if (o.ok) o.detail = "all identities exact";
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 0;
  for (double c : {1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    const double err = std::abs(chi_variance_consistency(c) - 1);
    worst = std::max(worst, err);
    o.expect(err < 1e-12, "c=" + std::to_string(c));
  }
  if (o.ok) o.detail = "max deviation " + sci(worst);
  return o;
}

std::vector<ReportRow> sweep_rows() {
  static const std::vector<ReportRow> rows = convergence_report(1.0, kSweep, 1);
  return rows;
}

Outcome criterion7() {
  Outcome o;
  std::vector<double> mean_err, var_err;
  for (const auto& r : sweep_rows()) {
    mean_err.push_back(std::abs(r.mean_exact.get_d() - r.mean_asymp) / r.mean_asymp);
    var_err.push_back(std::abs(r.var_exact.get_d() - r.var_asymp) / r.var_asymp);
  }
  o.expect(strictly_decreasing(mean_err), "mean relative error not strictly decreasing");
  o.expect(strictly_decreasing(var_err), "variance relative error not strictly decreasing");
  o.expect(mean_err.back() < 0.01, "mean error at n=400 >= 1%");
  o.expect(var_err.back() < 0.05, "variance error at n=400 >= 5%");
  o.expect(close_rel(mean_err.back(), kMeanRelErr400), "mean error regression");
  o.expect(close_rel(var_err.back(), kVarRelErr400), "variance error regression");
  if (o.ok) o.detail = "n=400 mean " + sci(mean_err.back()) + ", var " + sci(var_err.back());
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::vector<double> ks;
  for (const auto& r : sweep_rows()) ks.push_back(r.ks);
  o.expect(strictly_decreasing(ks), "KS distance not strictly decreasing");
  o.expect(ks.back() < 0.05, "KS at n=400 >= 0.05");
  o.expect(close_rel(ks.back(), kKs400), "KS regression");
  if (o.ok) o.detail = "n=400 KS " + sci(ks.back());
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<double> tail;
  for (const auto& r : sweep_rows()) tail.push_back(r.tail_mass);
  o.expect(strictly_decreasing(tail), "tail mass not strictly decreasing");
  o.expect(tail.back() < 1e-3, "tail mass at n=400 >= 1e-3");
  o.expect(close_rel(tail.back(), kTail400), "tail regression");
  if (o.ok) o.detail = "n=400 tail " + sci(tail.back());
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto c400 = curvature_check(400, 1.0);
  const auto c100 = curvature_check(100, 1.0);
  const double curv = c400.numeric / c400.predicted;
  const double ratio = std::abs(c100.first_difference / c400.first_difference);
  o.expect(std::abs(curv - 1) <= 0.05, "curvature ratio " + std::to_string(curv));
  o.expect(ratio >= 1.4 && ratio <= 2.6, "first-difference ratio " + std::to_string(ratio));
  if (o.ok) {
    std::ostringstream s;
    s.precision(4);
    s << "curvature/predicted " << curv << ", first-difference ratio " << ratio;
    o.detail = s.str();
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "total path table", 1, criterion1},
      {2, "nine-diagonal sequence table", 10, criterion2},
      {3, "decompositions of 25", 1, criterion3},
      {4, "enumeration oracle equivalence", 60, criterion4},
      {5, "exact identity suite", 0, criterion5},
      {6, "chi/variance consistency", 0, criterion6},
      {7, "CLT moment convergence", 120, criterion7},
      {8, "KS distance decay", 0, criterion8},
      {9, "tail mass decay", 0, criterion9},
      {10, "curvature and first difference", 0, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.detail += (o.ok ? "; " : ", ") + std::string("over time budget");
      o.ok = false;
    }
    failed += !o.ok;
    std::printf("%s criterion %2d: %-32s %8.3fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
