#include "jumppath/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "jumppath/cltlab.hpp"
#include "jumppath/enumerate.hpp"
#include "jumppath/genfunc.hpp"
#include "jumppath/pathcount.hpp"
#include "jumppath/verify.hpp"
#include "jumppath/zeckseq.hpp"

namespace jumppath::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::uint32_t> parse_n_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::uint32_t v = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size() || v == 0) {
      throw UsageError("--n-list entries must be positive integers, got '" + field + "'");
    }
    out.push_back(v);
  }
  return out;
}

struct Options {
  // count / enumerate / genfun
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::optional<std::uint64_t> n;
  std::string kind = "total";
  std::string point;
  bool restricted = false;
  bool list = false;
  std::string format = "csv";
  // sequence / decompose
  std::uint32_t diagonals = 9;
  std::uint64_t value = 0;
  // clt
  double c = 1.0;
  std::string n_list;
  std::string out_path;
  unsigned threads = 1;
  // verify
  std::uint32_t max_pq = 12;
};

int cmd_count(const Options& o, const CLI::App& sub, std::ostream& out) {
  const bool has_point = sub.count("--point") > 0;
  const bool has_pq = sub.count("--p") > 0 || sub.count("--q") > 0;
  if (has_point == has_pq) {
    throw UsageError("count needs either --p and --q, or --point");
  }
  if (has_pq && (sub.count("--p") == 0 || sub.count("--q") == 0)) {
    throw UsageError("count needs both --p and --q");
  }
  if (o.kind == "total") {
    if (o.n) throw UsageError("--n applies to --kind u or g, not total");
    const LatticePoint pt = has_point ? parse_point(o.point) : LatticePoint{o.p, o.q};
    out << total_paths(pt).get_str() << '\n';
    return kExitOk;
  }
  if (!o.n) throw UsageError("--kind " + o.kind + " requires --n");
  if (o.kind == "u") {
    if (has_point) throw UsageError("--kind u is only available for --p/--q");
    out << unrestricted_count(o.p, o.q, *o.n).get_str() << '\n';
    return kExitOk;
  }
  if (has_point) {
    out << restricted_count(parse_point(o.point), *o.n).get_str() << '\n';
  } else {
    out << restricted_count_2d(o.p, o.q, *o.n).get_str() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const LatticePoint pt{o.p, o.q};
  const auto paths = o.restricted ? enumerate_restricted(pt) : enumerate_unrestricted(pt);
  out << paths.size() << '\n';
  if (o.list) {
    for (const auto& path : paths) out << path.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_genfun(const Options& o, std::ostream& out) {
  const Polynomial f = path_length_poly(o.p, o.q).poly;
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : f.coefficients()) arr.push_back(c.get_str());
    out << arr.dump() << '\n';
    return kExitOk;
  }
  out << "k,count\n";
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    out << k << ',' << f.coefficients()[k].get_str() << '\n';
  }
  return kExitOk;
}

int cmd_sequence(const Options& o, std::ostream& out) {
  const SeqGrid grid = build_sequence(o.diagonals);
  out << "x,y,order,value\n";
  std::size_t order = 0;
  for (const auto& pt : grid.placement_order()) {
    out << pt[0] << ',' << pt[1] << ',' << order++ << ',' << grid.at(pt[0], pt[1]) << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const SeqGrid grid = build_sequence(o.diagonals);
  const auto found = decompositions(o.value, grid);
  out << found.size() << '\n';
  if (o.list) {
    for (const auto& d : found) {
      std::string line;
      for (const auto& pt : d.points) {
        if (!line.empty()) line += '+';
        line += std::to_string(grid.at(pt[0], pt[1])) + "@" + pt.to_string();
      }
      out << line << '\n';
    }
  }
  return kExitOk;
}

void write_clt(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << "n,p,q,mean_exact,mean_asymp,var_exact,var_asymp,ks,tail_mass\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.p << ',' << r.q << ',' << format_decimal(r.mean_exact) << ','
        << format_decimal(r.mean_asymp) << ',' << format_decimal(r.var_exact) << ','
        << format_decimal(r.var_asymp) << ',' << format_decimal(r.ks) << ','
        << format_decimal(r.tail_mass) << '\n';
  }
}

int cmd_clt(const Options& o, std::ostream& out) {
  const auto ns = parse_n_list(o.n_list);
  const auto rows = convergence_report(o.c, ns, std::max(1u, o.threads));
  if (o.out_path.empty()) {
    write_clt(rows, out);
    return kExitOk;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + o.out_path + "' for writing");
  write_clt(rows, file);
  return file ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = run_verification({o.max_pq});
  std::size_t failed = 0;
  for (const auto& r : results) {
    for (const auto& f : r.failures) out << "FAIL " << r.name << ": " << f << '\n';
    if (!r.passed()) ++failed;
  }
  out << (failed ? "verify: " + std::to_string(failed) + " of " + std::to_string(results.size()) +
                       " checks failed"
                 : "verify: all " + std::to_string(results.size()) + " checks passed")
      << '\n';
  return failed ? kExitFailure : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, generating functions and CLT checks for lattice jump paths",
               "jumppath"};
  app.require_subcommand(1, 1);
  Options o;
  std::uint64_t n_value = 0;

  auto* count = app.add_subcommand("count", "Count paths from a lattice point");
  count->add_option("--p", o.p, "x coordinate");
  count->add_option("--q", o.q, "y coordinate");
  count->add_option("--point", o.point, "point in any dimension, e.g. \"2,1,3\"");
  count->add_option("--n", n_value, "number of jumps");
  count->add_option("--kind", o.kind, "u | g | total")
      ->check(CLI::IsMember({"u", "g", "total"}));

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate paths by brute force");
  enumerate->add_option("--p", o.p)->required();
  enumerate->add_option("--q", o.q)->required();
  enumerate->add_flag("--restricted", o.restricted, "only paths ending at the origin");
  enumerate->add_flag("--list", o.list, "print every path");

  auto* genfun = app.add_subcommand("genfun", "Path-length generating function coefficients");
  genfun->add_option("--p", o.p)->required();
  genfun->add_option("--q", o.q)->required();
  genfun->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* sequence = app.add_subcommand("sequence", "Build the 2-D sequence grid");
  sequence->add_option("--diagonals", o.diagonals)->required();
  sequence->add_option("--format", o.format)->check(CLI::IsMember({"csv"}));

  auto* decompose = app.add_subcommand("decompose", "Legal decompositions of an integer");
  decompose->add_option("--value", o.value)->required();
  decompose->add_option("--diagonals", o.diagonals)->required();
  decompose->add_flag("--list", o.list);

  auto* clt = app.add_subcommand("clt", "Convergence report along q = c p");
  clt->add_option("--c", o.c)->required();
  clt->add_option("--n-list", o.n_list, "comma-separated n values")->required();
  clt->add_option("--out", o.out_path, "output file (default stdout)");
  clt->add_option("--threads", o.threads, "worker threads for the sweep");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--max-pq", o.max_pq, "bound on p, q for identity checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (count->count("--n") > 0) o.n = n_value;

  try {
    if (*count) return cmd_count(o, *count, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*genfun) return cmd_genfun(o, out);
    if (*sequence) return cmd_sequence(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*clt) return cmd_clt(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const InsufficientGrid& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace jumppath::cli
