#include "jumppath/enumerate.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace jumppath {

namespace {

void check_size(const LatticePoint& p) {
  if (p.coordinate_sum() > kMaxEnumerationSum) {
    throw GuardError("enumeration-size", "coordinate sum of " + p.to_string() + " exceeds " +
                                             std::to_string(kMaxEnumerationSum));
  }
}

// Points of the box [0, top] in lexicographic order, optionally skipping top.
std::vector<LatticePoint> box_points(const LatticePoint& top, bool include_top) {
  std::vector<LatticePoint> out;
  std::vector<std::uint32_t> c(top.dimension(), 0);
  while (true) {
    LatticePoint a(c);
    if (include_top || a != top) out.push_back(std::move(a));
    std::size_t i = c.size();
    while (i-- > 0) {
      if (++c[i] <= top[i]) break;
      c[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<LatticePoint> weak_successors(const LatticePoint& p) { return box_points(p, false); }

std::vector<LatticePoint> strict_successors(const LatticePoint& p) {
  std::vector<std::uint32_t> top(p.coords());
  for (auto& t : top) {
    if (t == 0) return {};
    --t;
  }
  return box_points(LatticePoint(std::move(top)), true);
}

using Successors = std::function<std::vector<LatticePoint>(const LatticePoint&)>;

// Pre-order DFS with sorted successors emits paths in lexicographic order of
// their point sequences (a prefix sorts before its extensions).
void walk(std::vector<LatticePoint>& stack, const Successors& next,
          std::optional<std::size_t> max_jumps,
          const std::function<void(const std::vector<LatticePoint>&)>& visit) {
  visit(stack);
  if (max_jumps && stack.size() - 1 >= *max_jumps) return;
  for (auto& s : next(stack.back())) {
    stack.push_back(std::move(s));
    walk(stack, next, max_jumps, visit);
    stack.pop_back();
  }
}

std::vector<JumpPath> collect(const LatticePoint& p, const Successors& next,
                              std::optional<std::size_t> max_jumps,
                              const std::function<bool(const std::vector<LatticePoint>&)>& keep) {
  check_size(p);
  std::vector<JumpPath> out;
  std::vector<LatticePoint> stack{p};
  walk(stack, next, max_jumps, [&](const std::vector<LatticePoint>& path) {
    if (keep(path)) out.push_back(JumpPath{path});
  });
  return out;
}

}  // namespace

std::string JumpPath::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += "->";
    s += points[i].to_string();
  }
  return s;
}

std::vector<JumpPath> enumerate_unrestricted(const LatticePoint& p,
                                             std::optional<std::size_t> max_jumps) {
  return collect(p, weak_successors, max_jumps, [](const auto&) { return true; });
}

std::vector<JumpPath> enumerate_restricted(const LatticePoint& p) {
  return collect(p, weak_successors, std::nullopt,
                 [](const std::vector<LatticePoint>& path) { return path.back().is_origin(); });
}

std::vector<JumpPath> enumerate_simple(const LatticePoint& p) {
  return collect(p, strict_successors, std::nullopt, [](const auto&) { return true; });
}

std::map<std::size_t, Count> length_histogram(const LatticePoint& p) {
  check_size(p);
  std::map<std::size_t, Count> hist;
  std::vector<LatticePoint> stack{p};
  walk(stack, weak_successors, std::nullopt,
       [&](const std::vector<LatticePoint>& path) { ++hist[path.size() - 1]; });
  return hist;
}

DirectionalTally directional_counts(std::uint32_t p, std::uint32_t q, std::size_t n) {
  if (n == 0) throw std::invalid_argument("directional_counts: n must be >= 1");
  const LatticePoint start{p, q};
  check_size(start);
  DirectionalTally tally{0, 0, 0};
  std::vector<LatticePoint> stack{start};
  walk(stack, weak_successors, n, [&](const std::vector<LatticePoint>& path) {
    if (path.size() - 1 != n) return;
    const auto& first = path[1];
    if (first[1] == q) ++tally.left;
    else if (first[0] == p) ++tally.down;
    else ++tally.both;
  });
  return tally;
}

bool is_valid_path(const JumpPath& path, bool simple) {
  if (path.points.empty()) return false;
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    const auto& prev = path.points[i - 1];
    const auto& cur = path.points[i];
    if (simple ? !cur.strictly_below(prev) : !cur.weakly_below(prev)) return false;
  }
  return true;
}

}  // namespace jumppath
