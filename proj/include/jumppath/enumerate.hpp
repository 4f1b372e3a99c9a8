#pragma once

// Brute-force path enumeration on small lattices. This is the ground truth
// the closed forms in pathcount and genfunc are checked against, so it is
// deliberately naive: depth-first search over explicit successor lists.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "jumppath/exactmath.hpp"
#include "jumppath/lattice.hpp"

namespace jumppath {

/// Coordinate-sum limit for enumeration ("enumeration-size" guard).
inline constexpr std::uint64_t kMaxEnumerationSum = 14;

struct JumpPath {
  std::vector<LatticePoint> points;

  std::size_t jumps() const { return points.empty() ? 0 : points.size() - 1; }
  const LatticePoint& end() const { return points.back(); }
  /// "(x1,y1)->(x2,y2)->..."
  std::string to_string() const;

  friend auto operator<=>(const JumpPath&, const JumpPath&) = default;
  friend bool operator==(const JumpPath&, const JumpPath&) = default;
};

/// First-jump split of the length-n unrestricted paths from (p, q).
struct DirectionalTally {
  Count left;   // y unchanged
  Count down;   // x unchanged
  Count both;   // both coordinates decrease
};

/// Every unrestricted path from p (including the one-point path), in
/// lexicographic order of the point sequence. With max_jumps set, only paths
/// of at most that many jumps are produced.
std::vector<JumpPath> enumerate_unrestricted(const LatticePoint& p,
                                             std::optional<std::size_t> max_jumps = std::nullopt);

/// Paths from p that end at the origin.
std::vector<JumpPath> enumerate_restricted(const LatticePoint& p);

/// Chains from p that strictly decrease every coordinate, any endpoint.
std::vector<JumpPath> enumerate_simple(const LatticePoint& p);

/// Number of unrestricted paths from p by jump count.
std::map<std::size_t, Count> length_histogram(const LatticePoint& p);

/// Requires n >= 1 (std::invalid_argument otherwise).
DirectionalTally directional_counts(std::uint32_t p, std::uint32_t q, std::size_t n);

/// True if consecutive points are distinct and weakly decreasing (and, when
/// `simple`, strictly decreasing in every coordinate).
bool is_valid_path(const JumpPath& path, bool simple = false);

}  // namespace jumppath
