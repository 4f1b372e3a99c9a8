#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace jumppath {

/// Raised when a request exceeds one of the named size limits (enumeration
/// explosion, memo table cells, series truncation, ...). `guard()` names the
/// limit so callers can report it.
class GuardError : public std::runtime_error {
 public:
  GuardError(std::string guard, const std::string& detail)
      : std::runtime_error("guard '" + guard + "' violated: " + detail), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// Point of N^d, d >= 1.
class LatticePoint {
 public:
  LatticePoint(std::initializer_list<std::uint32_t> coords) : coords_(coords) { check(); }
  explicit LatticePoint(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) { check(); }

  static LatticePoint origin(std::size_t dimension) {
    return LatticePoint(std::vector<std::uint32_t>(dimension, 0));
  }

  std::size_t dimension() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }

  std::uint64_t coordinate_sum() const {
    std::uint64_t s = 0;
    for (auto c : coords_) s += c;
    return s;
  }
  bool is_origin() const {
    for (auto c : coords_) {
      if (c != 0) return false;
    }
    return true;
  }
  /// Every coordinate <= other's, and not equal: a legal generalized jump.
  bool weakly_below(const LatticePoint& other) const;
  /// Every coordinate strictly smaller: a legal simple jump.
  bool strictly_below(const LatticePoint& other) const;

  std::string to_string() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  void check() const {
    if (coords_.empty()) throw std::invalid_argument("LatticePoint: dimension must be >= 1");
  }
  std::vector<std::uint32_t> coords_;
};

/// Parses "p1,p2,...". Throws std::invalid_argument on anything that is not
/// a non-empty list of non-negative integers.
LatticePoint parse_point(const std::string& text);

}  // namespace jumppath
