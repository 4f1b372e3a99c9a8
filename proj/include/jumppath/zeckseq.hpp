#pragma once

// The 2-D sequence built by placing, at each lattice point in anti-diagonal
// order, the smallest positive integer that no legal decomposition over the
// already-placed points can represent. A legal decomposition is a simple jump
// path (every coordinate strictly decreases) whose values are summed; a
// single point counts.
//
// Within an anti-diagonal x + y = s the fill runs from (s, 0) up to (0, s).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jumppath/kernels/bitset_kernels.hpp"
#include "jumppath/lattice.hpp"

namespace jumppath {

inline constexpr std::uint32_t kMaxDiagonals = 40;
/// Total bitset storage the builder may hold, in 64-bit words (512 MiB).
inline constexpr std::size_t kMaxSequenceWords = std::size_t{1} << 26;

/// Thrown by decompositions() when the target exceeds what the grid can sum to.
class InsufficientGrid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SeqGrid {
 public:
  SeqGrid() = default;

  /// Number of anti-diagonals that are completely filled.
  std::uint32_t diagonals() const;
  std::size_t size() const { return order_.size(); }
  const std::vector<LatticePoint>& placement_order() const { return order_; }
  std::optional<std::uint64_t> value_at(std::uint32_t x, std::uint32_t y) const;
  /// Throws std::out_of_range for points that have not been placed.
  std::uint64_t at(std::uint32_t x, std::uint32_t y) const;
  std::uint64_t total() const { return total_; }

  friend bool operator==(const SeqGrid&, const SeqGrid&) = default;

 private:
  friend class SequenceBuilder;
  void place(std::uint32_t x, std::uint32_t y, std::uint64_t value);

  // values_[x][y], 0 = not placed.
  std::vector<std::vector<std::uint64_t>> values_;
  std::vector<LatticePoint> order_;
  std::uint64_t total_ = 0;
};

/// Incremental construction, one lattice point per place_next().
class SequenceBuilder {
 public:
  explicit SequenceBuilder(const kernels::KernelTable& k = kernels::active_kernels());

  /// Places the next point in fill order and returns it.
  LatticePoint place_next();
  const SeqGrid& grid() const { return grid_; }

 private:
  using Bits = std::vector<kernels::Word>;
  const Bits& prefix(std::int64_t x, std::int64_t y) const;

  const kernels::KernelTable* kernels_;
  SeqGrid grid_;
  std::uint32_t next_x_ = 0;
  std::uint32_t next_sum_ = 0;
  // Totals of decompositions seen so far.
  Bits representable_;
  // prefix_[x][y]: totals of chains whose top point lies in [0,x] x [0,y].
  std::vector<std::vector<Bits>> prefix_;
  std::size_t stored_words_ = 0;
  Bits empty_;
};

/// Fills anti-diagonals 0 .. diagonals-1. Throws GuardError for
/// diagonals outside [1, kMaxDiagonals] ("sequence-diagonals") or when the
/// bitsets outgrow kMaxSequenceWords ("sequence-memory").
SeqGrid build_sequence(std::uint32_t diagonals,
                       const kernels::KernelTable& k = kernels::active_kernels());

struct Decomposition {
  std::vector<LatticePoint> points;  // top point first
  std::uint64_t total = 0;
};

/// Every legal decomposition of n over the grid, in lexicographic order of the
/// point sequence. Throws InsufficientGrid if n exceeds grid.total() and
/// std::invalid_argument for n = 0.
std::vector<Decomposition> decompositions(std::uint64_t n, const SeqGrid& grid);

/// Sorted totals in [1, bound] reachable by a legal decomposition over the
/// grid's placed points.
std::vector<std::uint64_t> representable_set(const SeqGrid& grid, std::uint64_t bound);

}  // namespace jumppath
