#include "jumppath/zeckseq.hpp"

#include <algorithm>
#include <string>

namespace jumppath {

using kernels::Word;
using kernels::words_for_bits;

namespace {

std::size_t bit_count_to_hold(std::uint64_t value) { return static_cast<std::size_t>(value) + 1; }

void set_bit(std::vector<Word>& bits, std::uint64_t i) {
  bits[i / kernels::kWordBits] |= Word{1} << (i % kernels::kWordBits);
}

void grow(std::vector<Word>& bits, std::size_t words) {
  if (bits.size() < words) bits.resize(words, 0);
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint32_t SeqGrid::diagonals() const {
  std::uint32_t d = 0;
  while (static_cast<std::size_t>(d + 1) * (d + 2) / 2 <= order_.size()) ++d;
  return d;
}

std::optional<std::uint64_t> SeqGrid::value_at(std::uint32_t x, std::uint32_t y) const {
  if (x >= values_.size() || y >= values_[x].size() || values_[x][y] == 0) return std::nullopt;
  return values_[x][y];
}

std::uint64_t SeqGrid::at(std::uint32_t x, std::uint32_t y) const {
  if (auto v = value_at(x, y)) return *v;
  throw std::out_of_range("SeqGrid: (" + std::to_string(x) + "," + std::to_string(y) +
                          ") has not been placed");
}

void SeqGrid::place(std::uint32_t x, std::uint32_t y, std::uint64_t value) {
  if (values_.size() <= x) values_.resize(x + 1);
  if (values_[x].size() <= y) values_[x].resize(y + 1, 0);
  values_[x][y] = value;
  order_.push_back(LatticePoint{x, y});
  total_ += value;
}

// ---------------------------------------------------------------------------

SequenceBuilder::SequenceBuilder(const kernels::KernelTable& k) : kernels_(&k) {}

const SequenceBuilder::Bits& SequenceBuilder::prefix(std::int64_t x, std::int64_t y) const {
  if (x < 0 || y < 0) return empty_;
  const auto ux = static_cast<std::size_t>(x);
  const auto uy = static_cast<std::size_t>(y);
  if (ux >= prefix_.size() || uy >= prefix_[ux].size()) return empty_;
  return prefix_[ux][uy];
}

LatticePoint SequenceBuilder::place_next() {
  const std::uint32_t x = next_x_;
  const std::uint32_t y = next_sum_ - next_x_;
  const auto sx = static_cast<std::int64_t>(x);
  const auto sy = static_cast<std::int64_t>(y);

  const auto value =
      static_cast<std::uint64_t>(kernels_->find_first_zero(representable_, 1));

  // Chains topped by the new point: the point alone, or the point followed by
  // any chain topped strictly below-left of it.
  const Bits& below = prefix(sx - 1, sy - 1);
  const std::size_t sum_words =
      std::max(words_for_bits(bit_count_to_hold(value)),
               below.empty() ? std::size_t{0} : below.size() + words_for_bits(value) + 1);
  Bits sums(sum_words, 0);
  set_bit(sums, value);
  kernels_->or_shifted(sums, below, static_cast<std::size_t>(value));

  grow(representable_, sums.size());
  kernels_->or_into(representable_, sums);

  const Bits& left = prefix(sx - 1, sy);
  const Bits& down = prefix(sx, sy - 1);
  Bits cell(std::max({sums.size(), left.size(), down.size()}), 0);
  kernels_->or_into(cell, sums);
  kernels_->or_into(cell, left);
  kernels_->or_into(cell, down);
  while (!cell.empty() && cell.back() == 0) cell.pop_back();

  stored_words_ += cell.size();
  if (stored_words_ + representable_.size() > kMaxSequenceWords) {
    throw GuardError("sequence-memory",
                     "representable-sum bitsets exceed " + std::to_string(kMaxSequenceWords) +
                         " words at point (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  if (prefix_.size() <= x) prefix_.resize(x + 1);
  if (prefix_[x].size() <= y) prefix_[x].resize(y + 1);
  prefix_[x][y] = std::move(cell);

  grid_.place(x, y, value);

  if (next_x_ == 0) {
    ++next_sum_;
    next_x_ = next_sum_;
  } else {
    --next_x_;
  }
  return LatticePoint{x, y};
}

SeqGrid build_sequence(std::uint32_t diagonals, const kernels::KernelTable& k) {
  if (diagonals == 0 || diagonals > kMaxDiagonals) {
    throw GuardError("sequence-diagonals", "diagonals must be in [1, " +
                                               std::to_string(kMaxDiagonals) + "], got " +
                                               std::to_string(diagonals));
  }
  SequenceBuilder builder(k);
  const std::size_t cells = static_cast<std::size_t>(diagonals) * (diagonals + 1) / 2;
  for (std::size_t i = 0; i < cells; ++i) builder.place_next();
  return builder.grid();
}

// ---------------------------------------------------------------------------

namespace {

struct ChainSearch {
  const SeqGrid& grid;
  std::uint64_t target;
  std::vector<LatticePoint> all_points;  // lexicographic
  std::vector<LatticePoint> chain;
  std::vector<Decomposition> out;

  void extend(std::uint64_t partial) {
    if (partial == target) {
      out.push_back({chain, partial});
      // Values are positive, so any longer chain overshoots.
      return;
    }
    const LatticePoint& top = chain.back();
    for (const auto& next : all_points) {
      if (!next.strictly_below(top)) continue;
      const std::uint64_t v = grid.at(next[0], next[1]);
      if (partial + v > target) continue;
      chain.push_back(next);
      extend(partial + v);
      chain.pop_back();
    }
  }
};

}  // namespace

std::vector<Decomposition> decompositions(std::uint64_t n, const SeqGrid& grid) {
  if (n == 0) throw std::invalid_argument("decompositions: target must be positive");
  if (n > grid.total()) {
    throw InsufficientGrid("insufficient grid: " + std::to_string(n) +
                           " exceeds the sum of all grid values (" +
                           std::to_string(grid.total()) + ")");
  }
  ChainSearch search{grid, n, grid.placement_order(), {}, {}};
  std::sort(search.all_points.begin(), search.all_points.end());
  for (const auto& start : search.all_points) {
    const std::uint64_t v = grid.at(start[0], start[1]);
    if (v > n) continue;
    search.chain = {start};
    search.extend(v);
  }
  return std::move(search.out);
}

std::vector<std::uint64_t> representable_set(const SeqGrid& grid, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (grid.size() == 0 || bound == 0) return out;
  const auto& k = kernels::active_kernels();
  const std::size_t words = words_for_bits(static_cast<std::size_t>(bound) + 1);

  std::uint32_t max_x = 0, max_y = 0;
  for (const auto& p : grid.placement_order()) {
    max_x = std::max(max_x, p[0]);
    max_y = std::max(max_y, p[1]);
  }
  // Same prefix-OR recurrence as the builder, truncated at `bound`.
  std::vector<std::vector<std::vector<Word>>> prefix(
      max_x + 1, std::vector<std::vector<Word>>(max_y + 1, std::vector<Word>(words, 0)));
  std::vector<Word> reach(words, 0);
  const std::vector<Word> none(words, 0);
  for (std::uint32_t x = 0; x <= max_x; ++x) {
    for (std::uint32_t y = 0; y <= max_y; ++y) {
      auto& cell = prefix[x][y];
      if (auto v = grid.value_at(x, y); v && *v <= bound) {
        std::vector<Word> sums(words, 0);
        set_bit(sums, *v);
        k.or_shifted(sums, (x > 0 && y > 0) ? prefix[x - 1][y - 1] : none,
                     static_cast<std::size_t>(*v));
        k.or_into(reach, sums);
        k.or_into(cell, sums);
      }
      if (x > 0) k.or_into(cell, prefix[x - 1][y]);
      if (y > 0) k.or_into(cell, prefix[x][y - 1]);
    }
  }
  for (std::uint64_t i = 1; i <= bound; ++i) {
    if ((reach[i / kernels::kWordBits] >> (i % kernels::kWordBits)) & 1) out.push_back(i);
  }
  return out;
}

}  // namespace jumppath
