#pragma once

// Word-level bitset kernels for the representable-sum search in zeckseq.
//
// Bit i of a bitset lives in word i / 64 at position i % 64. Every kernel has
// a portable scalar reference; an AVX2 variant is compiled on x86-64 and
// picked at runtime when the CPU supports it. Both must produce bit-identical
// results (tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace jumppath::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for_bits(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  /// dst |= src << shift, bits shifted past the end of dst are dropped.
  void (*or_shifted)(std::span<Word> dst, std::span<const Word> src, std::size_t shift);
  /// dst[i] |= src[i] over the common prefix.
  void (*or_into)(std::span<Word> dst, std::span<const Word> src);
  /// Index of the first clear bit at or after `from`; bits beyond the span
  /// count as clear, so the result is at least `from`.
  std::size_t (*find_first_zero)(std::span<const Word> bits, std::size_t from);
};

const KernelTable& scalar_kernels();
/// nullptr when AVX2 was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Kernels used by the library: the widest supported ISA unless overridden.
const KernelTable& active_kernels();
/// Overrides the runtime choice. Throws std::invalid_argument if the ISA is
/// not available on this machine.
void force_isa(Isa isa);
/// Returns to automatic selection.
void reset_isa();

}  // namespace jumppath::kernels
