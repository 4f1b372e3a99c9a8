#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

#include "jumppath/kernels/bitset_kernels.hpp"

namespace jumppath::kernels {

namespace detail {
const KernelTable* avx2_table_if_compiled();
}

namespace {

void or_shifted_scalar(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t word_shift = shift / kWordBits;
  const unsigned bit = static_cast<unsigned>(shift % kWordBits);
  if (word_shift >= dst.size() || src.empty()) return;
  const std::size_t end = std::min(dst.size(), src.size() + word_shift + (bit ? 1 : 0));
  for (std::size_t i = word_shift; i < end; ++i) {
    const std::size_t j = i - word_shift;
    Word v = j < src.size() ? (src[j] << bit) : 0;
    if (bit && j >= 1) v |= src[j - 1] >> (kWordBits - bit);
    dst[i] |= v;
  }
}

void or_into_scalar(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

std::size_t find_first_zero_scalar(std::span<const Word> bits, std::size_t from) {
  std::size_t w = from / kWordBits;
  if (w >= bits.size()) return from;
  Word inv = ~bits[w] & (~Word{0} << (from % kWordBits));
  while (inv == 0) {
    if (++w == bits.size()) return w * kWordBits;
    inv = ~bits[w];
  }
  return w * kWordBits + static_cast<std::size_t>(std::countr_zero(inv));
}

const KernelTable kScalar{Isa::Scalar, "scalar", or_shifted_scalar, or_into_scalar,
                          find_first_zero_scalar};

std::atomic<const KernelTable*> g_forced{nullptr};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
  static const KernelTable* table = detail::avx2_table_if_compiled();
  return table;
}

const KernelTable& active_kernels() {
  if (const KernelTable* forced = g_forced.load(std::memory_order_acquire)) return *forced;
  if (const KernelTable* wide = avx2_kernels()) return *wide;
  return kScalar;
}

void force_isa(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      g_forced.store(&kScalar, std::memory_order_release);
      return;
    case Isa::Avx2:
      if (const KernelTable* t = avx2_kernels()) {
        g_forced.store(t, std::memory_order_release);
        return;
      }
      throw std::invalid_argument("AVX2 kernels are not available on this machine");
  }
}

void reset_isa() { g_forced.store(nullptr, std::memory_order_release); }

}  // namespace jumppath::kernels
