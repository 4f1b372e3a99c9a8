// Compiled with -mavx2; nothing here may run before the CPU check in
// avx2_table_if_compiled().

#include <algorithm>
#include <bit>

#include "jumppath/kernels/bitset_kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>
#define JUMPPATH_HAVE_AVX2 1
#endif

namespace jumppath::kernels::detail {

#ifdef JUMPPATH_HAVE_AVX2

namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Scalar formula for a single destination word; used at both ragged ends.
inline Word shifted_word(std::span<const Word> src, std::size_t j, unsigned bit) {
  Word v = j < src.size() ? (src[j] << bit) : 0;
  if (bit && j >= 1 && j - 1 < src.size()) v |= src[j - 1] >> (kWordBits - bit);
  return v;
}

void or_shifted_avx2(std::span<Word> dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t word_shift = shift / kWordBits;
  const unsigned bit = static_cast<unsigned>(shift % kWordBits);
  if (word_shift >= dst.size() || src.empty()) return;
  const std::size_t end = std::min(dst.size(), src.size() + word_shift + (bit ? 1 : 0));

  std::size_t i = word_shift;
  // Vector body needs src[j-1 .. j+3] in range, j = i - word_shift.
  if (i < end && bit) {
    dst[i] |= shifted_word(src, 0, bit);
    ++i;
  }
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(bit));
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(kWordBits - bit));
  for (; i + 4 <= end && (i - word_shift) + 4 <= src.size(); i += 4) {
    const std::size_t j = i - word_shift;
    __m256i v = _mm256_sll_epi64(load(src.data() + j), left);
    if (bit) v = _mm256_or_si256(v, _mm256_srl_epi64(load(src.data() + j - 1), right));
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), v));
  }
  for (; i < end; ++i) dst[i] |= shifted_word(src, i - word_shift, bit);
}

void or_into_avx2(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

std::size_t find_first_zero_avx2(std::span<const Word> bits, std::size_t from) {
  std::size_t w = from / kWordBits;
  if (w >= bits.size()) return from;
  Word inv = ~bits[w] & (~Word{0} << (from % kWordBits));
  if (inv != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(inv));
  ++w;
  const __m256i ones = _mm256_set1_epi64x(-1);
  for (; w + 4 <= bits.size(); w += 4) {
    // testc: all bits of `ones` set in the block, i.e. the block is full.
    if (!_mm256_testc_si256(load(bits.data() + w), ones)) break;
  }
  for (; w < bits.size(); ++w) {
    if (~bits[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(~bits[w]));
  }
  return w * kWordBits;
}

const KernelTable kAvx2{Isa::Avx2, "avx2", or_shifted_avx2, or_into_avx2, find_first_zero_avx2};

}  // namespace

const KernelTable* avx2_table_if_compiled() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2_table_if_compiled() { return nullptr; }

#endif

}  // namespace jumppath::kernels::detail
