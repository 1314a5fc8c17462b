// Compiled with -mavx2; only reached after a runtime CPU check.

#include "bernoulli/simd/limb_kernels.hpp"

#include <immintrin.h>

namespace bernoulli::simd {

namespace {

// Unsigned x < y per 32-bit lane, as 0 / 1.
inline __m256i lt_epu32(__m256i x, __m256i y, __m256i bias, __m256i one) {
    const __m256i gt = _mm256_cmpgt_epi32(_mm256_xor_si256(y, bias), _mm256_xor_si256(x, bias));
    return _mm256_and_si256(gt, one);
}

}  // namespace

void add_with_carry_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                         std::uint32_t* carry, std::size_t count) {
    const __m256i bias = _mm256_set1_epi32(static_cast<int>(0x80000000u));
    const __m256i one = _mm256_set1_epi32(1);
    std::size_t i = 0;
    for (; i + 8 <= count; i += 8) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(carry + i));
        const __m256i s = _mm256_add_epi32(va, vb);
        const __m256i c1 = lt_epu32(s, va, bias, one);
        const __m256i s2 = _mm256_add_epi32(s, vc);
        const __m256i c2 = lt_epu32(s2, s, bias, one);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), s2);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(carry + i), _mm256_or_si256(c1, c2));
    }
    add_with_carry_scalar(a + i, b + i, out + i, carry + i, count - i);
}

}  // namespace bernoulli::simd
