#include "bernoulli/simd/limb_kernels.hpp"

#include <arm_neon.h>

namespace bernoulli::simd {

void add_with_carry_neon(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                         std::uint32_t* carry, std::size_t count) {
    const uint32x4_t one = vdupq_n_u32(1);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const uint32x4_t va = vld1q_u32(a + i);
        const uint32x4_t vb = vld1q_u32(b + i);
        const uint32x4_t vc = vld1q_u32(carry + i);
        const uint32x4_t s = vaddq_u32(va, vb);
        const uint32x4_t c1 = vcltq_u32(s, va);
        const uint32x4_t s2 = vaddq_u32(s, vc);
        const uint32x4_t c2 = vcltq_u32(s2, s);
        vst1q_u32(out + i, s2);
        vst1q_u32(carry + i, vandq_u32(vorrq_u32(c1, c2), one));
    }
    add_with_carry_scalar(a + i, b + i, out + i, carry + i, count - i);
}

}  // namespace bernoulli::simd
