#include "bernoulli/simd/limb_kernels.hpp"

namespace bernoulli::simd {

void add_with_carry_scalar(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                           std::uint32_t* carry, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = std::uint64_t{a[i]} + b[i] + carry[i];
        out[i] = static_cast<std::uint32_t>(s);
        carry[i] = static_cast<std::uint32_t>(s >> 32);
    }
}

}  // namespace bernoulli::simd
