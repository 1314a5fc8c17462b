#pragma once

// Lane-wise multi-limb addition used by the triangle row step.
//
// Triangle rows are stored limb-sliced: plane j holds 32-bit limb j of every
// column. Adding two rows is then one add_with_carry call per plane, each a
// straight data-parallel loop over columns:
//
//     out[i]   = a[i] + b[i] + carry[i]   (mod 2^32)
//     carry[i] = carry-out of that sum    (0 or 1)
//
// The scalar kernel is the reference; vector kernels must match it bit for
// bit on every input.

#include <cstdint>
#include <span>
#include <string_view>

namespace bernoulli::simd {

enum class Kernel { scalar, avx2, neon };

using AddCarryFn = void (*)(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                            std::uint32_t* carry, std::size_t count);

void add_with_carry_scalar(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                           std::uint32_t* carry, std::size_t count);
#if defined(__x86_64__) || defined(_M_X64)
void add_with_carry_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                         std::uint32_t* carry, std::size_t count);
#endif
#if defined(__aarch64__)
void add_with_carry_neon(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                         std::uint32_t* carry, std::size_t count);
#endif

/// True if the running CPU (and this build) can execute `k`.
bool supported(Kernel k) noexcept;

/// Best supported kernel; honors BERNOULLI_KERNEL=scalar|avx2|neon when set.
Kernel detect() noexcept;

Kernel active() noexcept;

/// Switches the process-wide kernel. Throws std::invalid_argument if unsupported.
void select(Kernel k);

AddCarryFn kernel_fn(Kernel k);

std::string_view name(Kernel k) noexcept;

/// Dispatches to the active kernel. All spans must have the same length;
/// `out` may alias `a` or `b`.
void add_with_carry(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                    std::span<std::uint32_t> out, std::span<std::uint32_t> carry);

}  // namespace bernoulli::simd
