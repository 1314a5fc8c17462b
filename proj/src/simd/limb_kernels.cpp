#include "bernoulli/simd/limb_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bernoulli::simd {

namespace {

std::atomic<AddCarryFn>& active_fn() {
    static std::atomic<AddCarryFn> fn{kernel_fn(detect())};
    return fn;
}

std::atomic<Kernel>& active_kind() {
    static std::atomic<Kernel> kind{detect()};
    return kind;
}

}  // namespace

bool supported(Kernel k) noexcept {
    switch (k) {
    case Kernel::scalar:
        return true;
    case Kernel::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Kernel::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Kernel detect() noexcept {
    if (const char* env = std::getenv("BERNOULLI_KERNEL")) {
        const std::string_view want{env};
        for (auto k : {Kernel::scalar, Kernel::avx2, Kernel::neon}) {
            if (want == name(k) && supported(k)) {
                return k;
            }
        }
    }
    if (supported(Kernel::avx2)) {
        return Kernel::avx2;
    }
    if (supported(Kernel::neon)) {
        return Kernel::neon;
    }
    return Kernel::scalar;
}

Kernel active() noexcept { return active_kind().load(std::memory_order_relaxed); }

void select(Kernel k) {
    if (!supported(k)) {
        throw std::invalid_argument("kernel '" + std::string(name(k)) + "' is not supported here");
    }
    active_fn().store(kernel_fn(k), std::memory_order_relaxed);
    active_kind().store(k, std::memory_order_relaxed);
}

AddCarryFn kernel_fn(Kernel k) {
    switch (k) {
#if defined(__x86_64__) || defined(_M_X64)
    case Kernel::avx2:
        return &add_with_carry_avx2;
#endif
#if defined(__aarch64__)
    case Kernel::neon:
        return &add_with_carry_neon;
#endif
    default:
        return &add_with_carry_scalar;
    }
}

std::string_view name(Kernel k) noexcept {
    switch (k) {
    case Kernel::scalar:
        return "scalar";
    case Kernel::avx2:
        return "avx2";
    case Kernel::neon:
        return "neon";
    }
    return "?";
}

void add_with_carry(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                    std::span<std::uint32_t> out, std::span<std::uint32_t> carry) {
    const auto n = out.size();
    if (a.size() != n || b.size() != n || carry.size() != n) {
        throw std::invalid_argument("add_with_carry: span lengths differ");
    }
    active_fn().load(std::memory_order_relaxed)(a.data(), b.data(), out.data(), carry.data(), n);
}

}  // namespace bernoulli::simd
