#include "bernoulli/fibonacci.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace bernoulli {

FibCache::FibCache() : values_{Natural{0}, Natural{1}} {}

Natural FibCache::get(std::uint64_t n) {
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size()) {
            return values_[n];
        }
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
        const auto k = values_.size();
        values_.push_back(values_[k - 1] + values_[k - 2]);
    }
    return values_[n];
}

std::size_t FibCache::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

FibCache& FibCache::global() {
    static FibCache cache;
    return cache;
}

Natural fib(std::uint64_t n) { return FibCache::global().get(n); }

Integer telescope(const Integer& u0, std::span<const Integer> v, std::size_t n) {
    if (v.size() < n) {
        throw std::invalid_argument("telescope needs " + std::to_string(n) + " differences, got " +
                                    std::to_string(v.size()));
    }
    // Horner form of 2^n u0 + sum 2^{n-k} v_k.
    Integer acc = u0;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 2 * acc + v[k - 1];
    }
    return acc;
}

Natural fib_diag(std::uint64_t n) {
    Natural acc;
    const auto m = static_cast<std::int64_t>(n);
    for (std::int64_t k = 0; k <= m / 2; ++k) {
        acc += binomial(m - k, k);
    }
    return acc;
}

}  // namespace bernoulli
