#pragma once

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <span>

#include "bernoulli/exactnum.hpp"

namespace bernoulli {

/// Append-only table F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
/// Reads are concurrent; extension is serialized.
class FibCache {
  public:
    FibCache();

    Natural get(std::uint64_t n);
    std::size_t size() const;

    static FibCache& global();

  private:
    mutable std::shared_mutex mutex_;
    std::deque<Natural> values_;
};

Natural fib(std::uint64_t n);

/// Rebuilds u_n from u_0 and the doubling differences v_k = u_k - 2 u_{k-1}:
///
///     u_n = 2^n u_0 + sum_{k=1..n} 2^{n-k} v_k
///
/// `v[k-1]` holds v_k; requires v.size() >= n.
Integer telescope(const Integer& u0, std::span<const Integer> v, std::size_t n);

/// sum_{k=0..floor(n/2)} C(n-k, k), the shallow-diagonal sum of Pascal's
/// triangle (equal to F_{n+1}).
Natural fib_diag(std::uint64_t n);

}  // namespace bernoulli
