#pragma once

// Registry of identities, each pairing a closed-form (or recurrence)
// evaluator with a brute-force oracle, plus a range-sweep verifier.
//
// Oracles use only binomial coefficients and direct summation (via
// cell_bruteforce / path_sum_bruteforce). Closed forms use Fibonacci
// numbers, powers of two and polynomial evaluation; recurrence identities
// evaluate their right-hand side through the memoized TriangleStore.

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernoulli/exactnum.hpp"
#include "bernoulli/triangle.hpp"

namespace bernoulli {

class UnknownIdentity : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct IdentityRecord {
    std::string name;
    std::string statement;
    std::function<Integer(std::int64_t)> closed_form;
    std::function<Integer(std::int64_t)> oracle;
    std::int64_t valid_from = 0;
};

struct Mismatch {
    std::int64_t n;
    Integer closed;
    Integer oracle;
};

struct VerifyReport {
    std::string name;
    std::int64_t first = 0;
    std::int64_t last = -1;
    std::vector<Mismatch> failures;
    std::chrono::nanoseconds elapsed{0};

    bool ok() const noexcept { return failures.empty(); }
};

class IdentityRegistry {
  public:
    /// Registers every identity; closures keep a reference to `store`.
    explicit IdentityRegistry(const TriangleStore& store);

    const IdentityRecord& find(std::string_view name) const;
    std::span<const IdentityRecord> all() const noexcept { return records_; }

  private:
    std::vector<IdentityRecord> records_;
};

/// Checks closed_form(n) == oracle(n) for n in [valid_from, n_max]. With
/// jobs > 1 the range is split into disjoint chunks checked concurrently;
/// the merged report is identical to the sequential one.
VerifyReport verify(const IdentityRecord& record, std::int64_t n_max, unsigned jobs = 1);
VerifyReport verify(const IdentityRegistry& registry, std::string_view name, std::int64_t n_max,
                    unsigned jobs = 1);

/// Every registered identity exactly once, sorted by name.
std::vector<VerifyReport> verify_all(const IdentityRegistry& registry, std::int64_t n_max,
                                     unsigned jobs = 1);

/// "<name> n=[a..b] OK" or one "<name> FAIL at n=<v>: closed=<x> oracle=<y>"
/// line per mismatch.
std::vector<std::string> format_report(const VerifyReport& report);

/// (p, q) with 1 <= q <= p for a flattened triangular index n >= 0
/// (0 -> (1,1), 1 -> (2,1), 2 -> (2,2), 3 -> (3,1), ...).
std::pair<std::int64_t, std::int64_t> unflatten_pq(std::int64_t n);

}  // namespace bernoulli
