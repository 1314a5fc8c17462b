#pragma once

// Exact integer and rational arithmetic shared by every module.
//
// Integer and Rational are Boost.Multiprecision types. Natural is a thin
// strong type over Integer whose subtraction is checked, used for values that
// are nonnegative by construction (triangle cells, Fibonacci numbers, 2^n).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bernoulli {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation would leave the nonnegative integers.
class NegativeResult : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class Natural {
  public:
    Natural() = default;
    Natural(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Natural(Integer v);

    const Integer& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    Natural& operator+=(const Natural& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Natural& operator*=(const Natural& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    // Throws NegativeResult when rhs > *this.
    Natural& operator-=(const Natural& rhs);

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        return a.value_.compare(b.value_) <=> 0;
    }

    std::string str() const { return value_.str(); }

  private:
    Integer value_;
};

std::ostream& operator<<(std::ostream& os, const Natural& v);

/// C(n, k) for 0 <= k <= n; zero everywhere else (k < 0, k > n or n < 0).
Natural binomial(std::int64_t n, std::int64_t k);

/// [C(n,0), ..., C(n,k_max)], truncated at n. Empty for n < 0 or k_max < 0.
std::vector<Natural> binomial_row(std::int64_t n, std::int64_t k_max);

Natural pow2(std::uint64_t n);

/// Mathematical floor of a / b (b != 0), i.e. rounding toward -infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// x^+ = (x + |x|) / 2.
constexpr std::int64_t positive_part(std::int64_t x) { return x > 0 ? x : 0; }

bool is_integral(const Rational& r);

/// Throws std::logic_error if r has a nontrivial denominator.
Integer to_integer(const Rational& r);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace bernoulli
