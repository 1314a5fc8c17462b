#include "bernoulli/exactnum.hpp"

#include <algorithm>
#include <ostream>

namespace bernoulli {

Natural::Natural(Integer v) : value_(std::move(v)) {
    if (value_.sign() < 0) {
        throw NegativeResult("Natural constructed from negative value " + value_.str());
    }
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (rhs.value_ > value_) {
        throw NegativeResult("Natural subtraction " + value_.str() + " - " + rhs.value_.str() +
                             " is negative");
    }
    value_ -= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& v) { return os << v.value(); }

Natural binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return Natural{};
    }
    k = std::min(k, n - k);
    Integer acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // acc = C(n-k+i, i) stays integral at every step.
        acc *= n - k + i;
        acc /= i;
    }
    return Natural{std::move(acc)};
}

std::vector<Natural> binomial_row(std::int64_t n, std::int64_t k_max) {
    std::vector<Natural> out;
    if (n < 0 || k_max < 0) {
        return out;
    }
    const auto last = std::min(n, k_max);
    out.reserve(static_cast<std::size_t>(last) + 1);
    Integer acc = 1;
    out.emplace_back(acc);
    for (std::int64_t q = 0; q < last; ++q) {
        acc *= n - q;
        acc /= q + 1;
        out.emplace_back(acc);
    }
    return out;
}

Natural pow2(std::uint64_t n) {
    Integer v = 1;
    v <<= n;
    return Natural{std::move(v)};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b == 0) {
        throw std::domain_error("floor_div by zero");
    }
    auto q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

bool is_integral(const Rational& r) { return denominator(r) == 1; }

Integer to_integer(const Rational& r) {
    if (!is_integral(r)) {
        throw std::logic_error("expected an integer, got " + to_string(r));
    }
    return numerator(r);
}

std::string to_string(const Rational& r) {
    if (is_integral(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace bernoulli
