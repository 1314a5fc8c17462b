#pragma once

// Generalized Fibonacci sequences lambda_n(c), c >= 2, n >= 1.
//
// Three independent routes produce the same values:
//   difference  S[2]_n(c,1-c) - 2 S[2]_{n-1}(c,1-c)
//   recurrence  0 (n < c), 1 (n = c), lambda_{n-1} + lambda_{n-c} (n > c)
//   explicit    sum_{i=0..floor((n-c)/(c-1))} C(n-c-i(c-1), i)
// lambda_n(2) = F_{n-1}.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bernoulli/exactnum.hpp"
#include "bernoulli/triangle.hpp"

namespace bernoulli {

class InvalidLambdaParameter : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// lambda_1(c) .. lambda_count(c) from the recurrence.
struct LambdaSeq {
    std::int64_t c = 2;
    std::vector<Natural> terms;  // terms[i] is lambda_{i+1}(c)

    static LambdaSeq generate(std::int64_t c, std::size_t count);
    const Natural& at(std::int64_t n) const;
};

Integer lambda_diff(std::int64_t c, std::int64_t n, const TriangleStore& store);
Natural lambda_rec(std::int64_t c, std::int64_t n);
Natural lambda_explicit(std::int64_t c, std::int64_t n);

/// 2^n + sum_{k=1..n} 2^{n-k} lambda_k(c), which rebuilds S[2]_n(c, 1-c).
Natural s2_reconstruct(std::int64_t c, std::int64_t n);

}  // namespace bernoulli
