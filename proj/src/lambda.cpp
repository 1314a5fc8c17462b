#include "bernoulli/lambda.hpp"

#include <string>

#include "bernoulli/paths.hpp"

namespace bernoulli {

namespace {

void check(std::int64_t c, std::int64_t n, std::int64_t min_n) {
    if (c < 2) {
        throw InvalidLambdaParameter("lambda needs c >= 2, got " + std::to_string(c));
    }
    if (n < min_n) {
        throw InvalidLambdaParameter("lambda index must be >= " + std::to_string(min_n) +
                                     ", got " + std::to_string(n));
    }
}

Natural s2(std::int64_t c, std::int64_t n, const TriangleStore& store) {
    return sum_S(PathSpec{.order = 2, .c = c, .l = 1 - c, .family = Family::S, .n = n}, store);
}

}  // namespace

LambdaSeq LambdaSeq::generate(std::int64_t c, std::size_t count) {
    check(c, 1, 1);
    LambdaSeq seq{c, {}};
    seq.terms.reserve(count);
    const auto uc = static_cast<std::size_t>(c);
    for (std::size_t n = 1; n <= count; ++n) {
        if (n < uc) {
            seq.terms.emplace_back(0);
        } else if (n == uc) {
            seq.terms.emplace_back(1);
        } else {
            seq.terms.push_back(seq.terms[n - 2] + seq.terms[n - 1 - uc]);
        }
    }
    return seq;
}

const Natural& LambdaSeq::at(std::int64_t n) const {
    if (n < 1 || static_cast<std::size_t>(n) > terms.size()) {
        throw std::out_of_range("lambda index " + std::to_string(n) + " outside generated range");
    }
    return terms[static_cast<std::size_t>(n) - 1];
}

Integer lambda_diff(std::int64_t c, std::int64_t n, const TriangleStore& store) {
    check(c, n, 1);
    Integer d = s2(c, n, store).value() - 2 * s2(c, n - 1, store).value();
    if (d.sign() < 0) {
        throw std::logic_error("lambda_diff produced a negative value at c=" + std::to_string(c) +
                               ", n=" + std::to_string(n));
    }
    return d;
}

Natural lambda_rec(std::int64_t c, std::int64_t n) {
    check(c, n, 1);
    return LambdaSeq::generate(c, static_cast<std::size_t>(n)).at(n);
}

Natural lambda_explicit(std::int64_t c, std::int64_t n) {
    check(c, n, 1);
    Natural acc;
    const auto upper = floor_div(n - c, c - 1);
    for (std::int64_t i = 0; i <= upper; ++i) {
        acc += binomial(n - c - i * (c - 1), i);
    }
    return acc;
}

Natural s2_reconstruct(std::int64_t c, std::int64_t n) {
    check(c, n, 0);
    const auto seq = LambdaSeq::generate(c, static_cast<std::size_t>(n));
    Natural acc{1};
    for (std::int64_t k = 1; k <= n; ++k) {
        acc = acc * Natural{2} + seq.at(k);
    }
    return acc;
}

}  // namespace bernoulli
