#include "bernoulli/polyderive.hpp"

#include <algorithm>
#include <stdexcept>

#include "bernoulli/fibonacci.hpp"

namespace bernoulli {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RatPolynomial::RatPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

RatPolynomial RatPolynomial::constant(Rational c) { return RatPolynomial{std::vector{std::move(c)}}; }

RatPolynomial RatPolynomial::monomial(std::size_t power, Rational c) {
    std::vector<Rational> v(power + 1);
    v[power] = std::move(c);
    return RatPolynomial{std::move(v)};
}

void RatPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational RatPolynomial::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational{0};
}

Rational RatPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    normalize();
    return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RatPolynomial{std::move(out)};
}

std::string RatPolynomial::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) {
                out += "-";
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1 && i > 0;
        if (!unit) {
            out += to_string(mag);
        }
        if (i > 0) {
            if (!unit) {
                out += " ";
            }
            out += "X";
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out;
}

Rational poly_eval(const RatPolynomial& p, const Rational& x) { return p(x); }

RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("interpolate: xs and ys differ in length");
    }
    // Lagrange basis.
    RatPolynomial result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPolynomial basis = RatPolynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) {
                continue;
            }
            if (xs[i] == xs[j]) {
                throw std::invalid_argument("interpolate: repeated abscissa");
            }
            basis = basis * RatPolynomial{-xs[j], 1};
            denom *= xs[i] - xs[j];
        }
        result += basis * (ys[i] / denom);
    }
    return result;
}

RatPolynomial discrete_sum(const RatPolynomial& p) {
    if (p.is_zero()) {
        return {};
    }
    // Degree d+1 result, pinned by d+2 sample points x = 1..d+2.
    const std::size_t points = p.coeffs().size() + 1;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    Rational running = 0;
    for (std::size_t x = 1; x <= points; ++x) {
        xs.emplace_back(x);
        ys.push_back(running);
        running += p(Rational(x));
    }
    return interpolate(xs, ys);
}

std::vector<QRPair> derive_QR_table(int max_m) {
    if (max_m < 1) {
        throw std::invalid_argument("derive_QR needs m >= 1");
    }
    std::vector<QRPair> table;
    table.push_back({1, {}, {}});
    if (max_m >= 2) {
        table.push_back({2, RatPolynomial::constant(1), {}});
    }
    for (int m = 2; m < max_m; ++m) {
        const auto& prev = table.back();
        const RatPolynomial sum = prev.q + prev.r;
        const RatPolynomial a = discrete_sum(sum);
        const Rational shift = Rational(fib(static_cast<std::uint64_t>(2 * m + 2)).value()) - 1;
        const Rational half{1, 2};
        QRPair next{m + 1, (a + RatPolynomial::constant(shift) + sum) * half, sum * half};
        table.push_back(std::move(next));
    }
    return table;
}

QRPair derive_QR(int m) { return derive_QR_table(m).back(); }

Integer tm_closed(const QRPair& qr, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("tm_closed needs n >= 0");
    }
    const std::int64_t p = (n + 1) / 2;
    const Rational x{p};
    Rational poly = qr.q(x);
    if (n % 2 == 0) {
        poly += qr.r(x);
    } else {
        poly -= qr.r(x);
    }
    const Rational value =
        Rational(fib(static_cast<std::uint64_t>(n + 2 * qr.m - 1)).value()) -
        Rational(pow2(static_cast<std::uint64_t>(p)).value()) * poly;
    if (!is_integral(value)) {
        throw std::logic_error("tm_closed(m=" + std::to_string(qr.m) + ", n=" + std::to_string(n) +
                               ") is not an integer: " + to_string(value));
    }
    return numerator(value);
}

Integer tm_closed(int m, std::int64_t n) { return tm_closed(derive_QR(m), n); }

}  // namespace bernoulli
