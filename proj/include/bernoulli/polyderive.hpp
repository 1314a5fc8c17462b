#pragma once

// Rational polynomials and the order-by-order construction of the
// polynomials Q[m], R[m] in
//
//     T[m]_n(-1,-1) = F_{n+2m-1} - 2^p (Q[m](p) + (-1)^n R[m](p)),  p = floor((n+1)/2).
//
// Starting from Q[1] = R[1] = 0 and Q[2] = 1, R[2] = 0:
//
//     A(X)     = sum_{k=1..X-1} (Q[m](k) + R[m](k))
//     Q[m+1]   = (A + F_{2m+2} - 1 + Q[m] + R[m]) / 2
//     R[m+1]   = (Q[m] + R[m]) / 2

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bernoulli/exactnum.hpp"

namespace bernoulli {

class RatPolynomial {
  public:
    RatPolynomial() = default;
    /// Coefficients in ascending powers; trailing zeros are dropped.
    explicit RatPolynomial(std::vector<Rational> coeffs);
    RatPolynomial(std::initializer_list<Rational> coeffs);

    static RatPolynomial constant(Rational c);
    static RatPolynomial monomial(std::size_t power, Rational c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Degree with the zero polynomial counted as 0, for (.)^+ degree laws.
    std::size_t degree_or_zero() const noexcept { return is_zero() ? 0 : coeffs_.size() - 1; }

    Rational coeff(std::size_t power) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const;

    RatPolynomial& operator+=(const RatPolynomial& rhs);
    RatPolynomial& operator*=(const Rational& s);
    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
    friend RatPolynomial operator*(RatPolynomial a, const Rational& s) { return a *= s; }
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);

    friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

    /// Descending powers, e.g. "1/48 X^3 + 5/8 X^2 + 317/48 X + 27".
    std::string str() const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

Rational poly_eval(const RatPolynomial& p, const Rational& x);

/// Unique polynomial through (xs[i], ys[i]); xs must be distinct.
RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// S with S(x) = sum_{k=1..x-1} P(k) for every integer x >= 1.
RatPolynomial discrete_sum(const RatPolynomial& p);

struct QRPair {
    int m = 1;
    RatPolynomial q;
    RatPolynomial r;
};

QRPair derive_QR(int m);

/// derive_QR(1) .. derive_QR(max_m), built in a single pass.
std::vector<QRPair> derive_QR_table(int max_m);

/// F_{n+2m-1} - 2^p (Q(p) + (-1)^n R(p)); throws std::logic_error if the
/// rational result is not an integer.
Integer tm_closed(const QRPair& qr, std::int64_t n);
Integer tm_closed(int m, std::int64_t n);

}  // namespace bernoulli
