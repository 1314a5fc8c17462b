#include <gtest/gtest.h>

#include "bernoulli/paths.hpp"
#include "bernoulli/polyderive.hpp"

using namespace bernoulli;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST(RatPolynomial, Evaluation) {
    const RatPolynomial a{q(7, 2), q(1, 2)};
    EXPECT_EQ(a(3), Rational(5));
    EXPECT_EQ(RatPolynomial{}(17), Rational(0));
    const RatPolynomial b{10, q(17, 8), q(1, 8)};
    EXPECT_EQ(poly_eval(b, 2), q(59, 4));
}

TEST(RatPolynomial, NormalizesTrailingZeros) {
    const RatPolynomial p{1, 2, 0, 0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(RatPolynomial({0, 0}).degree(), -1);
    EXPECT_TRUE(RatPolynomial({0}).is_zero());
    EXPECT_EQ(RatPolynomial{}.degree_or_zero(), 0u);
    EXPECT_EQ(p.coeff(5), Rational(0));
}

TEST(RatPolynomial, Arithmetic) {
    const RatPolynomial x = RatPolynomial::monomial(1);
    const auto sq = (x + RatPolynomial::constant(1)) * (x + RatPolynomial::constant(-1));
    EXPECT_EQ(sq, (RatPolynomial{-1, 0, 1}));
    EXPECT_EQ(x * q(1, 2) + x * q(1, 2), x);
    EXPECT_TRUE((x + x * q(-1)).is_zero());
}

TEST(RatPolynomial, Formatting) {
    EXPECT_EQ((RatPolynomial{10, q(17, 8), q(1, 8)}).str(), "1/8 X^2 + 17/8 X + 10");
    EXPECT_EQ((RatPolynomial{q(7, 2), q(1, 2)}).str(), "1/2 X + 7/2");
    EXPECT_EQ(RatPolynomial{}.str(), "0");
    EXPECT_EQ((RatPolynomial{-1, 0, 1}).str(), "X^2 - 1");
    EXPECT_EQ((RatPolynomial{0, -1}).str(), "-X");
}

TEST(Interpolate, RecoversPolynomial) {
    const RatPolynomial p{q(3, 7), -2, 0, q(5, 3)};
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 4; ++i) {
        xs.emplace_back(i * 2 - 3);
        ys.push_back(p(xs.back()));
    }
    EXPECT_EQ(interpolate(xs, ys), p);
    EXPECT_THROW(interpolate({1, 1}, {2, 3}), std::invalid_argument);
    EXPECT_THROW(interpolate({1, 2}, {2}), std::invalid_argument);
}

TEST(DiscreteSum, KnownSums) {
    EXPECT_EQ(discrete_sum(RatPolynomial{1}), (RatPolynomial{-1, 1}));
    EXPECT_EQ(discrete_sum(RatPolynomial{0, 1}), (RatPolynomial{0, q(-1, 2), q(1, 2)}));
    EXPECT_EQ(discrete_sum(RatPolynomial{4, q(1, 2)}), (RatPolynomial{-4, q(15, 4), q(1, 4)}));
    EXPECT_TRUE(discrete_sum(RatPolynomial{}).is_zero());
}

TEST(DiscreteSum, MatchesDirectSummation) {
    const RatPolynomial p{q(1, 3), -1, q(2, 5), 1};
    const auto s = discrete_sum(p);
    Rational acc = 0;
    for (int x = 1; x <= 12; ++x) {
        EXPECT_EQ(s(x), acc) << x;
        acc += p(x);
    }
}

TEST(DeriveQR, LowOrders) {
    EXPECT_TRUE(derive_QR(1).q.is_zero());
    EXPECT_TRUE(derive_QR(1).r.is_zero());
    EXPECT_EQ(derive_QR(2).q, RatPolynomial{1});
    EXPECT_TRUE(derive_QR(2).r.is_zero());
    EXPECT_EQ(derive_QR(3).q, (RatPolynomial{q(7, 2), q(1, 2)}));
    EXPECT_EQ(derive_QR(3).r, RatPolynomial{q(1, 2)});
    EXPECT_EQ(derive_QR(4).q, (RatPolynomial{10, q(17, 8), q(1, 8)}));
    EXPECT_EQ(derive_QR(4).r, (RatPolynomial{2, q(1, 4)}));
    EXPECT_EQ(derive_QR(5).q, (RatPolynomial{27, q(317, 48), q(5, 8), q(1, 48)}));
    EXPECT_EQ(derive_QR(5).r, (RatPolynomial{6, q(19, 16), q(1, 16)}));
}

TEST(DeriveQR, DegreeLaws) {
    const auto table = derive_QR_table(10);
    ASSERT_EQ(table.size(), 10u);
    for (const auto& qr : table) {
        EXPECT_EQ(qr.q.degree_or_zero(), static_cast<std::size_t>(positive_part(qr.m - 2))) << qr.m;
        EXPECT_EQ(qr.r.degree_or_zero(), static_cast<std::size_t>(positive_part(qr.m - 3))) << qr.m;
        EXPECT_EQ(qr.q, derive_QR(qr.m).q);
    }
    EXPECT_THROW(derive_QR(0), std::invalid_argument);
}

TEST(TmClosed, KnownValues) {
    EXPECT_EQ(tm_closed(1, 6), Integer(13));
    EXPECT_EQ(tm_closed(2, 8), Integer(73));
    EXPECT_EQ(tm_closed(3, 7), Integer(64));
    EXPECT_THROW(tm_closed(2, -1), std::invalid_argument);
}

TEST(TmClosed, MatchesEdgePathSums) {
    TriangleStore store;
    const auto table = derive_QR_table(10);
    for (const auto& qr : table) {
        for (std::int64_t n = 0; n <= 120; ++n) {
            const PathSpec s{.order = qr.m, .c = -1, .l = -1, .family = Family::T, .n = n};
            ASSERT_EQ(tm_closed(qr, n), sum_T(s, store).value()) << "m=" << qr.m << " n=" << n;
        }
    }
}

TEST(TmClosed, NonIntegralResultIsRejected) {
    QRPair bogus{3, RatPolynomial{q(1, 3)}, RatPolynomial{}};
    EXPECT_THROW(tm_closed(bogus, 0), std::logic_error);
}
