#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "bernoulli/fibonacci.hpp"

using namespace bernoulli;

TEST(Fib, Values) {
    EXPECT_EQ(fib(0), Natural(0));
    EXPECT_EQ(fib(1), Natural(1));
    EXPECT_EQ(fib(7), Natural(13));
    EXPECT_EQ(fib(11), Natural(89));
    EXPECT_EQ(fib(100).str(), "354224848179261915075");
}

TEST(Fib, Recurrence) {
    for (std::uint64_t n = 2; n <= 500; ++n) {
        ASSERT_EQ(fib(n), fib(n - 1) + fib(n - 2));
    }
}

TEST(FibCache, GrowsOnDemandAndIsThreadSafe) {
    FibCache cache;
    std::vector<Natural> a(300), b(300);
    {
        std::jthread t1([&] {
            for (std::uint64_t n = 0; n < 300; ++n) a[n] = cache.get(n);
        });
        std::jthread t2([&] {
            for (std::uint64_t n = 300; n-- > 0;) b[n] = cache.get(n);
        });
    }
    EXPECT_EQ(a, b);
    EXPECT_GE(cache.size(), 300u);
    EXPECT_EQ(a[299], fib(299));
}

TEST(Telescope, ZeroDifferencesGivePowerOfTwo) {
    const std::vector<Integer> v(8, Integer(0));
    EXPECT_EQ(telescope(1, v, 8), Integer(256));
}

TEST(Telescope, FibonacciInstances) {
    std::vector<Integer> v;
    for (std::uint64_t k = 1; k <= 10; ++k) {
        v.push_back(-fib(k - 1).value());
    }
    EXPECT_EQ(telescope(fib(2).value(), v, 10), Integer(144));

    std::vector<Integer> w;
    for (std::uint64_t k = 1; k <= 5; ++k) {
        w.push_back(fib(2 * k + 1).value());
    }
    EXPECT_EQ(telescope(fib(4).value(), w, 5), Integer(377));
}

TEST(Telescope, RequiresEnoughDifferences) {
    const std::vector<Integer> v(3, Integer(0));
    EXPECT_THROW(telescope(1, v, 4), std::invalid_argument);
    EXPECT_EQ(telescope(5, v, 0), Integer(5));
}

TEST(FibDiag, ShallowDiagonals) {
    EXPECT_EQ(fib_diag(0), Natural(1));
    EXPECT_EQ(fib_diag(6), Natural(13));
    EXPECT_EQ(fib_diag(9), Natural(55));
    for (std::uint64_t n = 0; n <= 200; ++n) {
        ASSERT_EQ(fib_diag(n), fib(n + 1));
    }
}
