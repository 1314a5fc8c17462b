#include <gtest/gtest.h>

#include "bernoulli/paths.hpp"

using namespace bernoulli;

namespace {

PathSpec spec(int m, Family f, std::int64_t c, std::int64_t l, std::int64_t n) {
    return PathSpec{.order = m, .c = c, .l = l, .family = f, .n = n};
}

std::vector<Natural> nat(std::initializer_list<std::uint64_t> xs) {
    return {xs.begin(), xs.end()};
}

}  // namespace

TEST(Trace, CornerPath) {
    TriangleStore store;
    const auto t = trace(spec(2, Family::S, 2, -1, 4), store);
    using P = std::pair<std::int64_t, std::int64_t>;
    EXPECT_EQ(t.cells, (std::vector<P>{{4, 4}, {3, 2}, {2, 0}}));
    EXPECT_EQ(t.values, nat({16, 7, 1}));
}

TEST(Trace, EdgePath) {
    TriangleStore store;
    const auto t = trace(spec(2, Family::T, -1, -1, 8), store);
    EXPECT_EQ(t.values, nat({1, 8, 22, 26, 16}));
}

TEST(Trace, SingleCell) {
    TriangleStore store;
    const auto t = trace(spec(3, Family::S, 2, -1, 0), store);
    ASSERT_EQ(t.cells.size(), 1u);
    EXPECT_EQ(t.cells[0], std::make_pair(std::int64_t{0}, std::int64_t{0}));
    EXPECT_EQ(t.values, nat({1}));
}

TEST(SumS, KnownValues) {
    TriangleStore store;
    EXPECT_EQ(sum_S(spec(2, Family::S, 2, -1, 7), store), Natural(222));
    EXPECT_EQ(sum_S(spec(2, Family::S, 3, -2, 7), store), Natural(163));
    EXPECT_EQ(sum_S(spec(2, Family::S, 2, -1, 0), store), Natural(1));
}

TEST(SumS, ColumnSequence) {
    TriangleStore store;
    std::vector<Natural> got;
    for (std::int64_t n = 0; n < 8; ++n) {
        got.push_back(sum_S(spec(2, Family::S, 2, -1, n), store));
    }
    EXPECT_EQ(got, nat({1, 2, 5, 11, 24, 51, 107, 222}));
    got.clear();
    for (std::int64_t n = 0; n < 8; ++n) {
        got.push_back(sum_S(spec(2, Family::S, 3, -2, n), store));
    }
    EXPECT_EQ(got, nat({1, 2, 4, 9, 19, 39, 80, 163}));
}

TEST(SumSbar, KnownValues) {
    TriangleStore store;
    EXPECT_EQ(sum_Sbar(spec(2, Family::Sbar, 2, -1, 9), store), Integer(89));
    EXPECT_EQ(sum_Sbar(spec(3, Family::Sbar, 2, -1, 7), store), Integer(329));
    EXPECT_EQ(sum_Sbar(spec(2, Family::Sbar, 2, -1, 0), store), Integer(1));
}

TEST(SumSbar, ColumnSequences) {
    TriangleStore store;
    std::vector<Integer> fibs, third;
    for (std::int64_t n = 0; n < 10; ++n) {
        fibs.push_back(sum_Sbar(spec(2, Family::Sbar, 2, -1, n), store));
    }
    for (std::int64_t n = 0; n < 8; ++n) {
        third.push_back(sum_Sbar(spec(3, Family::Sbar, 2, -1, n), store));
    }
    EXPECT_EQ(fibs, (std::vector<Integer>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89}));
    EXPECT_EQ(third, (std::vector<Integer>{1, 3, 7, 16, 35, 75, 158, 329}));
}

TEST(SumT, KnownValues) {
    TriangleStore store;
    EXPECT_EQ(sum_T(spec(2, Family::T, -1, -1, 8), store), Natural(73));
    EXPECT_EQ(sum_T(spec(3, Family::T, -1, -1, 7), store), Natural(64));
    EXPECT_EQ(sum_T(spec(1, Family::T, -1, -1, 6), store), Natural(13));
}

TEST(SumT, ColumnSequences) {
    TriangleStore store;
    std::vector<Natural> second, third;
    for (std::int64_t n = 0; n <= 8; ++n) {
        second.push_back(sum_T(spec(2, Family::T, -1, -1, n), store));
    }
    for (std::int64_t n = 0; n <= 7; ++n) {
        third.push_back(sum_T(spec(3, Family::T, -1, -1, n), store));
    }
    EXPECT_EQ(second, nat({1, 1, 3, 4, 9, 13, 26, 39, 73}));
    EXPECT_EQ(third, nat({1, 1, 4, 5, 14, 19, 45, 64}));
}

TEST(PathSum, StoreMatchesBruteForce) {
    TriangleStore store;
    for (int m = 1; m <= 4; ++m) {
        for (std::int64_t n = 0; n <= 30; ++n) {
            for (auto [c, l] : {std::pair{2, -1}, {3, -1}, {3, -2}, {4, -3}, {1, -1}}) {
                for (auto f : {Family::S, Family::Sbar}) {
                    const auto s = spec(m, f, c, l, n);
                    ASSERT_EQ(path_sum(s, store), path_sum_bruteforce(s));
                }
            }
            for (auto [c, l] : {std::pair{-1, -1}, {-2, -1}, {-1, -2}, {-3, -2}}) {
                const auto s = spec(m, Family::T, c, l, n);
                ASSERT_EQ(path_sum(s, store), path_sum_bruteforce(s));
            }
        }
    }
}

TEST(PathSpec, Validation) {
    EXPECT_THROW(spec(2, Family::S, -1, -1, 3).validate(), InvalidPathSpec);
    EXPECT_THROW(spec(2, Family::S, 2, 1, 3).validate(), InvalidPathSpec);
    EXPECT_THROW(spec(2, Family::S, 2, -3, 3).validate(), InvalidPathSpec);
    EXPECT_THROW(spec(2, Family::T, 1, -1, 3).validate(), InvalidPathSpec);
    EXPECT_THROW(spec(0, Family::T, -1, -1, 3).validate(), InvalidPathSpec);
    EXPECT_THROW(spec(2, Family::T, -1, -1, -1).validate(), InvalidPathSpec);
    EXPECT_NO_THROW(spec(2, Family::S, 2, -2, 3).validate());
}

TEST(PathSpec, FamilyMismatch) {
    TriangleStore store;
    EXPECT_THROW(sum_T(spec(2, Family::S, 2, -1, 3), store), InvalidPathSpec);
    EXPECT_THROW(sum_S(spec(2, Family::T, -1, -1, 3), store), InvalidPathSpec);
}

TEST(Family, ParseRoundTrip) {
    for (auto f : {Family::S, Family::Sbar, Family::T}) {
        EXPECT_EQ(parse_family(to_string(f)), f);
    }
    EXPECT_THROW(parse_family("X"), InvalidPathSpec);
}
