// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bernoulli/fibonacci.hpp"
#include "bernoulli/identities.hpp"
#include "bernoulli/lambda.hpp"
#include "bernoulli/oeis.hpp"
#include "bernoulli/paths.hpp"
#include "bernoulli/polyderive.hpp"
#include "bernoulli/triangle.hpp"

using namespace bernoulli;
namespace fs = std::filesystem;

namespace {

// A check fills `detail` and returns false on the first failure.
using Check = std::function<bool(std::ostringstream& detail)>;

bool run(const std::string& id, const std::string& title, const Check& check) {
    std::ostringstream detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = check(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cout << id << ' ' << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << detail.str()
              << (detail.str().empty() ? "" : "; ") << dt.count() << " s]\n";
    return ok;
}

bool identities_hold(std::ostringstream& d, const std::vector<std::string>& names,
                     std::int64_t n_max) {
    TriangleStore store;
    const IdentityRegistry registry(store);
    for (const auto& name : names) {
        const auto rep = verify(registry, name, n_max);
        if (!rep.ok()) {
            d << format_report(rep).front();
            return false;
        }
    }
    d << names.size() << " identities, n<=" << n_max;
    return true;
}

PathSpec spec(int m, Family f, std::int64_t c, std::int64_t l, std::int64_t n) {
    return PathSpec{.order = m, .c = c, .l = l, .family = f, .n = n};
}

template <class Fn>
bool column_is(std::ostringstream& d, const std::string& label, std::vector<long> want, Fn value) {
    for (std::size_t i = 0; i < want.size(); ++i) {
        const Integer got = value(static_cast<std::int64_t>(i));
        if (got != want[i]) {
            d << label << " entry " << i << ": got " << got << ", want " << want[i];
            return false;
        }
    }
    return true;
}

bool row_is(std::ostringstream& d, const std::string& label, const TriangleStore& store, int m,
            std::int64_t n, std::vector<long> want) {
    return column_is(d, label, std::move(want),
                     [&](std::int64_t k) { return store.cell(m, n, k).value(); });
}

bool ac1(std::ostringstream& d) {
    const auto start = std::chrono::steady_clock::now();
    const bool ok = identities_hold(d, {"theorem1"}, 300);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    if (dt.count() >= 10.0) {
        d << "; too slow: " << dt.count() << " s";
        return false;
    }
    return ok;
}

bool ac5(std::ostringstream& d) {
    const auto table = derive_QR_table(10);
    for (const auto& qr : table) {
        const auto dq = static_cast<std::size_t>(positive_part(qr.m - 2));
        const auto dr = static_cast<std::size_t>(positive_part(qr.m - 3));
        if (qr.q.degree_or_zero() != dq || qr.r.degree_or_zero() != dr) {
            d << "degree law broken at m=" << qr.m;
            return false;
        }
    }
    const auto r = [](long p, long q) { return Rational(p, q); };
    const std::vector<std::pair<RatPolynomial, RatPolynomial>> reference{
        {RatPolynomial{1}, RatPolynomial{}},
        {RatPolynomial{r(7, 2), r(1, 2)}, RatPolynomial{r(1, 2)}},
        {RatPolynomial{10, r(17, 8), r(1, 8)}, RatPolynomial{2, r(1, 4)}},
        {RatPolynomial{27, r(317, 48), r(5, 8), r(1, 48)}, RatPolynomial{6, r(19, 16), r(1, 16)}},
    };
    for (int m = 2; m <= 5; ++m) {
        const auto& qr = table[static_cast<std::size_t>(m - 1)];
        const auto& [q, rr] = reference[static_cast<std::size_t>(m - 2)];
        if (qr.q != q || qr.r != rr) {
            d << "m=" << m << ": Q = " << qr.q.str() << ", R = " << qr.r.str();
            return false;
        }
    }
    TriangleStore store;
    for (const auto& qr : table) {
        for (std::int64_t n = 0; n <= 120; ++n) {
            const auto t = sum_T(spec(qr.m, Family::T, -1, -1, n), store);
            if (tm_closed(qr, n) != t.value()) {
                d << "tm_closed(" << qr.m << "," << n << ") != " << t;
                return false;
            }
        }
    }
    d << "m=1..10, n<=120";
    return true;
}

bool ac6(std::ostringstream& d) {
    TriangleStore store;
    for (std::int64_t c = 2; c <= 8; ++c) {
        const auto seq = LambdaSeq::generate(c, 200);
        for (std::int64_t n = 1; n <= 200; ++n) {
            const auto& rec = seq.at(n);
            if (lambda_rec(c, n) != rec || lambda_explicit(c, n) != rec ||
                lambda_diff(c, n, store) != rec.value()) {
                d << "routes disagree at c=" << c << " n=" << n;
                return false;
            }
            if (c == 2 && rec != fib(static_cast<std::uint64_t>(n - 1))) {
                d << "lambda_" << n << "(2) != F_" << n - 1;
                return false;
            }
        }
        for (std::int64_t n = 0; n <= 120; ++n) {
            if (s2_reconstruct(c, n) != sum_S(spec(2, Family::S, c, 1 - c, n), store)) {
                d << "reconstruction differs at c=" << c << " n=" << n;
                return false;
            }
        }
    }
    d << "c=2..8";
    return true;
}

bool ac7(std::ostringstream& d) {
    TriangleStore store;
    auto S = [&](int m, std::int64_t c, std::int64_t l) {
        return [&, m, c, l](std::int64_t n) { return path_sum(spec(m, Family::S, c, l, n), store); };
    };
    auto Sbar = [&](int m, std::int64_t c, std::int64_t l) {
        return [&, m, c, l](std::int64_t n) { return path_sum(spec(m, Family::Sbar, c, l, n), store); };
    };
    auto T = [&](int m) {
        return [&, m](std::int64_t n) { return path_sum(spec(m, Family::T, -1, -1, n), store); };
    };
    const bool ok =
        row_is(d, "B[2] row 9", store, 2, 9, {1, 10, 46, 130, 256, 382, 466, 502, 511, 512}) &&
        column_is(d, "Sbar[2](2,-1)", {1, 2, 3, 5, 8, 13, 21, 34, 55, 89}, Sbar(2, 2, -1)) &&
        column_is(d, "S[2](2,-1)", {1, 2, 5, 11, 24, 51, 107, 222}, S(2, 2, -1)) &&
        row_is(d, "B[3] row 9", store, 3, 9, {1, 11, 57, 187, 443, 825, 1291, 1793, 2304, 2816}) &&
        column_is(d, "S[2](3,-2)", {1, 2, 4, 9, 19, 39, 80, 163}, S(2, 3, -2)) &&
        column_is(d, "T[2](-1,-1)", {1, 1, 3, 4, 9, 13, 26, 39, 73}, T(2)) &&
        column_is(d, "Sbar[3](2,-1)", {1, 3, 7, 16, 35, 75, 158, 329}, Sbar(3, 2, -1)) &&
        column_is(d, "T[3](-1,-1)", {1, 1, 4, 5, 14, 19, 45, 64}, T(3));
    if (ok) {
        d << "8 tables";
    }
    return ok;
}

bool ac8(std::ostringstream& d) {
    TriangleStore store;
    std::size_t cells = 0;
    for (int m = 1; m <= 4; ++m) {
        for (std::int64_t n = 0; n <= 24; ++n) {
            for (std::int64_t k = 0; k <= n; ++k, ++cells) {
                if (store.cell(m, n, k) != cell_bruteforce(m, n, k)) {
                    d << "cell(" << m << "," << n << "," << k << ")";
                    return false;
                }
            }
        }
    }
    d << cells << " cells";
    return true;
}

bool ac9(std::ostringstream& d) {
    std::mt19937_64 rng(0xB3A7);
    std::uniform_int_distribution<long long> dist(-1'000'000'000'000LL, 1'000'000'000'000LL);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Integer> u(51);
        for (auto& x : u) {
            x = Integer(dist(rng)) * Integer(dist(rng));
        }
        std::vector<Integer> v;
        for (std::size_t k = 1; k <= 50; ++k) {
            v.push_back(u[k] - 2 * u[k - 1]);
        }
        for (std::size_t n = 0; n <= 50; ++n) {
            if (telescope(u[0], v, n) != u[n]) {
                d << "trial " << trial << " n=" << n;
                return false;
            }
        }
    }
    std::vector<Integer> v3, v4;
    for (std::uint64_t k = 1; k <= 200; ++k) {
        v3.push_back(-fib(k - 1).value());
        v4.push_back(fib(2 * k + 1).value());
    }
    for (std::uint64_t n = 0; n <= 200; ++n) {
        if (telescope(fib(2).value(), v3, n) != fib(n + 2).value()) {
            d << "F_{n+2} relation fails at n=" << n;
            return false;
        }
        if (telescope(3, v4, n) != fib(2 * n + 4).value()) {
            d << "F_{2n+4} relation fails at n=" << n;
            return false;
        }
    }
    d << "100 random sequences, relations n<=200";
    return true;
}

bool ac10(std::ostringstream& d) {
    const fs::path snapshots = BERNOULLI_SNAPSHOT_DIR;
    TriangleStore store;
    const auto tmp = fs::temp_directory_path() / "bernoulli_acceptance_bfiles";
    fs::create_directories(tmp);
    bool ok = true;
    for (const auto& b : oeis::bindings()) {
        const auto rep = oeis::crosscheck(b, 50, store, oeis::load_snapshot(b.id, snapshots));
        if (!rep.ok()) {
            d << format_report(rep).front();
            ok = false;
            break;
        }
        const auto path = tmp / oeis::bfile_name(b.id);
        const auto written = oeis::export_bfile(b, 50, store, path);
        std::ifstream in(path, std::ios::binary);
        const std::string body((std::istreambuf_iterator<char>(in)), {});
        if (oeis::parse_bfile(body) != written || oeis::format_bfile(written) != body) {
            d << b.id << " b-file round trip differs";
            ok = false;
            break;
        }
    }
    fs::remove_all(tmp);
    if (ok) {
        d << oeis::bindings().size() << " bindings x 50 terms, offline";
    }
    return ok;
}

}  // namespace

int main() {
    bool all = true;
    all &= run("AC1", "double binomial sum = 2^{n+1} - F_{n+2}, n<=300, under 10 s", ac1);
    all &= run("AC2", "double sum = F_{n+3} - 2^{floor((n+1)/2)}, n<=300",
               [](auto& d) { return identities_hold(d, {"resT2"}, 300); });
    all &= run("AC3", "triple sum = F_{n+3} + (n-1) 2^n, n<=300",
               [](auto& d) { return identities_hold(d, {"theoremS3"}, 300); });
    all &= run("AC4", "order 3/4/5 edge closed forms, integral, n<=200",
               [](auto& d) { return identities_hold(d, {"resT3", "T4closed", "T5closed"}, 200); });
    all &= run("AC5", "derived Q/R: degrees, reference m=2..5, tm_closed = T sums", ac5);
    all &= run("AC6", "lambda routes agree, lambda(2) = Fibonacci, reconstruction", ac6);
    all &= run("AC7", "worked rows and path-sum columns", ac7);
    all &= run("AC8", "memoized cells = nested-sum oracle, m<=4, n<=24", ac8);
    all &= run("AC9", "telescoping inversion and Fibonacci relations", ac9);
    all &= run("AC10", "OEIS bindings vs snapshots, b-file round trip", ac10);
    std::cout << (all ? "ALL PASS" : "SOME FAILED") << '\n';
    return all ? 0 : 1;
}
