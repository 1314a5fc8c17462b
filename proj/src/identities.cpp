#include "bernoulli/identities.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "bernoulli/fibonacci.hpp"
#include "bernoulli/lambda.hpp"
#include "bernoulli/paths.hpp"
#include "bernoulli/polyderive.hpp"

namespace bernoulli {

namespace {

using u64 = std::uint64_t;

Integer F(std::int64_t n) { return fib(static_cast<u64>(n)).value(); }
Integer P2(std::int64_t n) { return pow2(static_cast<u64>(n)).value(); }

// ---- brute-force oracles -------------------------------------------------

Integer bf_path(int m, std::int64_t c, std::int64_t l, Family family, std::int64_t n) {
    return path_sum_bruteforce(PathSpec{.order = m, .c = c, .l = l, .family = family, .n = n});
}

Integer bf_T(int m, std::int64_t n) { return bf_path(m, -1, -1, Family::T, n); }

// sum_{k=0..floor(n/c)} sum_{q=0..n-kc} C(n-(c-1)k, q), written out directly.
Integer double_sum_corner(std::int64_t c, std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n / c; ++k) {
        for (const auto& b : binomial_row(n - (c - 1) * k, n - k * c)) {
            acc += b.value();
        }
    }
    return acc;
}

// sum_k sum_{q<=n-2k} sum_{r<=q} C(n-k, r).
Integer triple_sum_corner(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n / 2; ++k) {
        Integer inner = 0;
        for (const auto& b : binomial_row(n - k, n - 2 * k)) {
            inner += b.value();
            acc += inner;
        }
    }
    return acc;
}

// sum_{k<=n/2} sum_{q<=k} C(n-k, q).
Integer double_sum_edge(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n / 2; ++k) {
        for (const auto& b : binomial_row(n - k, k)) {
            acc += b.value();
        }
    }
    return acc;
}

// sum_{k<=n/2} sum_{q<=k} sum_{r<=q} C(n-k, r).
Integer triple_sum_edge(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n / 2; ++k) {
        Integer inner = 0;
        for (const auto& b : binomial_row(n - k, k)) {
            inner += b.value();
            acc += inner;
        }
    }
    return acc;
}

// ---- closed forms --------------------------------------------------------

// F_{n+off} - 2^p * (poly(p) + (-1)^n alt(p)), p = floor((n+1)/2), in rationals.
Integer fib_minus_pow2_poly(std::int64_t n, std::int64_t off, const RatPolynomial& poly,
                            const RatPolynomial& alt) {
    const std::int64_t p = (n + 1) / 2;
    const Rational x{p};
    const Rational sign = n % 2 == 0 ? 1 : -1;
    const Rational v = Rational(F(n + off)) - Rational(P2(p)) * (poly(x) + sign * alt(x));
    return to_integer(v);
}

Rational q(std::int64_t num, std::int64_t den) { return Rational{num, den}; }

}  // namespace

std::pair<std::int64_t, std::int64_t> unflatten_pq(std::int64_t n) {
    std::int64_t p = 1;
    while (n >= p) {
        n -= p;
        ++p;
    }
    return {p, n + 1};
}

IdentityRegistry::IdentityRegistry(const TriangleStore& store) {
    const TriangleStore* st = &store;
    auto T = [st](int m, std::int64_t n) {
        return sum_T(PathSpec{.order = m, .c = -1, .l = -1, .family = Family::T, .n = n}, *st)
            .value();
    };
    auto path = [st](int m, std::int64_t c, std::int64_t l, Family f, std::int64_t n) {
        return path_sum(PathSpec{.order = m, .c = c, .l = l, .family = f, .n = n}, *st);
    };

    auto add = [this](std::string name, std::string statement, std::int64_t from,
                      std::function<Integer(std::int64_t)> closed,
                      std::function<Integer(std::int64_t)> oracle) {
        records_.push_back({std::move(name), std::move(statement), std::move(closed),
                            std::move(oracle), from});
    };

    add("theorem1", "sum_{k<=n/2} sum_{q<=n-2k} C(n-k,q) = 2^{n+1} - F_{n+2}", 0,
        [](std::int64_t n) { return Integer(P2(n + 1) - F(n + 2)); },
        [](std::int64_t n) { return double_sum_corner(2, n); });

    add("S2diff", "S[2]_n(2,-1) - 2 S[2]_{n-1}(2,-1) = F_{n-1}", 1,
        [](std::int64_t n) { return F(n - 1); },
        [](std::int64_t n) {
            return Integer(bf_path(2, 2, -1, Family::S, n) - 2 * bf_path(2, 2, -1, Family::S, n - 1));
        });

    add("relB2diff", "B_{p,q} - 2 B_{p-1,q-1} = C(p-1,q), n indexes (p,q) with 1<=q<=p", 0,
        [](std::int64_t n) {
            const auto [p, qq] = unflatten_pq(n);
            return binomial(p - 1, qq).value();
        },
        [](std::int64_t n) {
            const auto [p, qq] = unflatten_pq(n);
            return Integer(cell_bruteforce(2, p, qq).value() -
                           2 * cell_bruteforce(2, p - 1, qq - 1).value());
        });

    for (std::int64_t c = 2; c <= 8; ++c) {
        add("corollary1_c" + std::to_string(c),
            "sum_{k<=n/c} sum_{q<=n-kc} C(n-(c-1)k,q) = 2^n + sum_k 2^{n-k} lambda_k(c), c=" +
                std::to_string(c),
            0,
            [c](std::int64_t n) {
                Integer acc = 1;
                for (std::int64_t k = 1; k <= n; ++k) {
                    acc = 2 * acc + lambda_explicit(c, k).value();
                }
                return acc;
            },
            [c](std::int64_t n) { return double_sum_corner(c, n); });
    }

    add("T2even", "T[2]_{2p} = T[2]_{2p-1} + F_{2p+1}, n = p", 1,
        [T](std::int64_t p) { return Integer(T(2, 2 * p - 1) + F(2 * p + 1)); },
        [](std::int64_t p) { return bf_T(2, 2 * p); });

    add("T2odd", "T[2]_{2p+1} = T[2]_{2p} + T[2]_{2p-1}, n = p", 1,
        [T](std::int64_t p) { return Integer(T(2, 2 * p) + T(2, 2 * p - 1)); },
        [](std::int64_t p) { return bf_T(2, 2 * p + 1); });

    add("resT2", "sum_{k<=n/2} sum_{q<=k} C(n-k,q) = F_{n+3} - 2^{floor((n+1)/2)}", 0,
        [](std::int64_t n) { return Integer(F(n + 3) - P2((n + 1) / 2)); },
        [](std::int64_t n) { return double_sum_edge(n); });

    add("rel8", "Sbar[3]_n(2,-1) - 2 Sbar[3]_{n-1}(2,-1) = F_n", 1,
        [](std::int64_t n) { return F(n); },
        [](std::int64_t n) {
            return Integer(bf_path(3, 2, -1, Family::Sbar, n) -
                           2 * bf_path(3, 2, -1, Family::Sbar, n - 1));
        });

    add("S3barClosed", "Sbar[3]_n(2,-1) = 3 * 2^n - F_{n+3}", 0,
        [](std::int64_t n) { return Integer(3 * P2(n) - F(n + 3)); },
        [](std::int64_t n) { return bf_path(3, 2, -1, Family::Sbar, n); });

    add("theoremS3", "sum_k sum_{q<=n-2k} sum_{r<=q} C(n-k,r) = F_{n+3} + (n-1) 2^n", 0,
        [](std::int64_t n) { return Integer(F(n + 3) + (n - 1) * P2(n)); },
        [](std::int64_t n) { return triple_sum_corner(n); });

    for (int m = 2; m <= 6; ++m) {
        add("TmOdd_m" + std::to_string(m),
            "T[m]_{2p+1} = T[m]_{2p} + T[m]_{2p-1}, m=" + std::to_string(m) + ", n = p", 1,
            [T, m](std::int64_t p) { return Integer(T(m, 2 * p) + T(m, 2 * p - 1)); },
            [m](std::int64_t p) { return bf_T(m, 2 * p + 1); });
        add("TmEven_m" + std::to_string(m),
            "T[m]_{2p} = T[m]_{2p-1} + T[m-1]_{2p}, m=" + std::to_string(m) + ", n = p", 1,
            [T, m](std::int64_t p) { return Integer(T(m, 2 * p - 1) + T(m - 1, 2 * p)); },
            [m](std::int64_t p) { return bf_T(m, 2 * p); });
    }

    add("resT3", "T[3]_n = F_{n+5} - 2^p (p/2 + 7/2 + (-1)^n/2)", 0,
        [](std::int64_t n) {
            return fib_minus_pow2_poly(n, 5, RatPolynomial{q(7, 2), q(1, 2)},
                                       RatPolynomial{q(1, 2)});
        },
        [](std::int64_t n) { return triple_sum_edge(n); });

    add("T4closed", "T[4]_n = F_{n+7} - 2^p (p^2/8 + 17p/8 + 10 + (-1)^n (p/4 + 2))", 0,
        [](std::int64_t n) {
            return fib_minus_pow2_poly(n, 7, RatPolynomial{q(10, 1), q(17, 8), q(1, 8)},
                                       RatPolynomial{q(2, 1), q(1, 4)});
        },
        [](std::int64_t n) { return bf_T(4, n); });

    add("T5closed",
        "T[5]_n = F_{n+9} - 2^p (p^3/48 + 5p^2/8 + 317p/48 + 27 + (-1)^n (p^2/16 + 19p/16 + 6))", 0,
        [](std::int64_t n) {
            return fib_minus_pow2_poly(
                n, 9, RatPolynomial{q(27, 1), q(317, 48), q(5, 8), q(1, 48)},
                RatPolynomial{q(6, 1), q(19, 16), q(1, 16)});
        },
        [](std::int64_t n) { return bf_T(5, n); });

    auto qr = std::make_shared<const std::vector<QRPair>>(derive_QR_table(10));
    for (int m = 1; m <= 10; ++m) {
        add("theoremTm_m" + std::to_string(m),
            "T[m]_n = F_{n+2m-1} - 2^p (Q[m](p) + (-1)^n R[m](p)), m=" + std::to_string(m), 0,
            [qr, m](std::int64_t n) { return tm_closed((*qr)[static_cast<std::size_t>(m - 1)], n); },
            [m](std::int64_t n) { return bf_T(m, n); });
    }

    add("Sbar31", "Sbar[2]_n(3,-1): store path sum vs nested binomial sums", 0,
        [path](std::int64_t n) { return path(2, 3, -1, Family::Sbar, n); },
        [](std::int64_t n) { return bf_path(2, 3, -1, Family::Sbar, n); });

    add("Sbar41", "Sbar[2]_n(4,-1): store path sum vs nested binomial sums", 0,
        [path](std::int64_t n) { return path(2, 4, -1, Family::Sbar, n); },
        [](std::int64_t n) { return bf_path(2, 4, -1, Family::Sbar, n); });

    add("Sbar31diff3", "Sbar[3]_n(3,-1) - 2 Sbar[3]_{n-1}(3,-1): store vs nested binomial sums", 1,
        [path](std::int64_t n) {
            return Integer(path(3, 3, -1, Family::Sbar, n) - 2 * path(3, 3, -1, Family::Sbar, n - 1));
        },
        [](std::int64_t n) {
            return Integer(bf_path(3, 3, -1, Family::Sbar, n) -
                           2 * bf_path(3, 3, -1, Family::Sbar, n - 1));
        });
}

const IdentityRecord& IdentityRegistry::find(std::string_view name) const {
    const auto it = std::find_if(records_.begin(), records_.end(),
                                 [&](const IdentityRecord& r) { return r.name == name; });
    if (it == records_.end()) {
        throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
    }
    return *it;
}

namespace {

struct Chunk {
    const IdentityRecord* record;
    std::int64_t first;
    std::int64_t last;
};

struct ChunkResult {
    std::vector<Mismatch> failures;
    std::chrono::nanoseconds elapsed{0};
};

ChunkResult run_chunk(const Chunk& chunk) {
    const auto start = std::chrono::steady_clock::now();
    ChunkResult out;
    for (std::int64_t n = chunk.first; n <= chunk.last; ++n) {
        Integer closed = chunk.record->closed_form(n);
        Integer oracle = chunk.record->oracle(n);
        if (closed != oracle) {
            out.failures.push_back({n, std::move(closed), std::move(oracle)});
        }
    }
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

void check_range(const IdentityRecord& r, std::int64_t n_max) {
    if (n_max < r.valid_from) {
        throw std::invalid_argument("identity '" + r.name + "' needs n_max >= " +
                                    std::to_string(r.valid_from));
    }
}

// Splits [first, last] into contiguous chunks; more chunks than workers so
// late, expensive n values spread across threads.
void split(const IdentityRecord& r, std::int64_t n_max, unsigned jobs, std::vector<Chunk>& out) {
    const std::int64_t first = r.valid_from;
    const std::int64_t len = n_max - first + 1;
    const std::int64_t parts = jobs <= 1 ? 1 : std::min<std::int64_t>(len, 4 * jobs);
    for (std::int64_t i = 0; i < parts; ++i) {
        const std::int64_t a = first + len * i / parts;
        const std::int64_t b = first + len * (i + 1) / parts - 1;
        if (a <= b) {
            out.push_back({&r, a, b});
        }
    }
}

std::vector<ChunkResult> run_all(const std::vector<Chunk>& chunks, unsigned jobs) {
    std::vector<ChunkResult> results(chunks.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, chunks.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            results[i] = run_chunk(chunks[i]);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < chunks.size();) {
                try {
                    results[i] = run_chunk(chunks[i]);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
    return results;
}

std::vector<VerifyReport> merge(const std::vector<Chunk>& chunks,
                                std::vector<ChunkResult>& results) {
    std::map<std::string, VerifyReport> by_name;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        const auto& c = chunks[i];
        auto [it, fresh] = by_name.try_emplace(c.record->name);
        auto& rep = it->second;
        if (fresh) {
            rep.name = c.record->name;
            rep.first = c.first;
            rep.last = c.last;
        }
        rep.first = std::min(rep.first, c.first);
        rep.last = std::max(rep.last, c.last);
        rep.elapsed += results[i].elapsed;
        for (auto& f : results[i].failures) {
            rep.failures.push_back(std::move(f));
        }
    }
    std::vector<VerifyReport> out;
    out.reserve(by_name.size());
    for (auto& [name, rep] : by_name) {
        std::sort(rep.failures.begin(), rep.failures.end(),
                  [](const Mismatch& a, const Mismatch& b) { return a.n < b.n; });
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace

VerifyReport verify(const IdentityRecord& record, std::int64_t n_max, unsigned jobs) {
    check_range(record, n_max);
    std::vector<Chunk> chunks;
    split(record, n_max, jobs, chunks);
    auto results = run_all(chunks, jobs);
    return std::move(merge(chunks, results).front());
}

VerifyReport verify(const IdentityRegistry& registry, std::string_view name, std::int64_t n_max,
                    unsigned jobs) {
    return verify(registry.find(name), n_max, jobs);
}

std::vector<VerifyReport> verify_all(const IdentityRegistry& registry, std::int64_t n_max,
                                     unsigned jobs) {
    std::vector<Chunk> chunks;
    for (const auto& r : registry.all()) {
        check_range(r, n_max);
        split(r, n_max, jobs, chunks);
    }
    auto results = run_all(chunks, jobs);
    return merge(chunks, results);
}

std::vector<std::string> format_report(const VerifyReport& report) {
    std::vector<std::string> lines;
    if (report.ok()) {
        lines.push_back(report.name + " n=[" + std::to_string(report.first) + ".." +
                        std::to_string(report.last) + "] OK");
        return lines;
    }
    for (const auto& f : report.failures) {
        lines.push_back(report.name + " FAIL at n=" + std::to_string(f.n) +
                        ": closed=" + f.closed.str() + " oracle=" + f.oracle.str());
    }
    return lines;
}

}  // namespace bernoulli
