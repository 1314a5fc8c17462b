// bernoulli: triangles, path sums, lambda sequences, identity sweeps,
// Q/R polynomial derivation and OEIS export / crosscheck.
//
// Exit status: 0 success, 1 verification or crosscheck failure, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bernoulli/identities.hpp"
#include "bernoulli/lambda.hpp"
#include "bernoulli/oeis.hpp"
#include "bernoulli/paths.hpp"
#include "bernoulli/polyderive.hpp"
#include "bernoulli/simd/limb_kernels.hpp"
#include "bernoulli/triangle.hpp"

#ifndef BERNOULLI_SNAPSHOT_DIR
#define BERNOULLI_SNAPSHOT_DIR "data/oeis"
#endif

namespace {

using namespace bernoulli;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int print_triangle(int order, std::int64_t rows, bool tsv) {
    TriangleStore store;
    std::vector<std::vector<std::string>> table;
    std::size_t width = 1;
    for (std::int64_t n = 0; n <= rows; ++n) {
        auto& line = table.emplace_back();
        for (const auto& v : store.row(order, n)) {
            line.push_back(v.str());
            width = std::max(width, line.back().size());
        }
    }
    const auto label_width = std::to_string(rows).size();
    for (std::int64_t n = 0; n <= rows; ++n) {
        const auto& line = table[static_cast<std::size_t>(n)];
        if (tsv) {
            std::cout << "n=" << n;
            for (const auto& v : line) {
                std::cout << '\t' << v;
            }
        } else {
            const auto label = std::to_string(n);
            std::cout << std::string(label_width - label.size(), ' ') << label << " |";
            for (const auto& v : line) {
                std::cout << ' ' << std::string(width - v.size(), ' ') << v;
            }
        }
        std::cout << '\n';
    }
    return 0;
}

int print_pathsum(const PathSpec& spec, bool with_trace) {
    TriangleStore store;
    spec.validate();
    std::cout << path_sum(spec, store) << '\n';
    if (with_trace) {
        const auto t = trace(spec, store);
        for (std::size_t k = 0; k < t.cells.size(); ++k) {
            std::cout << k << '\t' << t.cells[k].first << '\t' << t.cells[k].second << '\t'
                      << t.values[k] << '\n';
        }
    }
    return 0;
}

int print_lambda(std::int64_t c, std::size_t count, bool tsv) {
    const auto seq = LambdaSeq::generate(c, count);
    for (std::size_t i = 0; i < count; ++i) {
        if (tsv) {
            std::cout << i + 1 << '\t' << seq.terms[i] << '\n';
        } else {
            std::cout << "lambda_" << i + 1 << "(" << c << ") = " << seq.terms[i] << '\n';
        }
    }
    return 0;
}

int print_reports(const std::vector<VerifyReport>& reports) {
    bool ok = true;
    for (const auto& r : reports) {
        for (const auto& line : format_report(r)) {
            std::cout << line << '\n';
        }
        ok = ok && r.ok();
    }
    return ok ? 0 : kExitFail;
}

int run_verify(const std::string& identity, bool all, bool list, std::int64_t n_max,
               unsigned jobs) {
    TriangleStore store;
    const IdentityRegistry registry(store);
    if (list) {
        for (const auto& r : registry.all()) {
            std::cout << r.name << "\tn>=" << r.valid_from << '\t' << r.statement << '\n';
        }
        return 0;
    }
    if (all == !identity.empty()) {
        throw UsageError("verify needs exactly one of --identity NAME or --all");
    }
    if (all) {
        return print_reports(verify_all(registry, n_max, jobs));
    }
    return print_reports({verify(registry, identity, n_max, jobs)});
}

int run_derive(int order) {
    const auto qr = derive_QR(order);
    std::cout << "Q = " << qr.q.str() << '\n';
    std::cout << "R = " << qr.r.str() << '\n';
    return 0;
}

int run_sequence(const std::string& id, std::size_t count, const std::string& bfile_path) {
    TriangleStore store;
    const auto& binding = oeis::find_binding(id);
    if (!bfile_path.empty()) {
        oeis::export_bfile(binding, count, store, bfile_path);
        std::cerr << "wrote " << count << " terms of " << id << " to " << bfile_path << '\n';
        return 0;
    }
    std::cout << oeis::format_bfile(oeis::make_bfile(binding, count, store));
    return 0;
}

int run_oeis_check(const std::string& id, bool all, std::size_t count, bool online,
                   const std::string& snapshots, const std::string& cache_dir) {
    if (all == !id.empty()) {
        throw UsageError("oeis-check needs exactly one of --id AXXXXXX or --all");
    }
    TriangleStore store;
    std::vector<const oeis::SequenceBinding*> targets;
    if (all) {
        for (const auto& b : oeis::bindings()) {
            targets.push_back(&b);
        }
    } else {
        targets.push_back(&oeis::find_binding(id));
    }
    const auto fetcher = oeis::http_fetcher();
    const std::filesystem::path cache = cache_dir.empty() ? oeis::default_cache_dir() : std::filesystem::path(cache_dir);
    std::vector<VerifyReport> reports;
    for (const auto* b : targets) {
        const auto bfile = online ? oeis::fetch_bfile(b->id, cache, fetcher)
                                  : oeis::load_snapshot(b->id, snapshots);
        reports.push_back(oeis::crosscheck(*b, count, store, bfile));
    }
    return print_reports(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernoulli triangles, path sums and Fibonacci identities"};
    app.require_subcommand(1);

    std::string kernel;
    app.add_option("--kernel", kernel, "Row kernel: scalar, avx2 or neon (default: best available)")
        ->check(CLI::IsMember({"scalar", "avx2", "neon"}));

    int order = 2;
    std::int64_t rows = 9;
    bool tsv = false;
    auto* tri = app.add_subcommand("triangle", "Print rows 0..N of the order-M triangle");
    tri->add_option("--order", order, "Triangle order M >= 1")->required()->check(CLI::PositiveNumber);
    tri->add_option("--rows", rows, "Last row N")->required()->check(CLI::NonNegativeNumber);
    tri->add_flag("--tsv", tsv, "Tab-separated output");

    PathSpec spec;
    std::string family = "S";
    bool with_trace = false;
    auto* ps = app.add_subcommand("pathsum", "Sum along a path (S, Sbar or T family)");
    ps->add_option("--order", spec.order, "Triangle order M")->required();
    ps->add_option("--family", family, "S, Sbar or T")->required()->check(CLI::IsMember({"S", "Sbar", "T"}));
    ps->add_option("--c", spec.c, "Column step c")->required();
    ps->add_option("--l", spec.l, "Row step l")->required();
    ps->add_option("--n", spec.n, "Start row n")->required();
    ps->add_flag("--trace", with_trace, "Also print 'k row col value' per visited cell");

    std::int64_t lam_c = 3;
    std::size_t lam_terms = 10;
    auto* lam = app.add_subcommand("lambda", "Print lambda_1(c)..lambda_K(c)");
    lam->add_option("--c", lam_c, "c >= 2")->required();
    lam->add_option("--terms", lam_terms, "Number of terms K")->required();
    lam->add_flag("--tsv", tsv, "Tab-separated output");

    std::string identity;
    bool all = false;
    bool list = false;
    std::int64_t n_max = 100;
    unsigned jobs = 1;
    auto* ver = app.add_subcommand("verify", "Check identities against brute-force oracles");
    ver->add_option("--identity", identity, "Identity name (see --list)");
    ver->add_flag("--all", all, "Every registered identity");
    ver->add_flag("--list", list, "List registered identities and exit");
    ver->add_option("--n-max", n_max, "Upper end of the n range")->check(CLI::NonNegativeNumber);
    ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    int poly_order = 4;
    auto* der = app.add_subcommand("derive-poly", "Print Q[M] and R[M]");
    der->add_option("--order", poly_order, "Order M >= 1")->required()->check(CLI::PositiveNumber);

    std::string seq_id;
    std::size_t seq_terms = 20;
    std::string bfile;
    auto* seq = app.add_subcommand("sequence", "Print or export terms of a bound OEIS sequence");
    seq->add_option("--id", seq_id, "OEIS id, e.g. A000930")->required();
    seq->add_option("--terms", seq_terms, "Number of terms K")->required();
    seq->add_option("--bfile", bfile, "Write a b-file to PATH instead of printing");

    std::string check_id;
    bool check_all = false;
    std::size_t check_terms = 50;
    bool online = false;
    std::string snapshots = BERNOULLI_SNAPSHOT_DIR;
    std::string cache_dir;
    auto* oc = app.add_subcommand("oeis-check", "Crosscheck generated terms against b-files");
    oc->add_option("--id", check_id, "OEIS id");
    oc->add_flag("--all", check_all, "Every binding");
    oc->add_option("--terms", check_terms, "Number of terms K")->required();
    oc->add_flag("--online", online, "Fetch b-files from oeis.org (cached) instead of snapshots");
    oc->add_option("--snapshots", snapshots, "Directory of vendored b-file snapshots");
    oc->add_option("--cache-dir", cache_dir, "b-file cache (default: $BERNOULLI_CACHE_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!kernel.empty()) {
            for (auto k : {simd::Kernel::scalar, simd::Kernel::avx2, simd::Kernel::neon}) {
                if (simd::name(k) == kernel) {
                    simd::select(k);
                }
            }
        }
        if (*tri) {
            return print_triangle(order, rows, tsv);
        }
        if (*ps) {
            spec.family = parse_family(family);
            return print_pathsum(spec, with_trace);
        }
        if (*lam) {
            return print_lambda(lam_c, lam_terms, tsv);
        }
        if (*ver) {
            return run_verify(identity, all, list, n_max, jobs);
        }
        if (*der) {
            return run_derive(poly_order);
        }
        if (*seq) {
            return run_sequence(seq_id, seq_terms, bfile);
        }
        if (*oc) {
            return run_oeis_check(check_id, check_all, check_terms, online, snapshots, cache_dir);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
