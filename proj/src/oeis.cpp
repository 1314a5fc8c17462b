#include "bernoulli/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "bernoulli/fibonacci.hpp"
#include "bernoulli/lambda.hpp"
#include "bernoulli/paths.hpp"

namespace bernoulli::oeis {

BFileParseError::BFileParseError(std::size_t line, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && ws(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && ws(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_decimal(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<Integer> to_integers(const std::vector<Natural>& v) {
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        out.push_back(x.value());
    }
    return out;
}

Generator path_generator(int order, std::int64_t c, std::int64_t l, Family family) {
    return [=](std::size_t count, const TriangleStore& store) {
        std::vector<Integer> out;
        for (std::size_t n = 0; n < count; ++n) {
            out.push_back(path_sum(
                PathSpec{.order = order, .c = c, .l = l, .family = family,
                         .n = static_cast<std::int64_t>(n)},
                store));
        }
        return out;
    };
}

Generator lambda_generator(std::int64_t c) {
    return [c](std::size_t count, const TriangleStore&) {
        const auto seq = LambdaSeq::generate(c, static_cast<std::size_t>(c) - 1 + count);
        std::vector<Integer> out;
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(seq.at(c + static_cast<std::int64_t>(i)).value());
        }
        return out;
    };
}

Generator triangle_generator(int order) {
    return [order](std::size_t count, const TriangleStore& store) {
        std::vector<Integer> out;
        for (std::int64_t n = 0; out.size() < count; ++n) {
            for (const auto& v : store.row(order, n)) {
                if (out.size() == count) {
                    break;
                }
                out.push_back(v.value());
            }
        }
        return out;
    };
}

std::vector<SequenceBinding> make_bindings() {
    std::vector<SequenceBinding> b;
    b.push_back({"A000045", "F_n, n >= 0", 0, "Fibonacci numbers",
                 [](std::size_t count, const TriangleStore&) {
                     std::vector<Integer> out;
                     for (std::size_t n = 0; n < count; ++n) {
                         out.push_back(fib(n).value());
                     }
                     return out;
                 }});
    b.push_back({"A000930", "lambda_n(3), n >= 3", 0,
                 "offset resolved by sliding match: lambda_{n+3}(3) = a(n)", lambda_generator(3)});
    b.push_back({"A003269", "lambda_n(4), n >= 4", 1,
                 "offset resolved by sliding match: lambda_{n+3}(4) = a(n)", lambda_generator(4)});
    b.push_back({"A003520", "lambda_n(5), n >= 5", 0,
                 "offset resolved by sliding match: lambda_{n+5}(5) = a(n)", lambda_generator(5)});
    b.push_back({"A005251", "Sbar[2]_n(3,-1), n >= 0", 3,
                 "offset resolved by sliding match: Sbar[2]_n(3,-1) = a(n+3)",
                 path_generator(2, 3, -1, Family::Sbar)});
    b.push_back({"A005314", "Sbar[3]_n(3,-1) - 2 Sbar[3]_{n-1}(3,-1), n >= 1", 1,
                 "offset resolved by sliding match: difference at n equals a(n)",
                 [](std::size_t count, const TriangleStore& store) {
                     const auto s = path_generator(3, 3, -1, Family::Sbar)(count + 1, store);
                     std::vector<Integer> out;
                     for (std::size_t n = 1; n <= count; ++n) {
                         out.push_back(s[n] - 2 * s[n - 1]);
                     }
                     return out;
                 }});
    b.push_back({"A008949", "B[2] triangle read by rows", 0, "Bernoulli's triangle",
                 triangle_generator(2)});
    b.push_back({"A027934", "S[2]_n(2,-1), n >= 0", 1,
                 "offset resolved by sliding match: S[2]_n(2,-1) = a(n+1)",
                 path_generator(2, 2, -1, Family::S)});
    b.push_back({"A099568", "S[2]_n(3,-2), n >= 0", 0,
                 "offset resolved by sliding match: S[2]_n(3,-2) = a(n)",
                 path_generator(2, 3, -2, Family::S)});
    b.push_back({"A138653", "Sbar[2]_n(4,-1), n >= 0", 0,
                 "offset resolved by sliding match: Sbar[2]_n(4,-1) = a(n)",
                 path_generator(2, 4, -1, Family::Sbar)});
    b.push_back({"A193605", "B[3] triangle read by rows", 0, "Bernoulli's third-order triangle",
                 triangle_generator(3)});
    return b;
}

}  // namespace

BFile parse_bfile(std::string_view text) {
    BFile out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        auto line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw BFileParseError(line_no, "expected '<index> <value>'");
        }
        const auto idx = line.substr(0, sep);
        const auto val = trim(line.substr(sep));
        if (!is_decimal(idx) || !is_decimal(val)) {
            throw BFileParseError(line_no, "non-numeric field in '" + std::string(line) + "'");
        }
        const std::int64_t index = std::stoll(std::string(idx));
        if (!out.entries.empty() && index != out.entries.back().first + 1) {
            throw BFileParseError(line_no, "index " + std::to_string(index) + " does not follow " +
                                               std::to_string(out.entries.back().first));
        }
        out.entries.emplace_back(index, Integer(std::string(val)));
    }
    return out;
}

std::string format_bfile(const BFile& bfile) {
    std::string out;
    for (const auto& [index, value] : bfile.entries) {
        out += std::to_string(index);
        out += ' ';
        out += value.str();
        out += '\n';
    }
    return out;
}

BFile read_bfile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open b-file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bfile(ss.str());
}

const std::vector<SequenceBinding>& bindings() {
    static const std::vector<SequenceBinding> table = make_bindings();
    return table;
}

bool valid_id(std::string_view id) {
    return id.size() == 7 && id.front() == 'A' &&
           std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

const SequenceBinding& find_binding(std::string_view id) {
    for (const auto& b : bindings()) {
        if (b.id == id) {
            return b;
        }
    }
    throw UnknownSequence("no binding for sequence '" + std::string(id) + "'");
}

std::vector<Integer> terms(const SequenceBinding& binding, std::size_t count,
                           const TriangleStore& store) {
    return binding.generate(count, store);
}

BFile make_bfile(const SequenceBinding& binding, std::size_t count, const TriangleStore& store) {
    BFile out;
    std::int64_t index = binding.offset;
    for (auto& v : terms(binding, count, store)) {
        out.entries.emplace_back(index++, std::move(v));
    }
    return out;
}

BFile export_bfile(const SequenceBinding& binding, std::size_t count, const TriangleStore& store,
                   const std::filesystem::path& destination) {
    auto bfile = make_bfile(binding, count, store);
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write b-file " + destination.string());
    }
    out << format_bfile(bfile);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for " + destination.string());
    }
    return bfile;
}

std::int64_t resolve_offset(std::span<const Integer> prefix, const BFile& bfile) {
    if (prefix.size() < 12) {
        throw OffsetResolutionError("offset resolution needs a prefix of at least 12 terms");
    }
    const auto& e = bfile.entries;
    std::vector<std::int64_t> hits;
    for (std::size_t start = 0; start + prefix.size() <= e.size(); ++start) {
        bool match = true;
        for (std::size_t i = 0; i < prefix.size() && match; ++i) {
            match = e[start + i].second == prefix[i];
        }
        if (match) {
            hits.push_back(e[start].first);
        }
    }
    if (hits.size() != 1) {
        throw OffsetResolutionError("prefix matches the b-file at " + std::to_string(hits.size()) +
                                    " positions (need exactly one)");
    }
    return hits.front();
}

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

std::string bfile_url(std::string_view id) {
    return "https://oeis.org/" + std::string(id) + "/" + bfile_name(id);
}

std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("BERNOULLI_CACHE_DIR"); dir && *dir) {
        return dir;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "bernoulli";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "bernoulli";
    }
    return std::filesystem::temp_directory_path() / "bernoulli-cache";
}

BFile fetch_bfile(std::string_view id, const std::filesystem::path& cache_dir,
                  const Fetcher& fetcher) {
    if (!valid_id(id)) {
        throw UnknownSequence("malformed OEIS id '" + std::string(id) + "'");
    }
    const auto cached = cache_dir / bfile_name(id);
    if (std::filesystem::exists(cached)) {
        return read_bfile(cached);
    }
    const std::string body = fetcher(bfile_url(id));
    auto parsed = parse_bfile(body);

    std::filesystem::create_directories(cache_dir);
    std::ostringstream tmp_name;
    tmp_name << bfile_name(id) << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id());
    const auto tmp = cache_dir / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << body;
        if (!out) {
            throw std::runtime_error("cannot write cache file " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, cached);
    return parsed;
}

BFile load_snapshot(std::string_view id, const std::filesystem::path& dir) {
    if (!valid_id(id)) {
        throw UnknownSequence("malformed OEIS id '" + std::string(id) + "'");
    }
    return read_bfile(dir / bfile_name(id));
}

VerifyReport crosscheck(const SequenceBinding& binding, std::size_t count,
                        const TriangleStore& store, const BFile& bfile) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.name = binding.id;
    const auto& e = bfile.entries;
    if (e.empty()) {
        throw std::runtime_error(binding.id + ": empty b-file");
    }
    const std::int64_t first = binding.offset - e.front().first;
    if (first < 0 || static_cast<std::size_t>(first) + count > e.size()) {
        throw std::runtime_error(binding.id + ": b-file has too few entries for " +
                                 std::to_string(count) + " terms at offset " +
                                 std::to_string(binding.offset));
    }
    const auto generated = terms(binding, count, store);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& [index, value] = e[static_cast<std::size_t>(first) + i];
        if (generated[i] != value) {
            rep.failures.push_back({index, generated[i], value});
        }
    }
    rep.first = binding.offset;
    rep.last = binding.offset + static_cast<std::int64_t>(count) - 1;
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

}  // namespace bernoulli::oeis
