#pragma once

// Bindings between triangle constructions and OEIS sequences, plus the
// b-file interchange format ("<index> <value>" per line, '#' comments).

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bernoulli/exactnum.hpp"
#include "bernoulli/identities.hpp"
#include "bernoulli/triangle.hpp"

namespace bernoulli::oeis {

class UnknownSequence : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class BFileParseError : public std::runtime_error {
  public:
    BFileParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// No cached copy and the network fetch failed.
class NetworkError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class OffsetResolutionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BFile {
    std::vector<std::pair<std::int64_t, Integer>> entries;

    friend bool operator==(const BFile&, const BFile&) = default;
};

/// Skips blank and '#' lines; indices must increase by exactly 1.
BFile parse_bfile(std::string_view text);
std::string format_bfile(const BFile& bfile);
BFile read_bfile(const std::filesystem::path& path);

using Generator = std::function<std::vector<Integer>(std::size_t count, const TriangleStore&)>;

struct SequenceBinding {
    std::string id;            // "A" + 6 digits
    std::string construction;  // human-readable description of the generator
    std::int64_t offset = 0;   // b-file index of the generator's first term
    std::string note;
    Generator generate;
};

const std::vector<SequenceBinding>& bindings();
const SequenceBinding& find_binding(std::string_view id);
bool valid_id(std::string_view id);

std::vector<Integer> terms(const SequenceBinding& binding, std::size_t count,
                           const TriangleStore& store);

BFile make_bfile(const SequenceBinding& binding, std::size_t count, const TriangleStore& store);

/// Writes make_bfile(...) to `destination`; throws std::runtime_error if the
/// file cannot be written.
BFile export_bfile(const SequenceBinding& binding, std::size_t count, const TriangleStore& store,
                   const std::filesystem::path& destination);

/// Unique b-file index at which `prefix` (length >= 12) occurs.
std::int64_t resolve_offset(std::span<const Integer> prefix, const BFile& bfile);

std::string bfile_name(std::string_view id);  // "b000045.txt"
std::string bfile_url(std::string_view id);   // "https://oeis.org/A000045/b000045.txt"

/// Returns the body at `url` or throws NetworkError.
using Fetcher = std::function<std::string(const std::string& url)>;

/// HTTPS GET via cpp-httplib.
Fetcher http_fetcher();

/// $BERNOULLI_CACHE_DIR, else $XDG_CACHE_HOME/bernoulli, else ~/.cache/bernoulli.
std::filesystem::path default_cache_dir();

/// Serves the cached copy when present, otherwise fetches, stores the
/// verbatim body under cache_dir (write-to-temp then rename) and parses it.
BFile fetch_bfile(std::string_view id, const std::filesystem::path& cache_dir,
                  const Fetcher& fetcher);

/// Vendored snapshot `<dir>/bNNNNNN.txt`.
BFile load_snapshot(std::string_view id, const std::filesystem::path& dir);

/// Compares the first `count` generator terms with b-file entries starting
/// at binding.offset. Throws std::runtime_error if the b-file is too short.
/// Mismatch::closed holds the generated value, Mismatch::oracle the b-file
/// value, Mismatch::n the b-file index.
VerifyReport crosscheck(const SequenceBinding& binding, std::size_t count,
                        const TriangleStore& store, const BFile& bfile);

}  // namespace bernoulli::oeis
