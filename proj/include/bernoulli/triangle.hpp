#pragma once

// Bernoulli triangles of order m >= 1:
//
//     B[1](n,k)   = C(n,k)
//     B[m+1](n,k) = sum_{q=0..k} B[m](n,q)
//
// Order 1 is Pascal's triangle, order 2 the partial sums of binomial
// coefficients. Inside the triangle every order obeys Pascal's rule
// B(n,k) = B(n-1,k) + B(n-1,k-1) for 1 <= k <= n-1, with B(n,0) = 1 and the
// diagonal B[m](n,n) = B[m](n,n-1) + B[m-1](n,n).

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bernoulli/exactnum.hpp"

namespace bernoulli {

class InvalidOrder : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct Cell {
    int order = 1;
    std::int64_t row = 0;
    std::int64_t col = 0;

    bool addressable() const noexcept { return order >= 1 && row >= 0 && col >= 0 && col <= row; }
};

/// One triangle row in limb-sliced layout: plane j holds limb j (32 bits,
/// little-endian across planes) of every column.
class LimbRow {
  public:
    LimbRow(std::size_t width, std::size_t limbs);

    std::size_t width() const noexcept { return width_; }
    std::size_t limbs() const noexcept { return limbs_; }

    std::span<std::uint32_t> plane(std::size_t j) { return {data_.data() + j * width_, width_}; }
    std::span<const std::uint32_t> plane(std::size_t j) const {
        return {data_.data() + j * width_, width_};
    }

    Natural value(std::size_t col) const;
    std::vector<std::uint32_t> column_limbs(std::size_t col) const;
    void set_column(std::size_t col, std::span<const std::uint32_t> limbs);

    /// Drops all-zero top planes (keeps at least one).
    void trim();
    void grow(std::size_t limbs);

    /// Pascal step: columns 1..width()-2 of the returned row are
    /// prev[k] + prev[k-1]; columns 0 and width()-1 are left zero.
    static LimbRow pascal_step(const LimbRow& prev);

  private:
    std::size_t width_;
    std::size_t limbs_;
    std::vector<std::uint32_t> data_;
};

/// Lazily filled, never-evicted table of triangle rows keyed by (order, row).
///
/// Safe for concurrent use: lookups take a shared lock, insertion an
/// exclusive one, and rows are published as immutable shared_ptrs so a
/// reader never sees a partially built row. Two threads may build the same
/// row; the first insertion wins.
class TriangleStore {
  public:
    TriangleStore() = default;
    TriangleStore(const TriangleStore&) = delete;
    TriangleStore& operator=(const TriangleStore&) = delete;

    /// B[m](n,k) for 0 <= k <= n, zero for k outside the row.
    Natural cell(int m, std::int64_t n, std::int64_t k) const;
    Natural cell(const Cell& c) const { return cell(c.order, c.row, c.col); }

    /// [B[m](n,0), ..., B[m](n,n)].
    std::vector<Natural> row(int m, std::int64_t n) const;

    std::shared_ptr<const LimbRow> limb_row(int m, std::int64_t n) const;

    std::size_t cached_rows() const;

  private:
    using Key = std::pair<int, std::int64_t>;

    std::shared_ptr<const LimbRow> find(const Key& key) const;
    std::shared_ptr<const LimbRow> publish(const Key& key, LimbRow row) const;
    std::shared_ptr<const LimbRow> build(int m, std::int64_t n) const;

    mutable std::shared_mutex mutex_;
    mutable std::map<Key, std::shared_ptr<const LimbRow>> rows_;
};

/// The m-fold nested sum of binomial coefficients evaluated straight from
/// the definition (no Pascal recurrence). Oracle for TriangleStore::cell.
/// Requires 0 <= k <= n.
Natural cell_bruteforce(int m, std::int64_t n, std::int64_t k);

/// [cell_bruteforce(m,n,0), ..., cell_bruteforce(m,n,k_max)] in one pass.
std::vector<Natural> row_bruteforce(int m, std::int64_t n, std::int64_t k_max);

}  // namespace bernoulli
