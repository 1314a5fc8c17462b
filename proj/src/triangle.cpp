#include "bernoulli/triangle.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "bernoulli/simd/limb_kernels.hpp"

namespace bernoulli {

namespace {

void check_order(int m) {
    if (m < 1) {
        throw InvalidOrder("triangle order must be >= 1, got " + std::to_string(m));
    }
}

// Little-endian limb vector addition.
std::vector<std::uint32_t> add_limbs(std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b) {
    std::vector<std::uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        const std::uint64_t s =
            std::uint64_t{i < a.size() ? a[i] : 0u} + (i < b.size() ? b[i] : 0u) + carry;
        out[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    out.back() = static_cast<std::uint32_t>(carry);
    while (out.size() > 1 && out.back() == 0) {
        out.pop_back();
    }
    return out;
}

}  // namespace

LimbRow::LimbRow(std::size_t width, std::size_t limbs)
    : width_(width), limbs_(std::max<std::size_t>(limbs, 1)), data_(width_ * limbs_, 0) {}

Natural LimbRow::value(std::size_t col) const {
    Integer v = 0;
    for (std::size_t j = limbs_; j-- > 0;) {
        v <<= 32;
        v += data_[j * width_ + col];
    }
    return Natural{std::move(v)};
}

std::vector<std::uint32_t> LimbRow::column_limbs(std::size_t col) const {
    std::vector<std::uint32_t> out(limbs_);
    for (std::size_t j = 0; j < limbs_; ++j) {
        out[j] = data_[j * width_ + col];
    }
    return out;
}

void LimbRow::set_column(std::size_t col, std::span<const std::uint32_t> limbs) {
    if (limbs.size() > limbs_) {
        grow(limbs.size());
    }
    for (std::size_t j = 0; j < limbs_; ++j) {
        data_[j * width_ + col] = j < limbs.size() ? limbs[j] : 0u;
    }
}

void LimbRow::grow(std::size_t limbs) {
    if (limbs <= limbs_) {
        return;
    }
    data_.resize(limbs * width_, 0);
    limbs_ = limbs;
}

void LimbRow::trim() {
    while (limbs_ > 1) {
        const auto top = plane(limbs_ - 1);
        if (std::any_of(top.begin(), top.end(), [](std::uint32_t x) { return x != 0; })) {
            break;
        }
        --limbs_;
    }
    data_.resize(limbs_ * width_);
}

LimbRow LimbRow::pascal_step(const LimbRow& prev) {
    const std::size_t w = prev.width();
    LimbRow next(w + 1, prev.limbs() + 1);
    if (w < 2) {
        return next;
    }
    const std::size_t interior = w - 1;
    std::vector<std::uint32_t> carry(interior, 0);
    for (std::size_t j = 0; j < prev.limbs(); ++j) {
        const auto src = prev.plane(j);
        simd::add_with_carry(src.subspan(1, interior), src.subspan(0, interior),
                             next.plane(j).subspan(1, interior), carry);
    }
    std::copy(carry.begin(), carry.end(), next.plane(prev.limbs()).begin() + 1);
    return next;
}

std::shared_ptr<const LimbRow> TriangleStore::find(const Key& key) const {
    std::shared_lock lock(mutex_);
    const auto it = rows_.find(key);
    return it == rows_.end() ? nullptr : it->second;
}

std::shared_ptr<const LimbRow> TriangleStore::publish(const Key& key, LimbRow row) const {
    auto ptr = std::make_shared<const LimbRow>(std::move(row));
    std::unique_lock lock(mutex_);
    const auto [it, inserted] = rows_.try_emplace(key, std::move(ptr));
    return it->second;
}

std::shared_ptr<const LimbRow> TriangleStore::limb_row(int m, std::int64_t n) const {
    check_order(m);
    if (n < 0) {
        throw std::out_of_range("triangle row must be >= 0, got " + std::to_string(n));
    }
    if (auto hit = find({m, n})) {
        return hit;
    }
    return build(m, n);
}

std::shared_ptr<const LimbRow> TriangleStore::build(int m, std::int64_t n) const {
    // Start from the closest cached row below n and walk forward.
    std::shared_ptr<const LimbRow> prev;
    std::int64_t start = 0;
    {
        std::shared_lock lock(mutex_);
        auto it = rows_.lower_bound({m, n});
        if (it != rows_.begin()) {
            --it;
            if (it->first.first == m) {
                prev = it->second;
                start = it->first.second + 1;
            }
        }
    }
    if (!prev) {
        LimbRow first(1, 1);
        first.plane(0)[0] = 1;
        prev = publish({m, 0}, std::move(first));
        start = 1;
    }
    for (std::int64_t r = start; r <= n; ++r) {
        LimbRow next = LimbRow::pascal_step(*prev);
        const auto w = static_cast<std::size_t>(r) + 1;
        const std::uint32_t one = 1;
        next.set_column(0, {&one, 1});
        if (m == 1) {
            next.set_column(w - 1, {&one, 1});
        } else {
            const auto lower = limb_row(m - 1, r);
            const auto diag = add_limbs(next.column_limbs(w - 2), lower->column_limbs(w - 1));
            next.set_column(w - 1, diag);
        }
        next.trim();
        prev = publish({m, r}, std::move(next));
    }
    return prev;
}

Natural TriangleStore::cell(int m, std::int64_t n, std::int64_t k) const {
    check_order(m);
    if (n < 0 || k < 0 || k > n) {
        return Natural{};
    }
    return limb_row(m, n)->value(static_cast<std::size_t>(k));
}

std::vector<Natural> TriangleStore::row(int m, std::int64_t n) const {
    const auto r = limb_row(m, n);
    std::vector<Natural> out;
    out.reserve(r->width());
    for (std::size_t k = 0; k < r->width(); ++k) {
        out.push_back(r->value(k));
    }
    return out;
}

std::size_t TriangleStore::cached_rows() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
}

std::vector<Natural> row_bruteforce(int m, std::int64_t n, std::int64_t k_max) {
    check_order(m);
    if (n < 0 || k_max < 0 || k_max > n) {
        throw std::out_of_range("row_bruteforce needs 0 <= k <= n (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k_max) + ")");
    }
    // Inner sum first: level 1 is C(n, .), each further level is the
    // running sum of the level below.
    auto level = binomial_row(n, k_max);
    for (int order = 2; order <= m; ++order) {
        for (std::size_t q = 1; q < level.size(); ++q) {
            level[q] += level[q - 1];
        }
    }
    return level;
}

Natural cell_bruteforce(int m, std::int64_t n, std::int64_t k) {
    return row_bruteforce(m, n, k).back();
}

}  // namespace bernoulli
