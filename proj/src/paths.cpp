#include "bernoulli/paths.hpp"

#include <string>

namespace bernoulli {

std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::S:
        return "S";
    case Family::Sbar:
        return "Sbar";
    case Family::T:
        return "T";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    if (s == "S") {
        return Family::S;
    }
    if (s == "Sbar") {
        return Family::Sbar;
    }
    if (s == "T") {
        return Family::T;
    }
    throw InvalidPathSpec("unknown path family '" + std::string(s) + "' (expected S, Sbar or T)");
}

void PathSpec::validate() const {
    const auto where = [&] {
        return " (family " + std::string(to_string(family)) + ", c=" + std::to_string(c) +
               ", l=" + std::to_string(l) + ")";
    };
    if (order < 1) {
        throw InvalidPathSpec("order must be >= 1" + where());
    }
    if (n < 0) {
        throw InvalidPathSpec("start row must be >= 0" + where());
    }
    if (l >= 0) {
        throw InvalidPathSpec("l must be negative" + where());
    }
    switch (family) {
    case Family::S:
    case Family::Sbar:
        if (c <= 0) {
            throw InvalidPathSpec("S paths need c > 0" + where());
        }
        // col <= row along the path iff -c <= l.
        if (l < -c) {
            throw InvalidPathSpec("direction leaves the triangle (l < -c)" + where());
        }
        break;
    case Family::T:
        if (c >= 0) {
            throw InvalidPathSpec("T paths need c < 0" + where());
        }
        break;
    }
}

std::int64_t PathSpec::last_step() const {
    if (family == Family::T) {
        return floor_div(-n, c + l);
    }
    return floor_div(n, c);
}

std::pair<std::int64_t, std::int64_t> PathSpec::cell_at(std::int64_t k) const {
    if (family == Family::T) {
        return {n + k * l, -k * c};
    }
    return {n + k * l, n - k * c};
}

PathTrace trace(const PathSpec& spec, const TriangleStore& store) {
    spec.validate();
    PathTrace out;
    const auto last = spec.last_step();
    out.cells.reserve(static_cast<std::size_t>(last) + 1);
    out.values.reserve(static_cast<std::size_t>(last) + 1);
    for (std::int64_t k = 0; k <= last; ++k) {
        const auto [row, col] = spec.cell_at(k);
        out.cells.emplace_back(row, col);
        out.values.push_back(store.cell(spec.order, row, col));
    }
    return out;
}

namespace {

Natural raw_sum(const PathSpec& spec, const TriangleStore& store) {
    spec.validate();
    Natural acc;
    for (std::int64_t k = 0; k <= spec.last_step(); ++k) {
        const auto [row, col] = spec.cell_at(k);
        acc += store.cell(spec.order, row, col);
    }
    return acc;
}

void require_family(const PathSpec& spec, Family want) {
    if (spec.family != want) {
        throw InvalidPathSpec("expected a " + std::string(to_string(want)) + " spec, got " +
                              std::string(to_string(spec.family)));
    }
}

}  // namespace

Natural sum_S(const PathSpec& spec, const TriangleStore& store) {
    require_family(spec, Family::S);
    return raw_sum(spec, store);
}

Integer sum_Sbar(const PathSpec& spec, const TriangleStore& store) {
    require_family(spec, Family::Sbar);
    const auto s = raw_sum(spec, store);
    return 2 * store.cell(spec.order, spec.n, spec.n).value() - s.value();
}

Natural sum_T(const PathSpec& spec, const TriangleStore& store) {
    require_family(spec, Family::T);
    return raw_sum(spec, store);
}

Integer path_sum(const PathSpec& spec, const TriangleStore& store) {
    switch (spec.family) {
    case Family::S:
        return sum_S(spec, store).value();
    case Family::Sbar:
        return sum_Sbar(spec, store);
    case Family::T:
        return sum_T(spec, store).value();
    }
    return 0;
}

Integer path_sum_bruteforce(const PathSpec& spec) {
    spec.validate();
    Integer acc = 0;
    for (std::int64_t k = 0; k <= spec.last_step(); ++k) {
        const auto [row, col] = spec.cell_at(k);
        acc += cell_bruteforce(spec.order, row, col).value();
    }
    if (spec.family == Family::Sbar) {
        return 2 * cell_bruteforce(spec.order, spec.n, spec.n).value() - acc;
    }
    return acc;
}

}  // namespace bernoulli
