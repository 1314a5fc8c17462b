#pragma once

// Sums over straight paths through a Bernoulli triangle.
//
// A path with direction (c, l) visits rows n0 + k*l and columns k0 - k*c for
// k = 0, 1, ... Two families are supported:
//
//   S / Sbar  start at (n, n), c > 0, l < 0, k = 0..floor(n/c)
//             Sbar = 2 B(n,n) - S
//   T         start at (n, 0), c < 0, l < 0, k = 0..floor(-n/(c+l))

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "bernoulli/exactnum.hpp"
#include "bernoulli/triangle.hpp"

namespace bernoulli {

enum class Family { S, Sbar, T };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view s);

class InvalidPathSpec : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct PathSpec {
    int order = 2;
    std::int64_t c = 2;
    std::int64_t l = -1;
    Family family = Family::S;
    std::int64_t n = 0;

    /// Throws InvalidPathSpec unless the direction matches the family and
    /// every visited cell stays inside the triangle.
    void validate() const;

    /// Index of the last step k.
    std::int64_t last_step() const;

    std::pair<std::int64_t, std::int64_t> cell_at(std::int64_t k) const;
};

struct PathTrace {
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;  // (row, col)
    std::vector<Natural> values;
};

PathTrace trace(const PathSpec& spec, const TriangleStore& store);

Natural sum_S(const PathSpec& spec, const TriangleStore& store);
Integer sum_Sbar(const PathSpec& spec, const TriangleStore& store);
Natural sum_T(const PathSpec& spec, const TriangleStore& store);

/// Family-appropriate sum (S, Sbar or T) through the store.
Integer path_sum(const PathSpec& spec, const TriangleStore& store);

/// Same value as path_sum, but every cell comes from cell_bruteforce.
Integer path_sum_bruteforce(const PathSpec& spec);

}  // namespace bernoulli
