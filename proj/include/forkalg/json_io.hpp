#pragma once

#include <string>

#include "forkalg/algebra.hpp"

namespace forkalg {

// Stable JSON rendering of an algebra: basis in enumeration order, then all
// nonzero structure constants ordered by (i, j). Repeated exports of the
// same algebra are byte-identical.
std::string algebra_to_json(const DiagramAlgebra& a);

// Parsed form of the export, for round-trip comparisons.
struct AlgebraDump {
    int n = 0, k = 0;
    struct Entry {
        std::string lower, eta, sigma, upper;
        int degree = 0;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> basis;
    std::vector<std::tuple<int, int, std::vector<std::pair<int, long long>>>> products;

    bool operator==(const AlgebraDump&) const = default;
};

AlgebraDump parse_algebra_json(const std::string& text);
AlgebraDump dump_algebra(const DiagramAlgebra& a);

}  // namespace forkalg
