#pragma once

#include <vector>

#include "arrange/arrangement.hpp"

namespace arrange {

// Central arrangement with a non-negative multiplicity per hyperplane.
struct Multiarrangement {
    Arrangement arr;
    std::vector<long long> mult; // aligned with arr.hyperplanes()

    Multiarrangement(Arrangement a, std::vector<long long> m);

    bool has_zero_mult() const;
    long long total_multiplicity() const;
};

// Restriction to hyperplane h with multiplicity |A_X| - 1 on each
// restricted hyperplane X, counted in the cone (h itself included).
Multiarrangement ziegler_restriction(const Arrangement& cone_arr, size_t h_index);

} // namespace arrange
