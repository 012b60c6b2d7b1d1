#pragma once

#include <cstddef>

namespace succinct {

/// Resource caps. Exceeding one raises ResourceError.
struct Limits {
    std::size_t max_subset_states = std::size_t{1} << 20;  ///< reachable subsets / GF(2) vectors
    std::size_t max_profiles = std::size_t{1} << 16;
    std::size_t max_carrier = std::size_t{1} << 16;        ///< materialized closure elements
    std::size_t max_caba_profiles = 16;                    ///< 2^|P| is materialized only up to this |P|

    /// Applies one cap to every state-count bound (the CLI's --cap).
    static Limits uniform(std::size_t cap) {
        Limits limits;
        limits.max_subset_states = cap;
        limits.max_profiles = cap;
        limits.max_carrier = cap;
        return limits;
    }
};

}  // namespace succinct
