#pragma once

#include "succinct/bitset.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace succinct {

/// Incremental Gaussian elimination over GF(2) for a list of vectors v_0, v_1, ... of one width.
/// Tracks how every reduced row is written in terms of the inserted vectors, so it can answer
/// span membership and produce coordinates.
class Gf2Eliminator {
public:
    explicit Gf2Eliminator(std::size_t width) : width_(width) {}

    /// Appends v as the next vector. Returns true iff it is independent of the earlier ones.
    bool insert(const Bits& v);

    std::size_t width() const { return width_; }
    std::size_t count() const { return count_; }
    std::size_t rank() const { return rows_.size(); }

    bool in_span(const Bits& target) const;

    /// Some c with ⊕_{c_i = 1} v_i = target, or nothing when target is outside the span.
    std::optional<Bits> solve(const Bits& target) const;

    /// The least c in lexicographic order with v_0's coefficient most significant.
    std::optional<Bits> solve_lex_least(const Bits& target) const;

    /// Basis of { c | ⊕_{c_i = 1} v_i = 0 }, one vector per dependent insertion.
    const std::vector<Bits>& kernel() const { return kernel_; }

private:
    struct Row {
        Bits vector;       ///< reduced vector, lowest set bit is the pivot
        Bits combination;  ///< coefficients over the inserted vectors
    };

    /// Reduces (v, combination) against the pivot rows; v ends up zero iff it was in the span.
    void reduce(Bits& v, Bits& combination) const;
    Bits grow(const Bits& combination, std::size_t size) const;

    std::size_t width_;
    std::size_t count_ = 0;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivot_row_;  ///< coordinate -> row index + 1, 0 when not a pivot
    std::vector<Bits> kernel_;
};

/// GF(2) rank of a list of vectors of equal width.
std::size_t gf2_rank(const std::vector<Bits>& vectors, std::size_t width);

}  // namespace succinct
