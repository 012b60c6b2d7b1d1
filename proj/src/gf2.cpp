#include "succinct/gf2.hpp"

#include "succinct/error.hpp"

#include <algorithm>

namespace succinct {

Bits Gf2Eliminator::grow(const Bits& combination, std::size_t size) const {
    Bits out = combination;
    out.resize(size);
    return out;
}

void Gf2Eliminator::reduce(Bits& v, Bits& combination) const {
    for (auto bit = v.find_first(); bit != Bits::npos; bit = v.find_next(bit)) {
        if (pivot_row_.empty() || pivot_row_[bit] == 0) continue;
        const Row& row = rows_[pivot_row_[bit] - 1];
        v ^= row.vector;
        combination ^= grow(row.combination, combination.size());
    }
}

bool Gf2Eliminator::insert(const Bits& v) {
    if (v.size() != width_) throw InputError("GF(2) vector has the wrong width");
    if (pivot_row_.empty()) pivot_row_.assign(width_, 0);
    const std::size_t index = count_++;
    for (auto& row : rows_) row.combination.resize(count_);
    for (auto& null : kernel_) null.resize(count_);

    Bits reduced = v;
    Bits combination(count_);
    combination.set(index);
    reduce(reduced, combination);
    if (reduced.none()) {
        kernel_.push_back(std::move(combination));
        return false;
    }
    pivot_row_[reduced.find_first()] = rows_.size() + 1;
    rows_.push_back(Row{std::move(reduced), std::move(combination)});
    return true;
}

bool Gf2Eliminator::in_span(const Bits& target) const { return solve(target).has_value(); }

std::optional<Bits> Gf2Eliminator::solve(const Bits& target) const {
    if (target.size() != width_) throw InputError("GF(2) vector has the wrong width");
    Bits reduced = target;
    Bits combination(count_);
    reduce(reduced, combination);
    if (reduced.any()) return std::nullopt;
    return combination;
}

namespace {

/// Index of the most significant coefficient, i.e. the lowest set bit, in the lexicographic order.
std::size_t leading(const Bits& c) { return c.find_first(); }

}  // namespace

std::optional<Bits> Gf2Eliminator::solve_lex_least(const Bits& target) const {
    auto solution = solve(target);
    if (!solution) return solution;

    // Reduced echelon form of the kernel by leading coefficient; clearing each leading position
    // of the solution in turn yields the least coset representative.
    std::vector<Bits> echelon;
    for (const auto& null : kernel_) {
        Bits v = null;
        for (const auto& row : echelon)
            if (v.test(leading(row))) v ^= row;
        if (v.none()) continue;
        for (auto& row : echelon)
            if (row.test(leading(v))) row ^= v;
        echelon.push_back(std::move(v));
    }
    std::sort(echelon.begin(), echelon.end(),
              [](const Bits& lhs, const Bits& rhs) { return leading(lhs) < leading(rhs); });
    for (const auto& row : echelon)
        if (solution->test(leading(row))) *solution ^= row;
    return solution;
}

std::size_t gf2_rank(const std::vector<Bits>& vectors, std::size_t width) {
    Gf2Eliminator elim(width);
    for (const auto& v : vectors) elim.insert(v);
    return elim.rank();
}

}  // namespace succinct
