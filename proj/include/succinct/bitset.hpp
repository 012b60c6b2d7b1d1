#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace succinct {

/// Dense subset of {0..n-1}. Used for state sets, GF(2) vectors and profile sets.
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline Bits make_bits(std::size_t size, const std::vector<std::size_t>& members) {
    Bits bits(size);
    for (auto m : members) bits.set(m);
    return bits;
}

inline Bits singleton_bits(std::size_t size, std::size_t member) {
    Bits bits(size);
    bits.set(member);
    return bits;
}

inline std::vector<std::size_t> members(const Bits& bits) {
    std::vector<std::size_t> out;
    out.reserve(bits.count());
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(i);
    return out;
}

inline bool is_subset(const Bits& lhs, const Bits& rhs) { return lhs.is_subset_of(rhs); }

inline bool odd_overlap(const Bits& lhs, const Bits& rhs) { return ((lhs & rhs).count() & 1U) != 0; }

/// "{0,2,5}"
inline std::string format_members(const Bits& bits) {
    std::string out = "{";
    bool first = true;
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace succinct
