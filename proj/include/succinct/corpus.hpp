#pragma once

#include "succinct/regex.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace succinct {

/// Random tree of depth at most `max_depth` over `alphabet`. Leaves are mostly symbols, with the
/// occasional ε or ∅.
Regex random_regex(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_depth);

struct CorpusOptions {
    std::size_t random_count = 200;
    std::uint64_t seed = 20240611;
    std::size_t max_depth = 6;
    std::size_t max_alphabet = 3;
    /// Prepend A*, (a+b)*a, ∅, ε and a few single words.
    bool include_fixed = true;
};

/// Deterministic for a given seed.
std::vector<Regex> regex_corpus(const CorpusOptions& options = {});

}  // namespace succinct
