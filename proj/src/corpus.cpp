#include "succinct/corpus.hpp"

#include <algorithm>

namespace succinct {

namespace {

Regex::NodePtr random_node(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t depth) {
    std::uniform_int_distribution<int> percent(0, 99);
    const int leaf_chance = depth <= 1 ? 100 : 15 + static_cast<int>(60 / depth);
    if (percent(rng) < leaf_chance) {
        const int roll = percent(rng);
        if (roll < 4) return Regex::empty();
        if (roll < 10) return Regex::epsilon();
        std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alphabet.size() - 1));
        return Regex::symbol(letter(rng));
    }
    const int roll = percent(rng);
    if (roll < 35) return Regex::alternative(random_node(rng, alphabet, depth - 1), random_node(rng, alphabet, depth - 1));
    if (roll < 75) return Regex::concat(random_node(rng, alphabet, depth - 1), random_node(rng, alphabet, depth - 1));
    return Regex::star(random_node(rng, alphabet, depth - 1));
}

}  // namespace

Regex random_regex(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_depth) {
    return Regex(alphabet, random_node(rng, alphabet, max_depth));
}

std::vector<Regex> regex_corpus(const CorpusOptions& options) {
    std::vector<Regex> corpus;
    if (options.include_fixed) {
        const Alphabet ab("ab");
        for (const char* text : {"(a+b)*", "(a+b)*a", "~0", "~e", "a", "ab", "aba", "a*"})
            corpus.push_back(parse_regex(text, ab));
        corpus.push_back(parse_regex("(a+b+c)*", Alphabet("abc")));
        corpus.push_back(parse_regex("a*", Alphabet("a")));
    }
    std::mt19937_64 rng(options.seed);
    const std::string letters = "abcdefgh";
    std::uniform_int_distribution<std::size_t> size(1, std::clamp<std::size_t>(options.max_alphabet, 1, letters.size()));
    for (std::size_t i = 0; i < options.random_count; ++i) {
        const Alphabet alphabet(letters.substr(0, size(rng)));
        corpus.push_back(random_regex(rng, alphabet, options.max_depth));
    }
    return corpus;
}

}  // namespace succinct
