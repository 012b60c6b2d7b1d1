#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace succinct {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Ordered set of single-character symbols. Letters are indices into this order.
class Alphabet {
public:
    Alphabet() = default;

    /// Symbols in the given order; throws InputError on duplicates or an empty list.
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    char symbol(Letter letter) const { return symbols_[letter]; }
    const std::string& symbols() const { return symbols_; }
    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }

    /// Letter index of `c`; throws InputError naming the symbol if it is not in the alphabet.
    Letter letter(char c) const;

    Word encode(std::string_view text) const;
    std::string decode(const Word& word) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<int, 256> index_ = filled_index();

    static std::array<int, 256> filled_index() {
        std::array<int, 256> idx{};
        idx.fill(-1);
        return idx;
    }
};

/// Human-readable rendering of a word; the empty word prints as "ε".
std::string display_word(const Alphabet& alphabet, const Word& word);

/// Odometer step over words of fixed length; false once every word has been visited.
inline bool next_word(Word& word, std::size_t alphabet_size) {
    for (std::size_t pos = word.size(); pos > 0; --pos) {
        if (++word[pos - 1] < alphabet_size) return true;
        word[pos - 1] = 0;
    }
    return false;
}

/// Calls `fn(word)` for every word of length 0..max_length in length-lexicographic order.
template <class Fn>
void for_each_word(std::size_t alphabet_size, std::size_t max_length, Fn&& fn) {
    Word word;
    fn(static_cast<const Word&>(word));
    if (alphabet_size == 0) return;
    for (std::size_t length = 1; length <= max_length; ++length) {
        word.assign(length, 0);
        do {
            fn(static_cast<const Word&>(word));
        } while (next_word(word, alphabet_size));
    }
}

}  // namespace succinct
