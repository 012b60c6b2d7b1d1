#include "succinct/alphabet.hpp"

#include "succinct/error.hpp"

namespace succinct {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) throw InputError("alphabet must contain at least one symbol");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto& slot = index_[static_cast<unsigned char>(symbols_[i])];
        if (slot >= 0) throw InputError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        slot = static_cast<int>(i);
    }
}

Letter Alphabet::letter(char c) const {
    int idx = index_[static_cast<unsigned char>(c)];
    if (idx < 0) throw InputError(std::string("symbol '") + c + "' is not in the alphabet \"" + symbols_ + "\"");
    return static_cast<Letter>(idx);
}

Word Alphabet::encode(std::string_view text) const {
    Word word;
    word.reserve(text.size());
    for (char c : text) word.push_back(letter(c));
    return word;
}

std::string Alphabet::decode(const Word& word) const {
    std::string out;
    out.reserve(word.size());
    for (auto l : word) out.push_back(symbols_.at(l));
    return out;
}

std::string display_word(const Alphabet& alphabet, const Word& word) {
    return word.empty() ? std::string("ε") : alphabet.decode(word);
}

}  // namespace succinct
