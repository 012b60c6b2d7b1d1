#pragma once

#include "succinct/alphabet.hpp"
#include "succinct/bitset.hpp"
#include "succinct/error.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace succinct {

using State = std::uint32_t;

/// Total deterministic acceptor. Transitions are stored row-major: next(q, a) = delta[q * |A| + a].
class Dfa {
public:
    Dfa(Alphabet alphabet, std::size_t state_count, State initial, Bits finals, std::vector<State> delta);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return state_count_; }
    State initial() const { return initial_; }
    const Bits& finals() const { return finals_; }
    bool is_final(State q) const { return finals_.test(q); }
    State next(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
    const std::vector<State>& transitions() const { return delta_; }

    State run(State from, const Word& word) const;
    bool accepts(const Word& word) const { return is_final(run(initial_, word)); }
    /// Throws InputError naming the first symbol that is not in the alphabet.
    bool accepts(std::string_view word) const { return accepts(alphabet_.encode(word)); }

    /// Set only through mark_minimal(), which verifies the property.
    bool is_minimal() const { return minimal_; }

    Dfa with_initial(State q) const;

    /// Structural equality; the minimal flag is not compared.
    friend bool operator==(const Dfa& lhs, const Dfa& rhs) {
        return lhs.alphabet_ == rhs.alphabet_ && lhs.state_count_ == rhs.state_count_ &&
               lhs.initial_ == rhs.initial_ && lhs.finals_ == rhs.finals_ && lhs.delta_ == rhs.delta_;
    }

private:
    friend Dfa mark_minimal(Dfa dfa);

    Alphabet alphabet_;
    std::size_t state_count_;
    State initial_;
    Bits finals_;
    std::vector<State> delta_;
    bool minimal_ = false;
};

enum class Semantics { Union, Xor };

/// Multi-initial automaton with set-valued transitions. Under Union semantics a word is accepted
/// when some run reaches a final state; under Xor semantics when the number of accepting runs is odd.
template <Semantics S>
class BasicNfa {
public:
    static constexpr Semantics semantics = S;

    BasicNfa(Alphabet alphabet, std::size_t state_count, Bits initials, Bits finals, std::vector<Bits> delta)
        : alphabet_(std::move(alphabet)),
          state_count_(state_count),
          initials_(std::move(initials)),
          finals_(std::move(finals)),
          delta_(std::move(delta)) {
        if (initials_.size() != state_count_ || finals_.size() != state_count_)
            throw InputError("initial/final sets must range over the automaton's states");
        if (delta_.size() != state_count_ * alphabet_.size())
            throw InputError("transition table must have one entry per (state, letter)");
        for (const auto& targets : delta_)
            if (targets.size() != state_count_) throw InputError("transition targets must range over the automaton's states");
    }

    /// Empty automaton over `alphabet` with `state_count` states and no transitions.
    static BasicNfa empty(Alphabet alphabet, std::size_t state_count) {
        std::vector<Bits> delta(state_count * alphabet.size(), Bits(state_count));
        return BasicNfa(std::move(alphabet), state_count, Bits(state_count), Bits(state_count), std::move(delta));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return state_count_; }
    const Bits& initials() const { return initials_; }
    const Bits& finals() const { return finals_; }
    const Bits& successors(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
    const std::vector<Bits>& transitions() const { return delta_; }

    /// One step of the determinized automaton: union (or GF(2) sum) of successor sets.
    Bits step(const Bits& current, Letter a) const {
        Bits out(state_count_);
        for (auto q = current.find_first(); q != Bits::npos; q = current.find_next(q)) {
            if constexpr (S == Semantics::Union)
                out |= successors(static_cast<State>(q), a);
            else
                out ^= successors(static_cast<State>(q), a);
        }
        return out;
    }

    bool accepting(const Bits& current) const {
        if constexpr (S == Semantics::Union)
            return current.intersects(finals_);
        else
            return odd_overlap(current, finals_);
    }

    Bits run(Bits from, const Word& word) const {
        for (auto a : word) from = step(from, a);
        return from;
    }

    bool accepts(const Word& word) const { return accepting(run(initials_, word)); }
    bool accepts(std::string_view word) const { return accepts(alphabet_.encode(word)); }

    /// Same transition structure with `initials` as the pointing.
    BasicNfa with_initials(Bits initials) const {
        BasicNfa copy = *this;
        if (initials.size() != state_count_) throw InputError("initial set has the wrong size");
        copy.initials_ = std::move(initials);
        return copy;
    }

    friend bool operator==(const BasicNfa&, const BasicNfa&) = default;

private:
    Alphabet alphabet_;
    std::size_t state_count_;
    Bits initials_;
    Bits finals_;
    std::vector<Bits> delta_;
};

using Nfa = BasicNfa<Semantics::Union>;
using Xfa = BasicNfa<Semantics::Xor>;
using AnyAutomaton = std::variant<Dfa, Nfa, Xfa>;

inline bool dfa_accepts(const Dfa& dfa, std::string_view word) { return dfa.accepts(word); }
inline bool nfa_accepts(const Nfa& nfa, std::string_view word) { return nfa.accepts(word); }
inline bool xfa_accepts(const Xfa& xfa, std::string_view word) { return xfa.accepts(word); }

const Alphabet& alphabet_of(const AnyAutomaton& automaton);
std::size_t state_count(const AnyAutomaton& automaton);
bool accepts(const AnyAutomaton& automaton, const Word& word);

/// The DFA viewed as a single-initial automaton with singleton successor sets.
template <Semantics S>
BasicNfa<S> embed(const Dfa& dfa) {
    const auto n = dfa.size();
    const auto k = dfa.alphabet().size();
    std::vector<Bits> delta(n * k, Bits(n));
    for (State q = 0; q < n; ++q)
        for (Letter a = 0; a < k; ++a) delta[q * k + a].set(dfa.next(q, a));
    return BasicNfa<S>(dfa.alphabet(), n, singleton_bits(n, dfa.initial()), dfa.finals(), std::move(delta));
}

inline Nfa as_nfa(const Dfa& dfa) { return embed<Semantics::Union>(dfa); }
inline Xfa as_xfa(const Dfa& dfa) { return embed<Semantics::Xor>(dfa); }

}  // namespace succinct
