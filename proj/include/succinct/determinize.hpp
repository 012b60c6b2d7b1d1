#pragma once

#include "succinct/automaton.hpp"
#include "succinct/limits.hpp"

#include <vector>

namespace succinct {

/// Result of a subset (or vector) construction started from several sets at once.
/// `subsets[q]` is the set of source states that DFA state q stands for; `roots[i]` is the DFA
/// state reached from `starts[i]`.
struct Determinized {
    Dfa dfa;
    std::vector<State> roots;
    std::vector<Bits> subsets;
};

/// Reachable subset construction. States are numbered in BFS order from the starts (in the given
/// order), exploring letters in alphabet order. The DFA's initial state is the first root.
template <Semantics S>
Determinized determinize_from(const BasicNfa<S>& automaton, const std::vector<Bits>& starts, const Limits& limits = {});

extern template Determinized determinize_from(const Nfa&, const std::vector<Bits>&, const Limits&);
extern template Determinized determinize_from(const Xfa&, const std::vector<Bits>&, const Limits&);

/// Classical powerset construction restricted to reachable subsets.
Dfa determinize_union(const Nfa& nfa, const Limits& limits = {});

/// Vector construction over GF(2): states are the reachable characteristic vectors,
/// a vector is final iff it has odd overlap with the final states.
Dfa determinize_xor(const Xfa& xfa, const Limits& limits = {});

Dfa determinize(const AnyAutomaton& automaton, const Limits& limits = {});

}  // namespace succinct
