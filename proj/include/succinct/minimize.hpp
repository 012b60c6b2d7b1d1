#pragma once

#include "succinct/automaton.hpp"

#include <cstddef>
#include <vector>

namespace succinct {

/// Myhill–Nerode classes of all states (reachable or not), by Hopcroft partition refinement.
/// Two states share a class id iff they accept the same language.
std::vector<std::size_t> language_classes(const Dfa& dfa);

/// True iff no two distinct states accept the same language.
bool is_reduced(const Dfa& dfa);

/// True iff every state is reachable from the initial state and the DFA is reduced.
bool is_minimal_dfa(const Dfa& dfa);

/// Sets the minimal flag after verifying it; throws InputError otherwise.
Dfa mark_minimal(Dfa dfa);

/// Minimal DFA with canonical numbering: BFS from the initial state, letters in alphabet order.
/// Equal languages yield identical (operator==) results.
Dfa minimize(const Dfa& dfa);

/// A DFA together with distinguished entry states.
struct RootedDfa {
    Dfa dfa;
    std::vector<State> roots;
};

/// Prunes to states reachable from any root, merges equivalent states and renumbers by BFS from
/// the roots in order. Roots that accept the same language map to the same state.
RootedDfa minimize_rooted(const Dfa& dfa, const std::vector<State>& roots);

}  // namespace succinct
