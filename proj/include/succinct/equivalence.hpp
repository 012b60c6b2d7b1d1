#pragma once

#include "succinct/automaton.hpp"
#include "succinct/limits.hpp"

#include <optional>

namespace succinct {

struct EquivalenceResult {
    bool equivalent = true;
    /// Shortest distinguishing word (length-lexicographically least among the shortest).
    std::optional<Word> counterexample;

    explicit operator bool() const { return equivalent; }
};

/// Exact language equivalence. Nfa and Xfa inputs are determinized under their own semantics.
/// Throws InputError when the alphabets differ.
EquivalenceResult equivalent(const AnyAutomaton& lhs, const AnyAutomaton& rhs, const Limits& limits = {});

/// Isomorphism of the parts reachable from the initial states, respecting letters and finality.
bool isomorphic(const Dfa& lhs, const Dfa& rhs);

}  // namespace succinct
