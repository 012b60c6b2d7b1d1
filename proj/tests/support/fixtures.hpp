#pragma once

// Reference automata for L = (a+b)*a over {a, b}, written out edge by edge.
// State numbers are arbitrary; comparisons are up to renaming.

#include "oracles.hpp"

namespace fixture {

inline const succinct::Alphabet& ab() {
    static const succinct::Alphabet alphabet("ab");
    return alphabet;
}

/// x initial, y final.
inline succinct::Dfa minimal_dfa() {
    return oracle::dfa_from_edges(ab(), 2, 0, {1}, {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 0}});
}

/// Eight Boolean combinations, usually numbered 1..8; here 0..7.
inline succinct::Dfa caba_dfa() {
    return oracle::dfa_from_edges(ab(), 8, 0, {4, 5, 6, 7},
                                  {{0, 'a', 4}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 1}, {2, 'a', 2}, {2, 'b', 6},
                                   {3, 'a', 7}, {3, 'b', 7}, {4, 'a', 4}, {4, 'b', 0}, {5, 'a', 1}, {5, 'b', 1},
                                   {6, 'a', 2}, {6, 'b', 6}, {7, 'a', 7}, {7, 'b', 7}});
}

/// Atoms xy (initial), y (final), ∅.
inline succinct::Nfa atomaton() {
    return oracle::from_edges<succinct::Nfa>(ab(), 3, {0}, {1},
                                             {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {2, 'a', 2}, {2, 'b', 2},
                                              {2, 'b', 1}});
}

/// ∅, [{x}] (initial), [{y}] (final).
inline succinct::Dfa csl_dfa() {
    return oracle::dfa_from_edges(ab(), 3, 1, {2},
                                  {{0, 'a', 0}, {0, 'b', 0}, {1, 'a', 2}, {1, 'b', 1}, {2, 'a', 2}, {2, 'b', 1}});
}

inline succinct::Nfa canonical_rfsa() {
    return oracle::from_edges<succinct::Nfa>(ab(), 2, {0}, {1},
                                             {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 0}, {1, 'a', 1},
                                              {1, 'b', 0}});
}

/// ∅, x⊕y (final), x (initial), y (final).
inline succinct::Dfa vec_dfa() {
    return oracle::dfa_from_edges(ab(), 4, 2, {1, 3},
                                  {{0, 'a', 0}, {0, 'b', 0}, {1, 'a', 0}, {1, 'b', 0}, {2, 'a', 3}, {2, 'b', 2},
                                   {3, 'a', 3}, {3, 'b', 2}});
}

/// Basis {x, x⊕y}.
inline succinct::Xfa xor_automaton() {
    return oracle::from_edges<succinct::Xfa>(ab(), 2, {0}, {1}, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}});
}

/// 1 (initial), 2 = ∅, 3 (final), 4 = top (final).
inline succinct::Dfa cdl_dfa() {
    return oracle::dfa_from_edges(ab(), 4, 0, {2, 3},
                                  {{0, 'a', 2}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 1}, {2, 'a', 2}, {2, 'b', 0},
                                   {3, 'a', 3}, {3, 'b', 3}});
}

/// x (initial), y (final), top (final).
inline succinct::Nfa distromaton() {
    return oracle::from_edges<succinct::Nfa>(
        ab(), 3, {0}, {1, 2},
        {{0, 'a', 0}, {0, 'a', 1}, {0, 'b', 0}, {1, 'a', 0}, {1, 'a', 1}, {1, 'b', 0}, {2, 'a', 0}, {2, 'a', 1},
         {2, 'a', 2}, {2, 'b', 0}, {2, 'b', 1}, {2, 'b', 2}});
}

/// Generator elements 4, 6, 7, 8 of the CABA spanning; here states 0..3.
inline succinct::Xfa xor_caba_spanning() {
    return oracle::from_edges<succinct::Xfa>(ab(), 4, {2, 3}, {1, 2, 3},
                                             {{0, 'a', 3}, {0, 'b', 3}, {2, 'a', 1}, {2, 'a', 2}, {2, 'b', 2},
                                              {3, 'a', 3}, {3, 'b', 3}});
}

}  // namespace fixture
