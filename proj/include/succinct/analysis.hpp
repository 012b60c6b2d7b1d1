#pragma once

#include "succinct/canonical.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace succinct {

struct ClosureReport {
    std::string language;
    std::size_t states = 0;     ///< minimal DFA
    std::size_t profiles = 0;   ///< atoms
    std::size_t csl = 0;
    std::size_t cdl = 0;
    std::size_t vec = 0;        ///< 0 when 2^dimension does not fit in 64 bits
    std::size_t vec_dimension = 0;
    std::size_t caba_log2 = 0;  ///< the CABA closure has 2^caba_log2 elements
    std::size_t rfsa = 0;
    std::size_t atomaton = 0;
    std::size_t distromaton = 0;
    std::size_t xor_automaton = 0;
    std::size_t xor_caba = 0;
    bool csl_eq_cdl = false;
    bool csl_eq_caba = false;
    bool vec_eq_caba = false;
};

/// Sizes of the minimal DFA, the atoms, the four closures and the five canonical automata.
ClosureReport closure_report(const ProfileSystem& ps, const Limits& limits = {});

/// Language of each state taken as the only initial state, as a profile set of a shared system
/// built from the minimized disjoint union of all state languages.
struct StateLanguages {
    ProfileSystem system;
    std::vector<Bits> languages;
    std::vector<State> roots;  ///< state of system.base() standing for each language

    /// Minimal DFA of one state's language.
    Dfa language_dfa(std::size_t state) const;
};

StateLanguages state_languages(const Nfa& nfa, const Limits& limits = {});
StateLanguages state_languages(const Xfa& xfa, const Limits& limits = {});
StateLanguages state_languages(const SuccinctAutomaton& automaton, const Limits& limits = {});

enum class ClosurePair { CslCaba, CslCdl, VecCaba };

/// "CSL/CABA", "CSL/CDL", "VEC/CABA"
std::string_view to_string(ClosurePair pair);
ClosurePair parse_closure_pair(std::string_view name);

struct ClosednessVerdict {
    ClosurePair pair = ClosurePair::CslCaba;
    bool closed = false;
    /// On failure: an element of the larger closure missing from the smaller one, described by
    /// its profile set over the shared system and a word it contains.
    std::optional<Bits> witness;
    std::optional<Word> witness_word;
    std::string description;

    explicit operator bool() const { return closed; }
};

/// Whether the two closures of the state languages coincide.
ClosednessVerdict closedness_check(const StateLanguages& languages, ClosurePair pair, const Limits& limits = {});

template <class Automaton>
ClosednessVerdict closedness_check(const Automaton& automaton, ClosurePair pair, const Limits& limits = {}) {
    return closedness_check(state_languages(automaton, limits), pair, limits);
}

/// Extra condition on the state languages of brute-force candidates.
enum class BruteConstraint {
    None,
    StatesInResidualCsl,  ///< every state language is a union of residuals
    StatesInResidualVec,  ///< every state language is a GF(2) sum of residuals
    ClosedCslCaba,
    ClosedCslCdl,
    ClosedVecCaba,
};

struct BruteForceResult {
    std::optional<std::size_t> minimum;  ///< smallest size found, nothing if none up to max_states
    std::size_t candidates = 0;          ///< automata examined
};

/// Exhaustive search over all automata with up to `max_states` states (every choice of initial
/// states, final states and transitions). Refused (InputError) beyond 2 letters or 3 states.
BruteForceResult brute_force_min_nfa(const Dfa& language, std::size_t max_states, Combination mode,
                                     BruteConstraint constraint = BruteConstraint::None);

struct SizeComparison {
    std::size_t checked = 0;
    std::array<std::size_t, 3> flag_counts{};  ///< CSL=CABA, CSL=CDL, VEC=CABA
    std::vector<std::string> violations;

    explicit operator bool() const { return violations.empty(); }
};

/// Checks RFSA=átomaton under CSL=CABA, RFSA=distromaton under CSL=CDL and xor=xor-CABA under
/// VEC=CABA for every report.
SizeComparison size_comparison_check(const std::vector<ClosureReport>& reports);

}  // namespace succinct
