#pragma once

#include "succinct/generators.hpp"
#include "succinct/regex.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace succinct {

/// A multi-initial NFA (union mode) or GF(2)-weighted automaton (xor mode) whose states are the
/// elements of a generator.
struct SuccinctAutomaton {
    Combination mode = Combination::Union;
    std::variant<Nfa, Xfa> automaton;
    std::string construction;
    std::vector<std::string> labels;  ///< one per state
    std::vector<Bits> elements;       ///< the generator element behind each state
    bool basis = false;               ///< the generator was a basis

    std::size_t size() const { return elements.size(); }
    const Alphabet& alphabet() const;
    const Bits& initials() const;
    const Bits& finals() const;
    const Bits& successors(State q, Letter a) const;
    AnyAutomaton as_any() const;
    bool accepts(const Word& word) const;
};

/// States Y; initials d(S_L); finals the y whose language contains ε; y steps on a to d(y_a).
/// Refuses (InputError naming the failing element) when the generator law does not hold.
SuccinctAutomaton build_succinct(const GeneratorSet& generator, std::string construction = "custom");

/// Minimal DFA of the input and its profile system.
ProfileSystem profiles_of(const AnyAutomaton& automaton, const Limits& limits = {});
ProfileSystem profiles_of(const Regex& regex, const Limits& limits = {});

SuccinctAutomaton canonical_rfsa(const ProfileSystem& ps, const Limits& limits = {});
SuccinctAutomaton atomaton(const ProfileSystem& ps, const Limits& limits = {});
SuccinctAutomaton distromaton(const ProfileSystem& ps, const Limits& limits = {});
SuccinctAutomaton minimal_xor(const ProfileSystem& ps, Gf2BasisRule rule = Gf2BasisRule::Greedy,
                              const Limits& limits = {});
SuccinctAutomaton minimal_xor_caba(const ProfileSystem& ps, const std::optional<std::vector<Bits>>& custom = std::nullopt,
                                   const Limits& limits = {});

enum class Construction { Rfsa, Atomaton, Distromaton, Xor, XorCaba };

inline constexpr Construction all_constructions[] = {Construction::Rfsa, Construction::Atomaton,
                                                     Construction::Distromaton, Construction::Xor,
                                                     Construction::XorCaba};

/// "rfsa", "atomaton", "distromaton", "xor", "xor-caba"
std::string_view to_string(Construction construction);
Construction parse_construction(std::string_view name);

struct ConstructionOptions {
    Gf2BasisRule basis_rule = Gf2BasisRule::Greedy;  ///< xor
    std::optional<std::vector<Bits>> generator;      ///< custom generator elements
};

/// A custom generator replaces the canonical one: union for rfsa/atomaton/distromaton over their
/// closures (CSL, CABA, CDL), xor for xor/xor-caba (VEC, CABA).
SuccinctAutomaton construct(Construction construction, const ProfileSystem& ps, const ConstructionOptions& options = {},
                            const Limits& limits = {});

/// Human-readable name of a closure element: "∅", "A*", a residual "L" / "w^-1L", an atom "A[w]"
/// with a witness word, or the set of atom witnesses. Atoms take precedence over residuals when
/// `atoms_first` is set.
std::string element_label(const ProfileSystem& ps, const Bits& element, bool atoms_first = false);

}  // namespace succinct
