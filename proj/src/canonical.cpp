#include "succinct/canonical.hpp"

#include "succinct/determinize.hpp"
#include "succinct/minimize.hpp"

#include <deque>

namespace succinct {

const Alphabet& SuccinctAutomaton::alphabet() const {
    return std::visit([](const auto& a) -> const Alphabet& { return a.alphabet(); }, automaton);
}

const Bits& SuccinctAutomaton::initials() const {
    return std::visit([](const auto& a) -> const Bits& { return a.initials(); }, automaton);
}

const Bits& SuccinctAutomaton::finals() const {
    return std::visit([](const auto& a) -> const Bits& { return a.finals(); }, automaton);
}

const Bits& SuccinctAutomaton::successors(State q, Letter a) const {
    return std::visit([&](const auto& m) -> const Bits& { return m.successors(q, a); }, automaton);
}

AnyAutomaton SuccinctAutomaton::as_any() const {
    return std::visit([](const auto& a) -> AnyAutomaton { return a; }, automaton);
}

bool SuccinctAutomaton::accepts(const Word& word) const {
    return std::visit([&](const auto& a) { return a.accepts(word); }, automaton);
}

namespace {

std::vector<Word> access_words(const Dfa& dfa) {
    std::vector<Word> words(dfa.size());
    std::vector<bool> seen(dfa.size(), false);
    std::deque<State> queue{dfa.initial()};
    seen[dfa.initial()] = true;
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < dfa.alphabet().size(); ++a) {
            const State r = dfa.next(q, a);
            if (seen[r]) continue;
            seen[r] = true;
            words[r] = words[q];
            words[r].push_back(a);
            queue.push_back(r);
        }
    }
    for (State q = 0; q < dfa.size(); ++q)
        if (!seen[q]) words[q].clear();
    return words;
}

}  // namespace

std::string element_label(const ProfileSystem& ps, const Bits& element, bool atoms_first) {
    const auto& dfa = ps.base();
    const auto& alphabet = ps.alphabet();
    if (element.none()) return "∅";
    if (element.all()) return "A*";
    auto atom = [&] { return "A[" + display_word(alphabet, ps.witness(element.find_first())) + "]"; };
    if (atoms_first && element.count() == 1) return atom();
    const auto words = access_words(dfa);
    for (State q = 0; q < dfa.size(); ++q) {
        if (ps.residual(q) != element) continue;
        if (q != dfa.initial() && words[q].empty()) break;
        return words[q].empty() ? "L" : alphabet.decode(words[q]) + "^-1L";
    }
    if (element.count() == 1) return atom();
    std::string out = "{";
    bool first = true;
    for (auto p : members(element)) {
        if (!first) out += ',';
        out += display_word(alphabet, ps.witness(p));
        first = false;
    }
    return out + "}";
}

SuccinctAutomaton build_succinct(const GeneratorSet& generator, std::string construction) {
    const auto verdict = validate_generator(generator);
    if (!verdict) throw InputError("construction refused: " + verdict.message);

    const auto& algebra = generator.algebra();
    const auto& ps = algebra.profiles();
    const auto n = generator.size();
    const auto k = ps.alphabet().size();

    Bits initials = generator.decompose(algebra.point());
    Bits finals(n);
    std::vector<Bits> delta;
    delta.reserve(n * k);
    for (std::size_t y = 0; y < n; ++y) {
        const auto& element = generator.element(y);
        if (accepts_empty(ps, element)) finals.set(y);
        for (Letter a = 0; a < k; ++a) delta.push_back(generator.decompose(derivative(ps, element, a)));
    }

    auto automaton = generator.combination() == Combination::Union
                         ? std::variant<Nfa, Xfa>(Nfa(ps.alphabet(), n, std::move(initials), std::move(finals),
                                                      std::move(delta)))
                         : std::variant<Nfa, Xfa>(Xfa(ps.alphabet(), n, std::move(initials), std::move(finals),
                                                      std::move(delta)));
    SuccinctAutomaton out{generator.combination(), std::move(automaton), std::move(construction), {},
                          generator.elements(), generator.is_basis()};
    const bool atoms_first = algebra.kind() == ClosureKind::CABA;
    for (const auto& element : out.elements) out.labels.push_back(element_label(ps, element, atoms_first));
    return out;
}

ProfileSystem profiles_of(const AnyAutomaton& automaton, const Limits& limits) {
    return build_profiles(minimize(determinize(automaton, limits)), limits);
}

ProfileSystem profiles_of(const Regex& regex, const Limits& limits) {
    return build_profiles(regex_to_min_dfa(regex, limits), limits);
}

SuccinctAutomaton canonical_rfsa(const ProfileSystem& ps, const Limits& limits) {
    return build_succinct(join_irreducibles(csl_closure(ps, limits)), "rfsa");
}

SuccinctAutomaton atomaton(const ProfileSystem& ps, const Limits& limits) {
    return build_succinct(atoms_generator(ps, limits), "atomaton");
}

SuccinctAutomaton distromaton(const ProfileSystem& ps, const Limits& limits) {
    return build_succinct(join_irreducibles(cdl_closure(ps, limits)), "distromaton");
}

SuccinctAutomaton minimal_xor(const ProfileSystem& ps, Gf2BasisRule rule, const Limits& limits) {
    return build_succinct(gf2_basis(vec_closure(ps, limits), rule), "xor");
}

SuccinctAutomaton minimal_xor_caba(const ProfileSystem& ps, const std::optional<std::vector<Bits>>& custom,
                                   const Limits& limits) {
    return build_succinct(caba_vector_basis(ps, custom, limits), "xor-caba");
}

std::string_view to_string(Construction construction) {
    switch (construction) {
        case Construction::Rfsa: return "rfsa";
        case Construction::Atomaton: return "atomaton";
        case Construction::Distromaton: return "distromaton";
        case Construction::Xor: return "xor";
        case Construction::XorCaba: return "xor-caba";
    }
    return "?";
}

Construction parse_construction(std::string_view name) {
    for (auto c : all_constructions)
        if (to_string(c) == name) return c;
    throw InputError("unknown construction '" + std::string(name) +
                     "' (expected rfsa, atomaton, distromaton, xor or xor-caba)");
}

SuccinctAutomaton construct(Construction construction, const ProfileSystem& ps, const ConstructionOptions& options,
                            const Limits& limits) {
    const std::string name(to_string(construction));
    if (options.generator) {
        switch (construction) {
            case Construction::Rfsa:
                return build_succinct(GeneratorSet(csl_closure(ps, limits), *options.generator, Combination::Union), name);
            case Construction::Atomaton:
                return build_succinct(GeneratorSet(caba_closure(ps, limits), *options.generator, Combination::Union),
                                      name);
            case Construction::Distromaton:
                return build_succinct(GeneratorSet(cdl_closure(ps, limits), *options.generator, Combination::Union),
                                      name);
            case Construction::Xor:
                return build_succinct(GeneratorSet(vec_closure(ps, limits), *options.generator, Combination::Xor), name);
            case Construction::XorCaba: return minimal_xor_caba(ps, options.generator, limits);
        }
    }
    switch (construction) {
        case Construction::Rfsa: return canonical_rfsa(ps, limits);
        case Construction::Atomaton: return atomaton(ps, limits);
        case Construction::Distromaton: return distromaton(ps, limits);
        case Construction::Xor: return minimal_xor(ps, options.basis_rule, limits);
        case Construction::XorCaba: return minimal_xor_caba(ps, std::nullopt, limits);
    }
    throw InputError("unknown construction");
}

}  // namespace succinct
