#include "fixtures.hpp"
#include "oracles.hpp"

#include "succinct/analysis.hpp"
#include "succinct/corpus.hpp"
#include "succinct/determinize.hpp"
#include "succinct/equivalence.hpp"
#include "succinct/minimize.hpp"

#include <doctest.h>

using namespace succinct;

namespace {

ProfileSystem worked_example() { return build_profiles(fixture::minimal_dfa()); }

const Nfa& nfa_of(const SuccinctAutomaton& a) { return std::get<Nfa>(a.automaton); }
const Xfa& xfa_of(const SuccinctAutomaton& a) { return std::get<Xfa>(a.automaton); }

}  // namespace

TEST_CASE("canonical RFSA") {
    const auto rfsa = canonical_rfsa(worked_example());
    CHECK(rfsa.mode == Combination::Union);
    CHECK(rfsa.size() == 2);
    CHECK(oracle::isomorphic(nfa_of(rfsa), fixture::canonical_rfsa()));
    CHECK(rfsa.labels == std::vector<std::string>{"L", "a^-1L"});
}

TEST_CASE("atomaton") {
    const auto atoms = atomaton(worked_example());
    CHECK(atoms.size() == 3);
    CHECK(oracle::isomorphic(nfa_of(atoms), fixture::atomaton()));
    CHECK(atoms.labels == std::vector<std::string>{"A[ε]", "A[a]", "A[b]"});

    const auto all = atomaton(profiles_of(parse_regex("(a+b)*", fixture::ab())));
    REQUIRE(all.size() == 1);
    CHECK(all.initials().test(0));
    CHECK(all.finals().test(0));
    CHECK(all.successors(0, 0).test(0));
    CHECK(all.successors(0, 1).test(0));
}

TEST_CASE("distromaton") {
    const auto d = distromaton(worked_example());
    CHECK(d.size() == 3);
    CHECK(oracle::isomorphic(nfa_of(d), fixture::distromaton()));

    const auto empty = distromaton(profiles_of(parse_regex("~0", fixture::ab())));
    CHECK(empty.size() == 1);
    CHECK(empty.initials().none());
}

TEST_CASE("minimal xor automaton") {
    const auto greedy = minimal_xor(worked_example());
    CHECK(greedy.size() == 2);
    CHECK(greedy.mode == Combination::Xor);
    const auto prefix = minimal_xor(worked_example(), Gf2BasisRule::PrefixXor);
    CHECK(oracle::isomorphic(xfa_of(prefix), fixture::xor_automaton()));
    CHECK(minimal_xor(profiles_of(parse_regex("~0", fixture::ab()))).size() == 0);
}

TEST_CASE("minimal xor-CABA automaton") {
    const auto ps = worked_example();
    const auto standard = minimal_xor_caba(ps);
    CHECK(standard.size() == 3);
    CHECK(standard.basis);
    // With disjoint atoms the xor and union readings coincide: same graph as the atomaton.
    CHECK(oracle::isomorphic_by_permutation(oracle::graph_of(xfa_of(standard)), oracle::graph_of(fixture::atomaton())));

    const std::size_t pY = 0, pXY = 1, p0 = 2;
    const std::vector<Bits> spanning{make_bits(3, {pXY, p0}), make_bits(3, {pY}), make_bits(3, {pY, p0}),
                                   make_bits(3, {pY, pXY, p0})};
    const auto spanned = minimal_xor_caba(ps, spanning);
    CHECK(spanned.size() == 4);
    CHECK_FALSE(spanned.basis);
    CHECK(oracle::isomorphic(xfa_of(spanned), fixture::xor_caba_spanning()));
    CHECK(equivalent(spanned.as_any(), fixture::minimal_dfa()).equivalent);
}

TEST_CASE("empty language") {
    const auto ps = profiles_of(parse_regex("~0", fixture::ab()));
    const auto rfsa = canonical_rfsa(ps);
    CHECK(rfsa.size() == 0);
    for (const auto& w : oracle::words_up_to(2, 4)) CHECK_FALSE(rfsa.accepts(w));
}

TEST_CASE("invalid generators are refused") {
    const auto ps = worked_example();
    const GeneratorSet partial(csl_closure(ps), {ps.residual(0)}, Combination::Union);
    CHECK_THROWS_WITH_AS(build_succinct(partial), doctest::Contains("refused"), InputError);
    ConstructionOptions options;
    options.generator = std::vector<Bits>{Bits(3)};
    CHECK_THROWS_AS(construct(Construction::XorCaba, ps, options), InputError);
}

TEST_CASE("construction names") {
    for (auto c : all_constructions) CHECK(parse_construction(to_string(c)) == c);
    CHECK_THROWS_AS(parse_construction("dfa"), InputError);
}

TEST_CASE("corpus: every construction accepts the input language") {
    for (const auto& r : regex_corpus()) {
        const auto ps = profiles_of(r);
        const auto words = oracle::words_up_to(ps.alphabet().size(), 6);
        for (auto c : all_constructions) {
            const auto automaton = construct(c, ps);
            REQUIRE_MESSAGE(equivalent(automaton.as_any(), ps.base()).equivalent, r.to_string(), " ", to_string(c));
            // Each state accepts the language of its generator element.
            const auto languages = state_languages(automaton);
            for (std::size_t y = 0; y < automaton.size(); ++y)
                for (const auto& w : words) {
                    REQUIRE(element_accepts(languages.system, languages.languages[y], w) ==
                            element_accepts(ps, automaton.elements[y], w));
                }
        }
    }
}

TEST_CASE("corpus: canonical automata are fixed points of their own construction") {
    for (const auto& r : regex_corpus({60, 99, 6, 3, false})) {
        const auto ps = profiles_of(r);
        for (auto c : all_constructions) {
            const auto first = construct(c, ps);
            const auto again = construct(c, profiles_of(first.as_any()));
            CHECK(again.size() == first.size());
        }
    }
}

TEST_CASE("bases give DFAs that embed into the closure DFA") {
    const auto ps = worked_example();
    const auto caba_dfa = closure_dfa(caba_closure(ps));
    const auto atoms = atomaton(ps);
    const auto lifted = determinize_from(nfa_of(atoms), {nfa_of(atoms).initials()});
    // Reachable part of the lifted atomaton and of the CABA DFA coincide.
    CHECK(isomorphic(lifted.dfa, caba_dfa));

    // Over all subsets of atoms the lifted automaton is the full CABA DFA.
    std::vector<Bits> all;
    for (std::size_t mask = 0; mask < 8; ++mask) all.emplace_back(3, mask);
    const auto full = determinize_from(nfa_of(atoms), all);
    CHECK(full.dfa.size() == 8);
    CHECK(is_reduced(full.dfa));

    const auto vec_dfa = closure_dfa(vec_closure(ps));
    const auto xor_automaton = minimal_xor(ps);
    const auto lifted_xor = determinize_from(xfa_of(xor_automaton), {xfa_of(xor_automaton).initials()});
    CHECK(isomorphic(lifted_xor.dfa, vec_dfa));
    CHECK(lifted_xor.dfa.size() <= vec_dfa.size());
}
