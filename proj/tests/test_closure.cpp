#include "fixtures.hpp"
#include "oracles.hpp"

#include "succinct/canonical.hpp"
#include "succinct/corpus.hpp"
#include "succinct/determinize.hpp"
#include "succinct/equivalence.hpp"
#include "succinct/minimize.hpp"

#include <doctest.h>

#include <set>

using namespace succinct;

namespace {

// Profile indices for (a+b)*a: pY = {y}, pXY = {x, y}, p0 = ∅.
const std::size_t pY = 0, pXY = 1, p0 = 2;

Bits set_of(std::initializer_list<std::size_t> items) { return make_bits(3, items); }

std::set<std::string> keys(const std::vector<Bits>& elements) {
    std::set<std::string> out;
    for (const auto& e : elements) out.insert(oracle::key_of(e));
    return out;
}

}  // namespace

TEST_CASE("derivative and acceptance of the empty word") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    const auto sx = ps.residual(0), sy = ps.residual(1);
    CHECK(derivative(ps, sx, 0) == sy);
    CHECK(derivative(ps, sx, 1) == sx);
    CHECK(derivative(ps, ps.empty_set(), 0).none());
    CHECK(derivative(ps, ps.full_set(), 1).all());
    CHECK(accepts_empty(ps, sy));
    CHECK_FALSE(accepts_empty(ps, ps.empty_set()));
    CHECK(accepts_empty(ps, ps.full_set()));
}

TEST_CASE("the four closures of (a+b)*a") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    const auto csl = csl_closure(ps);
    CHECK(keys(csl.elements()) == keys({Bits(3), set_of({pXY}), set_of({pY, pXY})}));
    const auto cdl = cdl_closure(ps);
    CHECK(keys(cdl.elements()) == keys({Bits(3), set_of({pXY}), set_of({pY, pXY}), set_of({pY, pXY, p0})}));
    const auto vec = vec_closure(ps);
    CHECK(keys(vec.elements()) == keys({Bits(3), set_of({pXY}), set_of({pY, pXY}), set_of({pY})}));
    CHECK(vec.dimension() == 2);
    const auto caba = caba_closure(ps);
    CHECK(caba.size() == 8);
    CHECK(caba.dimension() == 3);
    // Meet of elements 4 = {pXY, p0} and 6 = {pY} is the bottom.
    CHECK((set_of({pXY, p0}) & set_of({pY})).none());
}

TEST_CASE("closures of trivial languages") {
    const Alphabet ab("ab");
    const auto empty = build_profiles(oracle::dfa_from_edges(ab, 1, 0, {}, {{0, 'a', 0}, {0, 'b', 0}}));
    CHECK(csl_closure(empty).size() == 1);
    CHECK(cdl_closure(empty).size() == 2);
    CHECK(vec_closure(empty).size() == 1);
    CHECK(vec_closure(empty).dimension() == 0);
    CHECK(caba_closure(empty).size() == 2);
    const auto all = build_profiles(oracle::dfa_from_edges(ab, 1, 0, {0}, {{0, 'a', 0}, {0, 'b', 0}}));
    CHECK(csl_closure(all).size() == 2);
    CHECK(cdl_closure(all).size() == 2);
}

TEST_CASE("closure DFAs match the reference automata") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    CHECK(oracle::isomorphic(closure_dfa(csl_closure(ps)), fixture::csl_dfa()));
    CHECK(oracle::isomorphic(closure_dfa(cdl_closure(ps)), fixture::cdl_dfa()));
    CHECK(oracle::isomorphic(closure_dfa(vec_closure(ps)), fixture::vec_dfa()));
    CHECK(oracle::isomorphic(closure_dfa(caba_closure(ps)), fixture::caba_dfa()));
}

TEST_CASE("large CABA carriers stay implicit") {
    Limits limits;
    limits.max_caba_profiles = 2;
    const auto caba = caba_closure(build_profiles(fixture::minimal_dfa()), limits);
    CHECK_FALSE(caba.materialized());
    CHECK(caba.size() == 8);
    CHECK(caba.contains(make_bits(3, {0, 2})));
    CHECK_THROWS_AS(caba.elements(), ResourceError);
    CHECK_THROWS_AS(closure_dfa(caba), ResourceError);
}

TEST_CASE("carrier cap") {
    Limits limits;
    limits.max_carrier = 2;
    CHECK_THROWS_AS(csl_closure(build_profiles(fixture::minimal_dfa()), limits), ResourceError);
}

TEST_CASE("corpus: closures against pairwise fixed points") {
    for (const auto& r : regex_corpus()) {
        const auto ps = profiles_of(r);
        const auto& residuals = ps.residual_elements();
        auto seeds = residuals;
        seeds.push_back(ps.empty_set());

        const auto csl = csl_closure(ps);
        CHECK(keys(csl.elements()) ==
              oracle::pairwise_closure(seeds, [](const Bits& x, const Bits& y) { return std::vector<Bits>{x | y}; }));

        auto lattice_seeds = seeds;
        lattice_seeds.push_back(ps.full_set());
        const auto cdl = cdl_closure(ps);
        CHECK(keys(cdl.elements()) == oracle::pairwise_closure(lattice_seeds, [](const Bits& x, const Bits& y) {
                  return std::vector<Bits>{x | y, x & y};
              }));

        const auto vec = vec_closure(ps);
        if (vec.materialized()) {
            CHECK(keys(vec.elements()) == oracle::pairwise_closure(seeds, [](const Bits& x, const Bits& y) {
                      return std::vector<Bits>{x ^ y};
                  }));
            CHECK(vec.size() == (std::size_t{1} << vec.dimension()));
        }

        CHECK(csl.size() <= cdl.size());
        CHECK(cdl.size() <= (std::size_t{1} << std::min<std::size_t>(ps.size(), 63)));
        for (const auto& e : csl.elements()) CHECK(cdl.contains(e));
        const auto caba = caba_closure(ps);
        for (const auto& e : cdl.elements()) CHECK(caba.contains(e));
    }
}

TEST_CASE("corpus: carriers are closed under derivatives and faithful") {
    for (const auto& r : regex_corpus()) {
        const auto ps = profiles_of(r);
        const auto k = ps.alphabet().size();
        const auto words = oracle::words_up_to(k, 6);
        for (auto kind : {ClosureKind::CSL, ClosureKind::CDL, ClosureKind::VEC, ClosureKind::CABA}) {
            const auto algebra = closure(kind, ps);
            if (!algebra.materialized()) continue;
            for (const auto& e : algebra.elements()) {
                CHECK(algebra.contains(e));
                for (Letter a = 0; a < k; ++a) REQUIRE(algebra.index_of(derivative(ps, e, a)));
            }
            const auto dfa = closure_dfa(algebra);
            CHECK(is_reduced(dfa));
            CHECK(minimize(dfa).size() <= dfa.size());
            CHECK(equivalent(dfa, ps.base()).equivalent);
            // State i of the closure DFA accepts exactly the words whose profile lies in element i.
            for (std::size_t i = 0; i < dfa.size(); ++i)
                for (const auto& w : words)
                    REQUIRE(dfa.is_final(dfa.run(static_cast<State>(i), w)) ==
                            element_accepts(ps, algebra.elements()[i], w));
        }
    }
}

TEST_CASE("corpus: direct closure DFAs match the determinize-then-minimize route") {
    for (const auto& r : regex_corpus()) {
        const auto ps = profiles_of(r);
        const auto csl_dfa = closure_dfa(csl_closure(ps));
        CHECK(isomorphic(csl_dfa, minimize(determinize_union(as_nfa(ps.base())))));
        const auto vec = vec_closure(ps);
        if (vec.materialized()) CHECK(isomorphic(closure_dfa(vec), minimize(determinize_xor(as_xfa(ps.base())))));

        // Lifting the DFA to all subsets of states and merging equivalent ones yields the whole carrier.
        const auto n = ps.base().size();
        if (n > 10) continue;
        std::vector<Bits> subsets;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) subsets.emplace_back(n, mask);
        for (auto semantics : {0, 1}) {
            const auto lifted = semantics == 0 ? determinize_from(as_nfa(ps.base()), subsets)
                                               : determinize_from(as_xfa(ps.base()), subsets);
            const auto classes = language_classes(lifted.dfa);
            const std::set<std::size_t> distinct(classes.begin(), classes.end());
            const auto algebra = semantics == 0 ? csl_closure(ps) : vec_closure(ps);
            CHECK(distinct.size() == algebra.size());
        }
    }
}
