#include "fixtures.hpp"
#include "oracles.hpp"

#include "succinct/canonical.hpp"
#include "succinct/corpus.hpp"
#include "succinct/gf2.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace succinct;

namespace {

const std::size_t pY = 0, pXY = 1, p0 = 2;

Bits set_of(std::initializer_list<std::size_t> items) { return make_bits(3, items); }

/// Join-irreducibles straight from the definition, by scanning the carrier.
std::set<std::string> naive_join_irreducibles(const ClosureAlgebra& algebra) {
    std::set<std::string> out;
    for (const auto& s : algebra.elements()) {
        if (s.none()) continue;
        Bits below(s.size());
        for (const auto& t : algebra.elements())
            if (t.is_proper_subset_of(s)) below |= t;
        if (below != s) out.insert(oracle::key_of(s));
    }
    return out;
}

std::set<std::string> keys(const std::vector<Bits>& elements) {
    std::set<std::string> out;
    for (const auto& e : elements) out.insert(oracle::key_of(e));
    return out;
}

/// Elements 4, 6, 7, 8 of the CABA: spans it without being independent.
std::vector<Bits> spanning_generator() {
    return {set_of({pXY, p0}), set_of({pY}), set_of({pY, p0}), set_of({pY, pXY, p0})};
}

}  // namespace

TEST_CASE("GF(2) elimination") {
    Gf2Eliminator elim(3);
    CHECK(elim.insert(make_bits(3, {0, 1})));
    CHECK(elim.insert(make_bits(3, {1, 2})));
    CHECK_FALSE(elim.insert(make_bits(3, {0, 2})));
    CHECK(elim.rank() == 2);
    CHECK(elim.kernel().size() == 1);
    CHECK(elim.kernel()[0] == make_bits(3, {0, 1, 2}));
    CHECK(elim.in_span(Bits(3)));
    CHECK_FALSE(elim.in_span(make_bits(3, {0})));
    // {0,2} = v0 ⊕ v1 = v2; the least coefficient vector uses only v2.
    const auto least = elim.solve_lex_least(make_bits(3, {0, 2}));
    REQUIRE(least);
    CHECK(*least == make_bits(3, {2}));
    CHECK(gf2_rank({make_bits(2, {0}), make_bits(2, {0})}, 2) == 1);
}

TEST_CASE("lexicographically least solutions agree with exhaustive search") {
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.4);
    for (int round = 0; round < 200; ++round) {
        const std::size_t width = 4, count = 6;
        std::vector<Bits> vectors(count, Bits(width));
        for (auto& v : vectors)
            for (std::size_t i = 0; i < width; ++i) v[i] = coin(rng);
        Gf2Eliminator elim(width);
        for (const auto& v : vectors) elim.insert(v);
        for (std::size_t t = 0; t < (1U << width); ++t) {
            const Bits target(width, t);
            std::optional<Bits> best;
            // Enumerate coefficient vectors in lexicographic order, v_0 most significant.
            for (std::size_t code = 0; code < (1U << count) && !best; ++code) {
                Bits c(count);
                for (std::size_t i = 0; i < count; ++i) c[i] = (code >> (count - 1 - i)) & 1U;
                Bits sum(width);
                for (auto i : members(c)) sum ^= vectors[i];
                if (sum == target) best = c;
            }
            const auto got = elim.solve_lex_least(target);
            REQUIRE(got.has_value() == best.has_value());
            if (got) REQUIRE(*got == *best);
        }
    }
}

TEST_CASE("join-irreducibles of the worked example") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    const auto csl = join_irreducibles(csl_closure(ps));
    CHECK(csl.elements() == std::vector<Bits>{ps.residual(0), ps.residual(1)});
    CHECK(csl.combination() == Combination::Union);
    CHECK_FALSE(csl.is_basis());
    const auto cdl = join_irreducibles(cdl_closure(ps));
    CHECK(cdl.elements() == std::vector<Bits>{ps.residual(0), ps.residual(1), ps.full_set()});

    const auto empty = build_profiles(oracle::dfa_from_edges(fixture::ab(), 1, 0, {}, {{0, 'a', 0}, {0, 'b', 0}}));
    CHECK(join_irreducibles(csl_closure(empty)).size() == 0);
    CHECK_THROWS_AS(join_irreducibles(vec_closure(ps)), InputError);
}

TEST_CASE("atoms") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    const auto atoms = atoms_generator(ps);
    CHECK(atoms.elements() == std::vector<Bits>{set_of({pY}), set_of({pXY}), set_of({p0})});
    CHECK(atoms.is_basis());
    CHECK(atoms.decompose(ps.full_set()).all());
    const auto verdict = validate_generator(atoms);
    CHECK(verdict.generator_law);
    CHECK(verdict.basis_law);
}

TEST_CASE("GF(2) bases of the span of residuals") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    const auto basis = gf2_basis(vec_closure(ps));
    CHECK(basis.elements() == std::vector<Bits>{ps.residual(0), ps.residual(1)});
    CHECK(basis.is_basis());
    CHECK(basis.decompose(set_of({pY})) == make_bits(2, {0, 1}));
    const auto prefix = gf2_basis(vec_closure(ps), Gf2BasisRule::PrefixXor);
    CHECK(prefix.elements() == std::vector<Bits>{set_of({pXY}), set_of({pY})});

    const auto empty = build_profiles(oracle::dfa_from_edges(fixture::ab(), 1, 0, {}, {{0, 'a', 0}, {0, 'b', 0}}));
    const auto zero = gf2_basis(vec_closure(empty));
    CHECK(zero.size() == 0);
    CHECK(zero.decompose(empty.empty_set()).size() == 0);
}

TEST_CASE("CABA as a GF(2) space") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    const auto standard = caba_vector_basis(ps);
    CHECK(standard.size() == 3);
    CHECK(standard.is_basis());

    const auto spanning = caba_vector_basis(ps, spanning_generator());
    CHECK(spanning.size() == 4);
    CHECK_FALSE(spanning.is_basis());
    CHECK((spanning_generator()[0] ^ spanning_generator()[1]) == spanning_generator()[3]);
    const auto verdict = validate_generator(spanning);
    CHECK(verdict.generator_law);
    CHECK_FALSE(verdict.basis_law);
    // The least decomposition of element 1 = {pXY} is 7 ⊕ 8.
    CHECK(spanning.decompose(set_of({pXY})) == make_bits(4, {2, 3}));

    CHECK_THROWS_WITH_AS(caba_vector_basis(ps, std::vector<Bits>{Bits(3)}),
                         doctest::Contains("not a generator of the CABA"), InputError);
}

TEST_CASE("validation reports the failing element") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    const GeneratorSet partial(csl_closure(ps), {ps.residual(0)}, Combination::Union);
    const auto verdict = validate_generator(partial);
    CHECK_FALSE(verdict.generator_law);
    REQUIRE(verdict.failing_element);
    CHECK(*verdict.failing_element == ps.residual(1));

    const GeneratorSet outside(csl_closure(ps), {set_of({pY})}, Combination::Union);
    CHECK_FALSE(validate_generator(outside).generator_law);
}

TEST_CASE("no smaller generators exist for the worked example") {
    const auto ps = build_profiles(fixture::minimal_dfa());
    const auto csl = csl_closure(ps);
    // Any single element of the carrier fails to generate it.
    for (const auto& e : csl.elements())
        CHECK_FALSE(validate_generator(GeneratorSet(csl, {e}, Combination::Union)).generator_law);
    // No two subsets of P span 2^P over GF(2).
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) CHECK(gf2_rank({Bits(3, x), Bits(3, y)}, 3) < 3);
}

TEST_CASE("corpus: generator and basis laws") {
    std::mt19937_64 rng(3);
    for (const auto& r : regex_corpus()) {
        const auto ps = profiles_of(r);
        const auto csl = csl_closure(ps);
        const auto cdl = cdl_closure(ps);
        const auto csl_ji = join_irreducibles(csl);
        const auto cdl_ji = join_irreducibles(cdl);
        CHECK(keys(csl_ji.elements()) == naive_join_irreducibles(csl));
        CHECK(keys(cdl_ji.elements()) == naive_join_irreducibles(cdl));
        CHECK(validate_generator(csl_ji).generator_law);
        CHECK(validate_generator(cdl_ji).generator_law);

        // Every lattice element is the union of the join-irreducibles below it.
        for (const auto& x : cdl.elements()) CHECK(cdl_ji.combine(cdl_ji.decompose(x)) == x);

        const auto atoms = atoms_generator(ps);
        const auto atoms_verdict = validate_generator(atoms);
        CHECK(atoms_verdict.generator_law);
        CHECK(atoms_verdict.basis_law);

        const auto vec = vec_closure(ps);
        const auto basis = gf2_basis(vec);
        CHECK(basis.is_basis());
        CHECK(basis.size() == vec.dimension());
        CHECK(validate_generator(basis).generator_law);
        // decompose ∘ combine on random combinations.
        std::bernoulli_distribution coin(0.5);
        for (int sample = 0; sample < 20; ++sample) {
            Bits phi(basis.size());
            for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = coin(rng);
            REQUIRE(basis.decompose(basis.combine(phi)) == phi);
        }

        const auto caba = caba_vector_basis(ps);
        CHECK(validate_generator(caba).basis_law);
    }
}
