#include "succinct/generators.hpp"

#include "succinct/gf2.hpp"

#include <algorithm>
#include <unordered_set>

namespace succinct {

std::string_view to_string(Combination combination) {
    return combination == Combination::Union ? "union" : "xor";
}

namespace {

/// Union decompositions are unique iff no element lies below the union of the others.
bool union_basis(const std::vector<Bits>& elements, std::size_t width) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        Bits others(width);
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (j != i) others |= elements[j];
        if (elements[i].is_subset_of(others)) return false;
    }
    return true;
}

}  // namespace

GeneratorSet::GeneratorSet(ClosureAlgebra algebra, std::vector<Bits> elements, Combination combination)
    : algebra_(std::move(algebra)), elements_(std::move(elements)), combination_(combination) {
    const auto width = algebra_.profiles().size();
    for (const auto& y : elements_)
        if (y.size() != width) throw InputError("generator element is not a set of profiles of this system");
    if (combination_ == Combination::Xor) {
        auto solver = std::make_shared<Gf2Eliminator>(width);
        for (const auto& y : elements_) solver->insert(y);
        is_basis_ = solver->rank() == elements_.size();
        solver_ = std::move(solver);
    } else {
        is_basis_ = union_basis(elements_, width);
    }
}

Bits GeneratorSet::decompose(const Bits& element) const {
    if (combination_ == Combination::Union) {
        Bits selection(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (elements_[i].is_subset_of(element)) selection.set(i);
        return selection;
    }
    auto solution = solver_->solve_lex_least(element);
    if (!solution) throw InputError("element " + format_members(element) + " is not in the span of the generator");
    return *solution;
}

Bits GeneratorSet::combine(const Bits& selection) const {
    Bits out(algebra_.profiles().size());
    for (auto i : members(selection)) {
        if (combination_ == Combination::Union)
            out |= elements_[i];
        else
            out ^= elements_[i];
    }
    return out;
}

GeneratorSet join_irreducibles(const ClosureAlgebra& algebra) {
    std::vector<Bits> candidates;
    switch (algebra.kind()) {
        case ClosureKind::CSL:
            for (const auto& g : algebra.generators()) {
                if (g.none()) continue;
                Bits below(g.size());
                for (const auto& h : algebra.generators())
                    if (h.is_proper_subset_of(g)) below |= h;
                if (below != g) candidates.push_back(g);
            }
            break;
        case ClosureKind::CDL:
            for (ProfileId p = 0; p < algebra.profiles().size(); ++p) candidates.push_back(algebra.principal(p));
            break;
        default: throw InputError("join-irreducibles are computed for CSL and CDL closures");
    }
    std::vector<std::pair<std::size_t, Bits>> ordered;
    std::unordered_set<Bits> seen;
    for (auto& c : candidates)
        if (seen.insert(c).second) ordered.emplace_back(*algebra.index_of(c), std::move(c));
    std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Bits> elements;
    for (auto& [index, element] : ordered) elements.push_back(std::move(element));
    return GeneratorSet(algebra, std::move(elements), Combination::Union);
}

GeneratorSet atoms_generator(const ProfileSystem& ps, const Limits& limits) {
    std::vector<Bits> atoms;
    for (ProfileId p = 0; p < ps.size(); ++p) atoms.push_back(singleton_bits(ps.size(), p));
    return GeneratorSet(caba_closure(ps, limits), std::move(atoms), Combination::Union);
}

GeneratorSet gf2_basis(const ClosureAlgebra& algebra, Gf2BasisRule rule) {
    if (algebra.kind() != ClosureKind::VEC) throw InputError("a GF(2) basis is computed for VEC closures");
    const auto width = algebra.profiles().size();
    std::vector<Bits> candidates;
    Bits prefix(width);
    for (const auto& g : algebra.generators()) {
        prefix ^= g;
        candidates.push_back(rule == Gf2BasisRule::Greedy ? g : prefix);
    }
    Gf2Eliminator elim(width);
    std::vector<Bits> basis;
    for (const auto& c : candidates)
        if (elim.insert(c)) basis.push_back(c);
    return GeneratorSet(algebra, std::move(basis), Combination::Xor);
}

GeneratorSet caba_vector_basis(const ProfileSystem& ps, const std::optional<std::vector<Bits>>& custom,
                               const Limits& limits) {
    auto algebra = caba_closure(ps, limits);
    if (!custom) {
        std::vector<Bits> singletons;
        for (ProfileId p = 0; p < ps.size(); ++p) singletons.push_back(singleton_bits(ps.size(), p));
        return GeneratorSet(std::move(algebra), std::move(singletons), Combination::Xor);
    }
    for (const auto& y : *custom)
        if (y.size() != ps.size()) throw InputError("generator element is not a set of profiles of this system");
    const auto rank = gf2_rank(*custom, ps.size());
    if (rank != ps.size())
        throw InputError("not a generator of the CABA: the elements span dimension " + std::to_string(rank) +
                         " of " + std::to_string(ps.size()));
    return GeneratorSet(std::move(algebra), *custom, Combination::Xor);
}

GeneratorVerdict validate_generator(const GeneratorSet& generator) {
    GeneratorVerdict verdict;
    const auto& algebra = generator.algebra();

    auto fail = [&](const Bits& element, const std::string& why) {
        verdict.generator_law = false;
        verdict.failing_element = element;
        verdict.message = why + ": " + format_members(element);
        return verdict;
    };

    for (const auto& y : generator.elements())
        if (!algebra.contains(y)) return fail(y, "generator element outside the carrier");

    auto law_holds = [&](const Bits& x) {
        try {
            return generator.combine(generator.decompose(x)) == x;
        } catch (const InputError&) {
            return false;
        }
    };

    if (algebra.materialized()) {
        for (const auto& x : algebra.elements())
            if (!law_holds(x)) return fail(x, "generator law fails at");
    } else {
        // Every carrier element is a union (CABA) or sum (VEC) of these, and both decompositions
        // are compatible with those operations.
        std::vector<Bits> spanning;
        if (algebra.kind() == ClosureKind::CABA) {
            std::unordered_set<Bits> seen;
            for (ProfileId p = 0; p < algebra.profiles().size(); ++p)
                if (seen.insert(algebra.principal(p)).second) spanning.push_back(algebra.principal(p));
        } else {
            spanning = algebra.generators();
        }
        if (generator.combination() == Combination::Union) {
            for (const auto& x : spanning)
                if (!law_holds(x)) return fail(x, "generator law fails at");
        } else {
            const auto width = algebra.profiles().size();
            Gf2Eliminator elim(width);
            for (const auto& y : generator.elements()) elim.insert(y);
            for (const auto& x : spanning)
                if (!elim.in_span(x)) return fail(x, "generator law fails at");
        }
    }
    verdict.generator_law = true;

    if (generator.is_basis()) {
        // The flag comes from an exact criterion; small sets are re-checked formula by formula.
        const auto count = generator.size();
        if (count <= 16) {
            for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
                Bits selection(count, mask);
                if (generator.decompose(generator.combine(selection)) != selection) {
                    verdict.message = "basis law fails at " + format_members(generator.combine(selection));
                    return verdict;
                }
            }
        }
        verdict.basis_law = true;
        verdict.message = "basis";
    } else {
        verdict.message = "generator, not a basis";
    }
    return verdict;
}

}  // namespace succinct
