#pragma once

#include "succinct/closure.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace succinct {

/// How a formal combination of generators is evaluated.
enum class Combination { Union, Xor };

std::string_view to_string(Combination combination);

class Gf2Eliminator;

/// Elements Y of a closure algebra with a decomposition d such that combining d(x) gives back x.
/// Union decompositions take every y below x; xor decompositions take the lexicographically least
/// coefficient vector (the unique one for a basis).
class GeneratorSet {
public:
    GeneratorSet(ClosureAlgebra algebra, std::vector<Bits> elements, Combination combination);

    const ClosureAlgebra& algebra() const { return algebra_; }
    Combination combination() const { return combination_; }
    const std::vector<Bits>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const Bits& element(std::size_t i) const { return elements_[i]; }

    /// Decompositions are unique: d(combine(φ)) = φ for every φ ⊆ Y.
    bool is_basis() const { return is_basis_; }

    /// d(x) as a subset of {0..|Y|-1}. Throws InputError when x is not generated by Y (xor only).
    Bits decompose(const Bits& element) const;

    /// Union or GF(2) sum of the selected elements.
    Bits combine(const Bits& selection) const;

private:
    ClosureAlgebra algebra_;
    std::vector<Bits> elements_;
    Combination combination_;
    bool is_basis_ = false;
    std::shared_ptr<const Gf2Eliminator> solver_;
};

/// Non-empty elements that are not the union of the carrier elements strictly below them,
/// listed in carrier order. Defined for CSL and CDL closures.
GeneratorSet join_irreducibles(const ClosureAlgebra& algebra);

/// The singletons {p} of the CABA closure, in profile order. Always a basis.
GeneratorSet atoms_generator(const ProfileSystem& ps, const Limits& limits = {});

enum class Gf2BasisRule {
    Greedy,     ///< independent residuals, in state order
    PrefixXor,  ///< independent prefix sums S_0, S_0⊕S_1, ... in state order
};

/// Basis of the VEC closure drawn from its generators.
GeneratorSet gf2_basis(const ClosureAlgebra& algebra, Gf2BasisRule rule = Gf2BasisRule::Greedy);

/// The CABA closure 2^P viewed as a GF(2) space. Default: singletons. A custom list must span
/// 2^P (InputError "not a generator of the CABA" otherwise); it is a basis iff independent.
GeneratorSet caba_vector_basis(const ProfileSystem& ps, const std::optional<std::vector<Bits>>& custom = std::nullopt,
                               const Limits& limits = {});

struct GeneratorVerdict {
    bool generator_law = false;
    bool basis_law = false;  ///< checked only when the set claims to be a basis
    std::optional<Bits> failing_element;
    std::string message;

    explicit operator bool() const { return generator_law; }
};

/// Checks the generator law on every carrier element (or structurally when the carrier is not
/// listed) and the basis law for sets that claim it.
GeneratorVerdict validate_generator(const GeneratorSet& generator);

}  // namespace succinct
