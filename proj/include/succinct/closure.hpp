#pragma once

#include "succinct/profiles.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace succinct {

class Gf2Eliminator;

/// Closure of the residuals under unions (CSL), unions and intersections (CDL),
/// all Boolean operations (CABA) or symmetric difference (VEC).
enum class ClosureKind { CSL, CDL, CABA, VEC };

std::string_view to_string(ClosureKind kind);

/// Language { w | profile(w) ∈ S } as the right derivative structure: { p | preimage_a(p) ∈ S }.
Bits derivative(const ProfileSystem& ps, const Bits& element, Letter a);

/// ε ∈ language(S)
inline bool accepts_empty(const ProfileSystem& ps, const Bits& element) { return element.test(ps.eps_profile()); }

/// True iff w belongs to the language denoted by `element`.
inline bool element_accepts(const ProfileSystem& ps, const Bits& element, const Word& word) {
    return element.test(profile_of(ps, word));
}

/// A family of profile sets closed under the operations of its kind and under derivatives.
/// Elements are listed in generation order. The CABA carrier (all of 2^P) is implicit and is
/// listed only on request for small |P|.
class ClosureAlgebra {
public:
    ClosureKind kind() const { return kind_; }
    const ProfileSystem& profiles() const { return ps_; }

    /// Elements the closure was generated from, in the given order.
    const std::vector<Bits>& generators() const { return generators_; }

    /// S_L
    const Bits& point() const { return ps_.point(); }

    bool materialized() const { return carrier_ != nullptr; }

    /// Carrier elements; throws ResourceError when the carrier is not materialized.
    const std::vector<Bits>& elements() const;

    /// Index of an element in elements(); requires a materialized carrier.
    std::optional<std::size_t> index_of(const Bits& element) const;

    /// Exact log2 of the size for CABA and VEC (atoms and rank); rounded up for listed CSL and CDL carriers.
    std::size_t log2_size() const;

    /// Carrier size; throws ResourceError when it does not fit in 64 bits.
    std::size_t size() const;

    /// GF(2) dimension (VEC) or number of atoms (CABA).
    std::size_t dimension() const;

    /// Membership that does not need the carrier.
    bool contains(const Bits& element) const;

    /// The least carrier element containing profile p (CDL, CABA). CSL and VEC have none in general.
    const Bits& principal(ProfileId p) const;

private:
    friend ClosureAlgebra closure_of(ClosureKind, const ProfileSystem&, std::vector<Bits>, const Limits&, bool);
    friend ClosureAlgebra caba_closure(const ProfileSystem&, const Limits&);

    struct Carrier;

    ClosureKind kind_ = ClosureKind::CSL;
    ProfileSystem ps_;
    std::vector<Bits> generators_;
    std::vector<Bits> principals_;  ///< CDL/CABA: least element containing each profile
    std::size_t rank_ = 0;          ///< VEC
    std::shared_ptr<const Gf2Eliminator> span_;
    std::shared_ptr<const Carrier> carrier_;

    explicit ClosureAlgebra(ProfileSystem ps) : ps_(std::move(ps)) {}
};

/// Closure of an arbitrary family of profile sets. CSL and CDL carriers are always materialized
/// (ResourceError beyond limits.max_carrier). VEC is materialized when its size is within that cap,
/// CABA when it has at most limits.max_caba_profiles atoms; otherwise only the size is known.
/// With `list_carrier` false nothing is listed and only membership queries are available.
ClosureAlgebra closure_of(ClosureKind kind, const ProfileSystem& ps, std::vector<Bits> generators,
                          const Limits& limits = {}, bool list_carrier = true);

/// All unions of residuals, ∅ included.
ClosureAlgebra csl_closure(const ProfileSystem& ps, const Limits& limits = {});

/// Unions and intersections of residuals together with ∅ and the full set.
ClosureAlgebra cdl_closure(const ProfileSystem& ps, const Limits& limits = {});

/// 2^P, listed in mask order when |P| ≤ limits.max_caba_profiles.
ClosureAlgebra caba_closure(const ProfileSystem& ps, const Limits& limits = {});

/// GF(2) span of the residuals.
ClosureAlgebra vec_closure(const ProfileSystem& ps, const Limits& limits = {});

ClosureAlgebra closure(ClosureKind kind, const ProfileSystem& ps, const Limits& limits = {});

/// The pointed DFA on the carrier: initial S_L, finals those containing the profile of ε,
/// transitions by derivative. No two states accept the same language, but elements that are not
/// derivatives of S_L are unreachable, so the result is not flagged minimal.
Dfa closure_dfa(const ClosureAlgebra& algebra);

}  // namespace succinct
