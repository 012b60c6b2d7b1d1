#pragma once

#include "succinct/automaton.hpp"
#include "succinct/limits.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace succinct {

using ProfileId = std::size_t;

/// Reachable profiles of a reduced DFA. The profile of a word w is the set of states from which w
/// is accepted; each reachable profile names one atom of the language. Copies share storage.
class ProfileSystem {
public:
    const Dfa& base() const { return data_->base; }
    const Alphabet& alphabet() const { return data_->base.alphabet(); }

    /// |P|
    std::size_t size() const { return data_->profiles.size(); }
    const Bits& profile(ProfileId p) const { return data_->profiles[p]; }
    const std::vector<Bits>& profiles() const { return data_->profiles; }
    std::optional<ProfileId> find(const Bits& profile) const;

    ProfileId eps_profile() const { return 0; }

    /// { q | δ(q, a) ∈ p }
    ProfileId preimage(ProfileId p, Letter a) const { return data_->preimage[p * alphabet().size() + a]; }

    /// A shortest word with this profile.
    const Word& witness(ProfileId p) const { return data_->witness[p]; }

    /// S_q = { p | q ∈ p }: the residual of state q as a set of profiles.
    const Bits& residual(State q) const { return data_->residuals[q]; }
    const std::vector<Bits>& residual_elements() const { return data_->residuals; }

    /// S_{q0}, the element denoting the language itself.
    const Bits& point() const { return data_->residuals[data_->base.initial()]; }

    Bits empty_set() const { return Bits(size()); }
    Bits full_set() const { return Bits(size()).set(); }

private:
    struct Data {
        Dfa base;
        std::vector<Bits> profiles;
        std::vector<ProfileId> preimage;
        std::vector<Word> witness;
        std::vector<Bits> residuals;
    };

    explicit ProfileSystem(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    friend ProfileSystem build_profiles(const Dfa& dfa, const Limits& limits);

    std::shared_ptr<const Data> data_;
};

/// Reverse subset construction from the final states, BFS with letters in alphabet order.
/// The DFA must be reduced (no two states with the same language); a minimal DFA always is.
/// Throws InputError for an unreduced DFA and ResourceError when |P| exceeds the cap.
ProfileSystem build_profiles(const Dfa& dfa, const Limits& limits = {});

/// Folds w right to left through the preimage table starting at the profile of ε.
ProfileId profile_of(const ProfileSystem& ps, const Word& word);

}  // namespace succinct
