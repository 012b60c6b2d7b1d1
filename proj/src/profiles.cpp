#include "succinct/profiles.hpp"

#include "succinct/minimize.hpp"

#include <deque>
#include <string>
#include <unordered_map>

namespace succinct {

std::optional<ProfileId> ProfileSystem::find(const Bits& profile) const {
    for (ProfileId p = 0; p < size(); ++p)
        if (data_->profiles[p] == profile) return p;
    return std::nullopt;
}

ProfileSystem build_profiles(const Dfa& dfa, const Limits& limits) {
    if (!dfa.is_minimal() && !is_reduced(dfa))
        throw InputError("profile construction needs a DFA without language-equivalent states");

    const auto n = dfa.size();
    const auto k = dfa.alphabet().size();

    // Predecessor lists turn preimage computation into a scan over the profile's members.
    std::vector<std::vector<State>> predecessors(n * k);
    for (State q = 0; q < n; ++q)
        for (Letter a = 0; a < k; ++a) predecessors[dfa.next(q, a) * k + a].push_back(q);

    auto data = std::make_shared<ProfileSystem::Data>(ProfileSystem::Data{dfa, {}, {}, {}, {}});
    std::unordered_map<Bits, ProfileId> index;
    std::deque<ProfileId> queue;

    auto intern = [&](Bits profile, const Word& witness) -> ProfileId {
        auto [it, inserted] = index.try_emplace(profile, data->profiles.size());
        if (inserted) {
            if (data->profiles.size() >= limits.max_profiles)
                throw ResourceError("profile system exceeded the cap of " + std::to_string(limits.max_profiles) +
                                    " profiles");
            data->profiles.push_back(std::move(profile));
            data->witness.push_back(witness);
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern(dfa.finals(), {});
    while (!queue.empty()) {
        const ProfileId p = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            Bits pre(n);
            for (auto target : members(data->profiles[p]))
                for (auto q : predecessors[target * k + a]) pre.set(q);
            Word word;
            word.reserve(data->witness[p].size() + 1);
            word.push_back(a);
            word.insert(word.end(), data->witness[p].begin(), data->witness[p].end());
            data->preimage.push_back(intern(std::move(pre), word));
        }
    }

    const auto count = data->profiles.size();
    data->residuals.assign(n, Bits(count));
    for (ProfileId p = 0; p < count; ++p)
        for (auto q : members(data->profiles[p])) data->residuals[q].set(p);

    return ProfileSystem(std::move(data));
}

ProfileId profile_of(const ProfileSystem& ps, const Word& word) {
    ProfileId p = ps.eps_profile();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it >= ps.alphabet().size()) throw InputError("letter index out of range for the alphabet");
        p = ps.preimage(p, *it);
    }
    return p;
}

}  // namespace succinct
