#include "succinct/determinize.hpp"

#include <deque>
#include <unordered_map>

namespace succinct {

template <Semantics S>
Determinized determinize_from(const BasicNfa<S>& automaton, const std::vector<Bits>& starts, const Limits& limits) {
    const auto k = automaton.alphabet().size();
    std::vector<Bits> subsets;
    std::unordered_map<Bits, State> index;
    std::vector<State> delta;
    std::deque<State> queue;

    auto intern = [&](Bits set) -> State {
        auto [it, inserted] = index.try_emplace(set, static_cast<State>(subsets.size()));
        if (inserted) {
            if (subsets.size() >= limits.max_subset_states)
                throw ResourceError("subset construction exceeded the cap of " +
                                    std::to_string(limits.max_subset_states) + " states");
            subsets.push_back(std::move(set));
            queue.push_back(it->second);
        }
        return it->second;
    };

    std::vector<State> roots;
    roots.reserve(starts.size());
    for (const auto& start : starts) roots.push_back(intern(start));
    if (roots.empty()) roots.push_back(intern(Bits(automaton.size())));

    // BFS: a state's row is filled when it is dequeued, so rows are appended in state order.
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            Bits target = automaton.step(subsets[q], a);
            delta.push_back(intern(std::move(target)));
        }
    }

    Bits finals(subsets.size());
    for (std::size_t q = 0; q < subsets.size(); ++q)
        if (automaton.accepting(subsets[q])) finals.set(q);

    Dfa dfa(automaton.alphabet(), subsets.size(), roots.front(), std::move(finals), std::move(delta));
    return Determinized{std::move(dfa), std::move(roots), std::move(subsets)};
}

template Determinized determinize_from(const Nfa&, const std::vector<Bits>&, const Limits&);
template Determinized determinize_from(const Xfa&, const std::vector<Bits>&, const Limits&);

Dfa determinize_union(const Nfa& nfa, const Limits& limits) {
    return determinize_from(nfa, {nfa.initials()}, limits).dfa;
}

Dfa determinize_xor(const Xfa& xfa, const Limits& limits) {
    return determinize_from(xfa, {xfa.initials()}, limits).dfa;
}

Dfa determinize(const AnyAutomaton& automaton, const Limits& limits) {
    struct Visitor {
        const Limits& limits;
        Dfa operator()(const Dfa& dfa) const { return dfa; }
        Dfa operator()(const Nfa& nfa) const { return determinize_union(nfa, limits); }
        Dfa operator()(const Xfa& xfa) const { return determinize_xor(xfa, limits); }
    };
    return std::visit(Visitor{limits}, automaton);
}

}  // namespace succinct
