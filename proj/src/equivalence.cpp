#include "succinct/equivalence.hpp"

#include "succinct/determinize.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace succinct {

EquivalenceResult equivalent(const AnyAutomaton& lhs, const AnyAutomaton& rhs, const Limits& limits) {
    if (!(alphabet_of(lhs) == alphabet_of(rhs)))
        throw InputError("alphabet mismatch: \"" + alphabet_of(lhs).symbols() + "\" vs \"" +
                         alphabet_of(rhs).symbols() + "\"");
    const Dfa left = determinize(lhs, limits);
    const Dfa right = determinize(rhs, limits);
    const auto k = left.alphabet().size();
    const std::size_t width = right.size();

    // BFS over the product; parents reconstruct the shortest separating word.
    struct Visit {
        std::size_t parent;
        Letter letter;
    };
    std::unordered_map<std::size_t, Visit> seen;
    std::deque<std::size_t> queue;
    const std::size_t start = std::size_t{left.initial()} * width + right.initial();
    seen.emplace(start, Visit{start, 0});
    queue.push_back(start);
    while (!queue.empty()) {
        const auto node = queue.front();
        queue.pop_front();
        const auto p = static_cast<State>(node / width);
        const auto q = static_cast<State>(node % width);
        if (left.is_final(p) != right.is_final(q)) {
            Word word;
            for (auto cur = node; cur != start; cur = seen.at(cur).parent) word.push_back(seen.at(cur).letter);
            std::reverse(word.begin(), word.end());
            return EquivalenceResult{false, std::move(word)};
        }
        for (Letter a = 0; a < k; ++a) {
            const auto succ = std::size_t{left.next(p, a)} * width + right.next(q, a);
            if (seen.emplace(succ, Visit{node, a}).second) queue.push_back(succ);
        }
    }
    return EquivalenceResult{true, std::nullopt};
}

bool isomorphic(const Dfa& lhs, const Dfa& rhs) {
    if (!(lhs.alphabet() == rhs.alphabet())) return false;
    const auto k = lhs.alphabet().size();
    const auto none = static_cast<State>(-1);
    std::vector<State> forward(lhs.size(), none), backward(rhs.size(), none);
    std::deque<State> queue;
    auto pair_up = [&](State p, State q) {
        if (forward[p] == none && backward[q] == none) {
            forward[p] = q;
            backward[q] = p;
            queue.push_back(p);
            return true;
        }
        return forward[p] == q && backward[q] == p;
    };
    if (!pair_up(lhs.initial(), rhs.initial())) return false;
    std::size_t visited = 0;
    while (!queue.empty()) {
        const auto p = queue.front();
        queue.pop_front();
        ++visited;
        const auto q = forward[p];
        if (lhs.is_final(p) != rhs.is_final(q)) return false;
        for (Letter a = 0; a < k; ++a)
            if (!pair_up(lhs.next(p, a), rhs.next(q, a))) return false;
    }
    // Both reachable parts must be exhausted by the bijection.
    const auto reached_rhs = static_cast<std::size_t>(std::count_if(backward.begin(), backward.end(), [&](State s) { return s != none; }));
    return reached_rhs == visited;
}

}  // namespace succinct
