#include "succinct/automaton.hpp"

namespace succinct {

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, State initial, Bits finals, std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      finals_(std::move(finals)),
      delta_(std::move(delta)) {
    if (state_count_ == 0) throw InputError("a DFA needs at least one state");
    if (initial_ >= state_count_) throw InputError("initial state out of range");
    if (finals_.size() != state_count_) throw InputError("final set must range over the DFA's states");
    if (delta_.size() != state_count_ * alphabet_.size())
        throw InputError("DFA transition table must be total: one target per (state, letter)");
    for (auto target : delta_)
        if (target >= state_count_) throw InputError("DFA transition target out of range");
}

State Dfa::run(State from, const Word& word) const {
    for (auto a : word) from = next(from, a);
    return from;
}

Dfa Dfa::with_initial(State q) const {
    return Dfa(alphabet_, state_count_, q, finals_, delta_);
}

const Alphabet& alphabet_of(const AnyAutomaton& automaton) {
    return std::visit([](const auto& a) -> const Alphabet& { return a.alphabet(); }, automaton);
}

std::size_t state_count(const AnyAutomaton& automaton) {
    return std::visit([](const auto& a) { return a.size(); }, automaton);
}

bool accepts(const AnyAutomaton& automaton, const Word& word) {
    return std::visit([&](const auto& a) { return a.accepts(word); }, automaton);
}

}  // namespace succinct
