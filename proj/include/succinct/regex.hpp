#pragma once

#include "succinct/automaton.hpp"
#include "succinct/limits.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace succinct {

enum class RegexKind { Empty, Epsilon, Symbol, Union, Concat, Star };

/// Immutable regular-expression tree over a declared alphabet. Subtrees are shared.
class Regex {
public:
    struct Node {
        RegexKind kind;
        Letter letter = 0;                  ///< Symbol only
        std::shared_ptr<const Node> left;   ///< Union/Concat/Star operand
        std::shared_ptr<const Node> right;  ///< Union/Concat second operand
    };
    using NodePtr = std::shared_ptr<const Node>;

    Regex(Alphabet alphabet, NodePtr root) : alphabet_(std::move(alphabet)), root_(std::move(root)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const NodePtr& root() const { return root_; }
    RegexKind kind() const { return root_->kind; }

    /// Renders with `+` for union and the minimum parentheses needed for the standard precedence.
    std::string to_string() const;

    /// Tree shape only: 1 for leaves.
    std::size_t depth() const;

    static NodePtr empty();
    static NodePtr epsilon();
    static NodePtr symbol(Letter letter);
    static NodePtr alternative(NodePtr lhs, NodePtr rhs);
    static NodePtr concat(NodePtr lhs, NodePtr rhs);
    static NodePtr star(NodePtr inner);

private:
    Alphabet alphabet_;
    NodePtr root_;
};

/// Grammar: `|` or `+` for union, juxtaposition for concatenation, postfix `*`, parentheses,
/// `~e` for the empty word and `~0` for the empty language. Whitespace is ignored. Every other
/// character must be an alphabet symbol. Errors carry the 0-based offset of the offending position.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

bool regex_nullable(const Regex& regex);

/// Brzozowski derivative with light simplification (∅ and ε units, idempotent union).
Regex regex_derive(const Regex& regex, Letter letter);

/// Membership by repeated derivation; never builds an automaton.
bool regex_member(const Regex& regex, const Word& word);

/// Position (Glushkov) automaton: state 0 is initial, state i stands for the i-th symbol occurrence.
Nfa glushkov(const Regex& regex);

/// Glushkov automaton, subset construction, then minimization. The result is flagged minimal and
/// keeps a sink state whenever some residual is empty.
Dfa regex_to_min_dfa(const Regex& regex, const Limits& limits = {});

}  // namespace succinct
