#include "succinct/regex.hpp"

#include "succinct/determinize.hpp"
#include "succinct/minimize.hpp"

#include <cctype>
#include <string>

namespace succinct {

using NodePtr = Regex::NodePtr;

NodePtr Regex::empty() {
    static const NodePtr node = std::make_shared<const Node>(Node{RegexKind::Empty, 0, nullptr, nullptr});
    return node;
}

NodePtr Regex::epsilon() {
    static const NodePtr node = std::make_shared<const Node>(Node{RegexKind::Epsilon, 0, nullptr, nullptr});
    return node;
}

NodePtr Regex::symbol(Letter letter) { return std::make_shared<const Node>(Node{RegexKind::Symbol, letter, nullptr, nullptr}); }

NodePtr Regex::alternative(NodePtr lhs, NodePtr rhs) {
    return std::make_shared<const Node>(Node{RegexKind::Union, 0, std::move(lhs), std::move(rhs)});
}

NodePtr Regex::concat(NodePtr lhs, NodePtr rhs) {
    return std::make_shared<const Node>(Node{RegexKind::Concat, 0, std::move(lhs), std::move(rhs)});
}

NodePtr Regex::star(NodePtr inner) {
    return std::make_shared<const Node>(Node{RegexKind::Star, 0, std::move(inner), nullptr});
}

namespace {

int precedence(RegexKind kind) {
    switch (kind) {
        case RegexKind::Union: return 0;
        case RegexKind::Concat: return 1;
        default: return 2;
    }
}

void render(const Alphabet& alphabet, const NodePtr& node, int context, std::string& out) {
    const bool parens = precedence(node->kind) < context;
    if (parens) out += '(';
    switch (node->kind) {
        case RegexKind::Empty: out += "~0"; break;
        case RegexKind::Epsilon: out += "~e"; break;
        case RegexKind::Symbol: out += alphabet.symbol(node->letter); break;
        case RegexKind::Union:
            render(alphabet, node->left, 0, out);
            out += '+';
            render(alphabet, node->right, 0, out);
            break;
        case RegexKind::Concat:
            render(alphabet, node->left, 1, out);
            render(alphabet, node->right, 2, out);
            break;
        case RegexKind::Star:
            render(alphabet, node->left, 2, out);
            out += '*';
            break;
    }
    if (parens) out += ')';
}

std::size_t depth_of(const NodePtr& node) {
    switch (node->kind) {
        case RegexKind::Union:
        case RegexKind::Concat: return 1 + std::max(depth_of(node->left), depth_of(node->right));
        case RegexKind::Star: return 1 + depth_of(node->left);
        default: return 1;
    }
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    NodePtr parse() {
        auto node = parse_union();
        skip_space();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return node;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw InputError("regex syntax error at position " + std::to_string(pos_) + ": " + message);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_atom_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == '(' || c == '~' || !is_meta(c);
    }

    static bool is_meta(char c) {
        return c == '(' || c == ')' || c == '|' || c == '+' || c == '*' || c == '~';
    }

    NodePtr parse_union() {
        auto node = parse_concat();
        while (true) {
            skip_space();
            if (pos_ < text_.size() && (text_[pos_] == '|' || text_[pos_] == '+')) {
                ++pos_;
                node = Regex::alternative(node, parse_concat());
            } else {
                return node;
            }
        }
    }

    NodePtr parse_concat() {
        auto node = parse_postfix();
        while (at_atom_start()) node = Regex::concat(node, parse_postfix());
        return node;
    }

    NodePtr parse_postfix() {
        auto node = parse_atom();
        while (true) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                node = Regex::star(node);
            } else {
                return node;
            }
        }
    }

    NodePtr parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_union();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '~') {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == 'e') {
                ++pos_;
                return Regex::epsilon();
            }
            if (pos_ < text_.size() && text_[pos_] == '0') {
                ++pos_;
                return Regex::empty();
            }
            fail("expected 'e' or '0' after '~'");
        }
        if (is_meta(c)) fail(std::string("unexpected '") + c + "'");
        if (!alphabet_.contains(c))
            fail(std::string("symbol '") + c + "' is not in the alphabet \"" + alphabet_.symbols() + "\"");
        ++pos_;
        return Regex::symbol(alphabet_.letter(c));
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

bool nullable(const NodePtr& node) {
    switch (node->kind) {
        case RegexKind::Empty:
        case RegexKind::Symbol: return false;
        case RegexKind::Epsilon:
        case RegexKind::Star: return true;
        case RegexKind::Union: return nullable(node->left) || nullable(node->right);
        case RegexKind::Concat: return nullable(node->left) && nullable(node->right);
    }
    return false;
}

bool same_tree(const NodePtr& lhs, const NodePtr& rhs) {
    if (lhs == rhs) return true;
    if (lhs->kind != rhs->kind) return false;
    switch (lhs->kind) {
        case RegexKind::Empty:
        case RegexKind::Epsilon: return true;
        case RegexKind::Symbol: return lhs->letter == rhs->letter;
        case RegexKind::Star: return same_tree(lhs->left, rhs->left);
        default: return same_tree(lhs->left, rhs->left) && same_tree(lhs->right, rhs->right);
    }
}

NodePtr simplified_union(NodePtr lhs, NodePtr rhs) {
    if (lhs->kind == RegexKind::Empty) return rhs;
    if (rhs->kind == RegexKind::Empty) return lhs;
    if (same_tree(lhs, rhs)) return lhs;
    return Regex::alternative(std::move(lhs), std::move(rhs));
}

NodePtr simplified_concat(NodePtr lhs, NodePtr rhs) {
    if (lhs->kind == RegexKind::Empty || rhs->kind == RegexKind::Empty) return Regex::empty();
    if (lhs->kind == RegexKind::Epsilon) return rhs;
    if (rhs->kind == RegexKind::Epsilon) return lhs;
    return Regex::concat(std::move(lhs), std::move(rhs));
}

NodePtr derive(const NodePtr& node, Letter a) {
    switch (node->kind) {
        case RegexKind::Empty:
        case RegexKind::Epsilon: return Regex::empty();
        case RegexKind::Symbol: return node->letter == a ? Regex::epsilon() : Regex::empty();
        case RegexKind::Union: return simplified_union(derive(node->left, a), derive(node->right, a));
        case RegexKind::Concat: {
            auto head = simplified_concat(derive(node->left, a), node->right);
            return nullable(node->left) ? simplified_union(head, derive(node->right, a)) : head;
        }
        case RegexKind::Star: return simplified_concat(derive(node->left, a), node);
    }
    return Regex::empty();
}

/// Glushkov sets for one subtree; bit 0 is reserved for the initial state.
struct PositionSets {
    bool nullable;
    Bits first;
    Bits last;
};

class PositionBuilder {
public:
    explicit PositionBuilder(std::size_t positions) : follow_(positions + 1, Bits(positions + 1)) {
        letters_.push_back(0);
    }

    PositionSets visit(const NodePtr& node) {
        const auto width = follow_.size();
        switch (node->kind) {
            case RegexKind::Empty: return {false, Bits(width), Bits(width)};
            case RegexKind::Epsilon: return {true, Bits(width), Bits(width)};
            case RegexKind::Symbol: {
                const auto pos = letters_.size();
                letters_.push_back(node->letter);
                return {false, singleton_bits(width, pos), singleton_bits(width, pos)};
            }
            case RegexKind::Union: {
                auto l = visit(node->left);
                auto r = visit(node->right);
                return {l.nullable || r.nullable, l.first | r.first, l.last | r.last};
            }
            case RegexKind::Concat: {
                auto l = visit(node->left);
                auto r = visit(node->right);
                for (auto p : members(l.last)) follow_[p] |= r.first;
                return {l.nullable && r.nullable, l.nullable ? (l.first | r.first) : l.first,
                        r.nullable ? (l.last | r.last) : r.last};
            }
            case RegexKind::Star: {
                auto inner = visit(node->left);
                for (auto p : members(inner.last)) follow_[p] |= inner.first;
                return {true, inner.first, inner.last};
            }
        }
        return {false, Bits(width), Bits(width)};
    }

    const std::vector<Bits>& follow() const { return follow_; }
    const std::vector<Letter>& letters() const { return letters_; }

private:
    std::vector<Bits> follow_;
    std::vector<Letter> letters_;
};

std::size_t count_symbols(const NodePtr& node) {
    switch (node->kind) {
        case RegexKind::Symbol: return 1;
        case RegexKind::Union:
        case RegexKind::Concat: return count_symbols(node->left) + count_symbols(node->right);
        case RegexKind::Star: return count_symbols(node->left);
        default: return 0;
    }
}

}  // namespace

std::string Regex::to_string() const {
    std::string out;
    render(alphabet_, root_, 0, out);
    return out;
}

std::size_t Regex::depth() const { return depth_of(root_); }

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    for (char c : alphabet.symbols())
        if (c == '(' || c == ')' || c == '|' || c == '+' || c == '*' || c == '~' ||
            std::isspace(static_cast<unsigned char>(c)))
            throw InputError(std::string("alphabet symbol '") + c + "' collides with regex syntax");
    Parser parser(text, alphabet);
    return Regex(alphabet, parser.parse());
}

bool regex_nullable(const Regex& regex) { return nullable(regex.root()); }

Regex regex_derive(const Regex& regex, Letter letter) { return Regex(regex.alphabet(), derive(regex.root(), letter)); }

bool regex_member(const Regex& regex, const Word& word) {
    NodePtr node = regex.root();
    for (auto a : word) {
        node = derive(node, a);
        if (node->kind == RegexKind::Empty) return false;
    }
    return nullable(node);
}

Nfa glushkov(const Regex& regex) {
    const auto positions = count_symbols(regex.root());
    PositionBuilder builder(positions);
    const auto sets = builder.visit(regex.root());
    const auto n = positions + 1;
    const auto k = regex.alphabet().size();
    const auto& letters = builder.letters();

    std::vector<Bits> delta(n * k, Bits(n));
    auto connect = [&](std::size_t from, const Bits& targets) {
        for (auto q : members(targets)) delta[from * k + letters[q]].set(q);
    };
    connect(0, sets.first);
    for (std::size_t p = 1; p < n; ++p) connect(p, builder.follow()[p]);

    Bits finals = sets.last;
    if (sets.nullable) finals.set(0);
    return Nfa(regex.alphabet(), n, singleton_bits(n, 0), std::move(finals), std::move(delta));
}

Dfa regex_to_min_dfa(const Regex& regex, const Limits& limits) {
    return minimize(determinize_union(glushkov(regex), limits));
}

}  // namespace succinct
