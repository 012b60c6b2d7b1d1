#include "fixtures.hpp"
#include "oracles.hpp"

#include "succinct/corpus.hpp"
#include "succinct/minimize.hpp"

#include <doctest.h>

using namespace succinct;

TEST_CASE("parse: precedence and rendering") {
    const auto r = parse_regex("(a+b)*a", fixture::ab());
    REQUIRE(r.kind() == RegexKind::Concat);
    CHECK(r.root()->left->kind == RegexKind::Star);
    CHECK(r.root()->left->left->kind == RegexKind::Union);
    CHECK(r.root()->right->kind == RegexKind::Symbol);
    CHECK(r.to_string() == "(a+b)*a");

    CHECK(parse_regex("a|bc*", Alphabet("abc")).to_string() == "a+bc*");
    CHECK(parse_regex(" ( a b ) * ", fixture::ab()).to_string() == "(ab)*");
    CHECK(parse_regex("~e", fixture::ab()).kind() == RegexKind::Epsilon);
    CHECK(parse_regex("~0", fixture::ab()).kind() == RegexKind::Empty);
    CHECK(parse_regex("a**", fixture::ab()).to_string() == "a**");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_WITH_AS(parse_regex("(a", fixture::ab()), doctest::Contains("position 2"), InputError);
    CHECK_THROWS_WITH_AS(parse_regex("ac", fixture::ab()), doctest::Contains("position 1"), InputError);
    CHECK_THROWS_WITH_AS(parse_regex("ac", fixture::ab()), doctest::Contains("'c'"), InputError);
    CHECK_THROWS_AS(parse_regex("", fixture::ab()), InputError);
    CHECK_THROWS_AS(parse_regex("a)", fixture::ab()), InputError);
    CHECK_THROWS_AS(parse_regex("*a", fixture::ab()), InputError);
    CHECK_THROWS_AS(parse_regex("~x", fixture::ab()), InputError);
    CHECK_THROWS_AS(parse_regex("a", Alphabet("a*")), InputError);
}

TEST_CASE("render then parse is the identity on random trees") {
    for (const auto& r : regex_corpus()) {
        const auto again = parse_regex(r.to_string(), r.alphabet());
        CHECK(again.to_string() == r.to_string());
    }
}

TEST_CASE("compilation to minimal DFAs") {
    const auto dfa = regex_to_min_dfa(parse_regex("(a+b)*a", fixture::ab()));
    CHECK(dfa == fixture::minimal_dfa());
    CHECK(dfa.is_minimal());

    const auto empty = regex_to_min_dfa(parse_regex("~0", fixture::ab()));
    CHECK(empty.size() == 1);
    CHECK(empty.finals().none());

    const auto aa = parse_regex("aa", fixture::ab());
    CHECK(regex_to_min_dfa(aa).size() == 4);
    CHECK(oracle::nerode_classes(aa, 3, 3) == 4);
}

TEST_CASE("derivatives") {
    const auto r = parse_regex("(a+b)*a", fixture::ab());
    CHECK(regex_nullable(regex_derive(r, 0)));
    CHECK_FALSE(regex_nullable(regex_derive(r, 1)));
    CHECK_FALSE(regex_nullable(r));
    const auto empty = parse_regex("~0", fixture::ab());
    for (const auto& w : oracle::words_up_to(2, 5)) CHECK_FALSE(regex_member(empty, w));
    for (const auto& w : oracle::words_up_to(2, 8))
        CHECK(regex_member(r, w) == (!w.empty() && w.back() == 0));
}

TEST_CASE("glushkov automaton has one state per symbol occurrence") {
    const auto nfa = glushkov(parse_regex("(a+b)*a", fixture::ab()));
    CHECK(nfa.size() == 4);
    CHECK(nfa.initials() == singleton_bits(4, 0));
}

TEST_CASE("random regexes: derivative oracle agrees with the compiled DFA") {
    const auto corpus = regex_corpus();
    REQUIRE(corpus.size() >= 200);
    for (const auto& r : corpus) {
        CHECK(r.depth() <= 6);
        const auto dfa = regex_to_min_dfa(r);
        REQUIRE(dfa.is_minimal());
        REQUIRE(is_minimal_dfa(dfa));
        for (const auto& w : oracle::words_up_to(r.alphabet().size(), 6))
            REQUIRE_MESSAGE(regex_member(r, w) == dfa.accepts(w), r.to_string());
    }
}

TEST_CASE("minimal DFA size matches the Myhill-Nerode oracle") {
    for (const char* text : {"(a+b)*a", "aa", "a*b*", "(ab)*", "~e", "b(a+b)(a+b)"}) {
        const auto r = parse_regex(text, fixture::ab());
        CHECK_MESSAGE(regex_to_min_dfa(r).size() == oracle::nerode_classes(r, 5, 5), text);
    }
}
