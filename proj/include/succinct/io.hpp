#pragma once

#include "succinct/analysis.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace succinct {

/// An automaton read from or written to JSON:
/// {"type": "dfa"|"nfa"|"xfa", "alphabet": ["a", ...], "states": n, "initial": [...],
///  "final": [...], "transitions": [{"from": q, "on": "a", "to": [...]}, ...], "labels": [...]}
struct AutomatonDocument {
    AnyAutomaton automaton;
    std::vector<std::string> labels;  ///< empty or one per state
};

/// Canonical serialization: transitions ordered by state then letter, targets ascending, empty
/// target lists omitted. Ends with a newline.
std::string to_json(const AnyAutomaton& automaton, const std::vector<std::string>& labels = {});
std::string to_json(const SuccinctAutomaton& automaton);

/// Throws InputError with a JSON pointer to the offending value.
AutomatonDocument from_json(std::string_view text);

/// Graphviz digraph: finals as double circles, an arrow from an invisible node into each initial
/// state, one edge per (from, to) pair labelled with its letters.
std::string to_dot(const AnyAutomaton& automaton, const std::vector<std::string>& labels = {},
                   std::string_view name = "automaton");
std::string to_dot(const SuccinctAutomaton& automaton);

/// Fixed-column listing of states: label, initial, final, successors per letter.
std::string to_table(const AnyAutomaton& automaton, const std::vector<std::string>& labels = {});

/// Columns padded to the widest cell, two spaces apart, no trailing blanks.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// {"elements": [e, ...]} where e is an array of profile indices or {"words": ["", "ab", ...]},
/// the latter standing for the profiles of those words.
std::vector<Bits> generator_from_json(std::string_view text, const ProfileSystem& ps);

std::string report_table(const ClosureReport& report);
std::string report_json(const ClosureReport& report);

/// Whole file as a string; InputError when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace succinct
