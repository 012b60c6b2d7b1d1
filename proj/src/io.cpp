#include "succinct/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace succinct {

using Json = nlohmann::ordered_json;

namespace {

struct Shape {
    std::string type;
    const Alphabet* alphabet;
    std::size_t states;
    Bits initials;
    Bits finals;
    std::vector<Bits> delta;
};

Shape shape_of(const AnyAutomaton& automaton) {
    if (const auto* dfa = std::get_if<Dfa>(&automaton)) {
        const auto n = dfa->size();
        const auto k = dfa->alphabet().size();
        std::vector<Bits> delta(n * k, Bits(n));
        for (State q = 0; q < n; ++q)
            for (Letter a = 0; a < k; ++a) delta[q * k + a].set(dfa->next(q, a));
        return {"dfa", &dfa->alphabet(), n, singleton_bits(n, dfa->initial()), dfa->finals(), std::move(delta)};
    }
    if (const auto* nfa = std::get_if<Nfa>(&automaton))
        return {"nfa", &nfa->alphabet(), nfa->size(), nfa->initials(), nfa->finals(), nfa->transitions()};
    const auto& xfa = std::get<Xfa>(automaton);
    return {"xfa", &xfa.alphabet(), xfa.size(), xfa.initials(), xfa.finals(), xfa.transitions()};
}

Json index_array(const Bits& bits) {
    Json out = Json::array();
    for (auto i : members(bits)) out.push_back(i);
    return out;
}

[[noreturn]] void schema_error(const std::string& pointer, const std::string& message) {
    throw InputError("invalid automaton document at " + (pointer.empty() ? std::string("/") : pointer) + ": " +
                     message);
}

const Json& field(const Json& object, const char* key) {
    auto it = object.find(key);
    if (it == object.end()) schema_error("/" + std::string(key), "missing field");
    return *it;
}

std::size_t state_index(const Json& value, std::size_t states, const std::string& pointer) {
    if (!value.is_number_unsigned()) schema_error(pointer, "expected a state index");
    const auto q = value.get<std::size_t>();
    if (q >= states) schema_error(pointer, "state " + std::to_string(q) + " is out of range");
    return q;
}

Bits index_set(const Json& value, std::size_t states, const std::string& pointer) {
    if (!value.is_array()) schema_error(pointer, "expected an array of state indices");
    Bits out(states);
    for (std::size_t i = 0; i < value.size(); ++i)
        out.set(state_index(value[i], states, pointer + "/" + std::to_string(i)));
    return out;
}

}  // namespace

std::string to_json(const AnyAutomaton& automaton, const std::vector<std::string>& labels) {
    const auto shape = shape_of(automaton);
    const auto k = shape.alphabet->size();
    Json doc;
    doc["type"] = shape.type;
    Json alphabet = Json::array();
    for (char c : shape.alphabet->symbols()) alphabet.push_back(std::string(1, c));
    doc["alphabet"] = std::move(alphabet);
    doc["states"] = shape.states;
    doc["initial"] = index_array(shape.initials);
    doc["final"] = index_array(shape.finals);
    Json transitions = Json::array();
    for (std::size_t q = 0; q < shape.states; ++q)
        for (Letter a = 0; a < k; ++a) {
            const auto& targets = shape.delta[q * k + a];
            if (targets.none()) continue;
            Json t;
            t["from"] = q;
            t["on"] = std::string(1, shape.alphabet->symbol(a));
            t["to"] = index_array(targets);
            transitions.push_back(std::move(t));
        }
    doc["transitions"] = std::move(transitions);
    if (!labels.empty()) doc["labels"] = labels;
    return doc.dump(2) + "\n";
}

std::string to_json(const SuccinctAutomaton& automaton) { return to_json(automaton.as_any(), automaton.labels); }

AutomatonDocument from_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) schema_error("", "expected an object");

    const auto& type_value = field(doc, "type");
    if (!type_value.is_string()) schema_error("/type", "expected a string");
    const auto type = type_value.get<std::string>();
    if (type != "dfa" && type != "nfa" && type != "xfa") schema_error("/type", "expected \"dfa\", \"nfa\" or \"xfa\"");

    const auto& alphabet_value = field(doc, "alphabet");
    if (!alphabet_value.is_array()) schema_error("/alphabet", "expected an array of symbols");
    std::string symbols;
    for (std::size_t i = 0; i < alphabet_value.size(); ++i) {
        const auto pointer = "/alphabet/" + std::to_string(i);
        if (!alphabet_value[i].is_string()) schema_error(pointer, "expected a string");
        const auto symbol = alphabet_value[i].get<std::string>();
        if (symbol.size() != 1) schema_error(pointer, "symbols must be single characters, got \"" + symbol + "\"");
        symbols += symbol;
    }
    Alphabet alphabet = [&] {
        try {
            return Alphabet(symbols);
        } catch (const InputError& e) {
            schema_error("/alphabet", e.what());
        }
    }();
    const auto k = alphabet.size();

    const auto& states_value = field(doc, "states");
    if (!states_value.is_number_unsigned()) schema_error("/states", "expected a non-negative integer");
    const auto n = states_value.get<std::size_t>();
    if (n > (std::size_t{1} << 24)) schema_error("/states", "too many states");

    Bits initials = index_set(field(doc, "initial"), n, "/initial");
    Bits finals = index_set(field(doc, "final"), n, "/final");

    const auto& transitions = field(doc, "transitions");
    if (!transitions.is_array()) schema_error("/transitions", "expected an array");
    std::vector<Bits> delta(n * k, Bits(n));
    std::vector<bool> present(n * k, false);
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto base = "/transitions/" + std::to_string(i);
        const auto& t = transitions[i];
        if (!t.is_object()) schema_error(base, "expected an object");
        auto require = [&](const char* key) -> const Json& {
            auto it = t.find(key);
            if (it == t.end()) schema_error(base + "/" + key, "missing field");
            return *it;
        };
        const auto from = state_index(require("from"), n, base + "/from");
        const auto& on = require("on");
        if (!on.is_string() || on.get<std::string>().size() != 1)
            schema_error(base + "/on", "expected a single-character symbol");
        const char symbol = on.get<std::string>()[0];
        if (!alphabet.contains(symbol))
            schema_error(base + "/on", std::string("symbol '") + symbol + "' is not in the alphabet");
        const auto slot = from * k + alphabet.letter(symbol);
        const auto& to = require("to");
        if (!to.is_array()) schema_error(base + "/to", "expected an array of state indices");
        if (type == "dfa") {
            if (present[slot]) schema_error(base, "duplicate transition for a dfa");
            if (to.size() != 1) schema_error(base + "/to", "a dfa transition has exactly one target");
        }
        for (std::size_t j = 0; j < to.size(); ++j) {
            const auto pointer = base + "/to/" + std::to_string(j);
            const auto q = state_index(to[j], n, pointer);
            if (type == "xfa" && delta[slot].test(q)) schema_error(pointer, "duplicate xfa transition");
            delta[slot].set(q);
        }
        present[slot] = true;
    }

    std::vector<std::string> labels;
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array() || it->size() != n) schema_error("/labels", "expected one string per state");
        for (std::size_t i = 0; i < n; ++i) {
            if (!(*it)[i].is_string()) schema_error("/labels/" + std::to_string(i), "expected a string");
            labels.push_back((*it)[i].get<std::string>());
        }
    }

    if (type == "dfa") {
        if (n == 0) schema_error("/states", "a dfa needs at least one state");
        if (initials.count() != 1) schema_error("/initial", "a dfa has exactly one initial state");
        std::vector<State> table(n * k);
        for (std::size_t slot = 0; slot < n * k; ++slot) {
            if (!present[slot])
                schema_error("/transitions", "dfa is missing the transition from state " + std::to_string(slot / k) +
                                                 " on '" + alphabet.symbol(static_cast<Letter>(slot % k)) + "'");
            table[slot] = static_cast<State>(delta[slot].find_first());
        }
        return {Dfa(alphabet, n, static_cast<State>(initials.find_first()), std::move(finals), std::move(table)),
                std::move(labels)};
    }
    if (type == "nfa") return {Nfa(alphabet, n, std::move(initials), std::move(finals), std::move(delta)), std::move(labels)};
    return {Xfa(alphabet, n, std::move(initials), std::move(finals), std::move(delta)), std::move(labels)};
}

namespace {

std::string dot_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const AnyAutomaton& automaton, const std::vector<std::string>& labels, std::string_view name) {
    const auto shape = shape_of(automaton);
    const auto k = shape.alphabet->size();
    std::ostringstream out;
    out << "digraph \"" << dot_escape(name) << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t q = 0; q < shape.states; ++q) {
        const auto label = labels.empty() ? std::to_string(q) : labels[q];
        out << "  " << q << " [label=\"" << dot_escape(label) << "\"";
        if (shape.finals.test(q)) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (auto q : members(shape.initials)) {
        out << "  init" << q << " [shape=point, style=invis];\n";
        out << "  init" << q << " -> " << q << ";\n";
    }
    for (std::size_t q = 0; q < shape.states; ++q) {
        std::map<std::size_t, std::string> letters;
        for (Letter a = 0; a < k; ++a)
            for (auto r : members(shape.delta[q * k + a])) {
                auto& list = letters[r];
                if (!list.empty()) list += ',';
                list += shape.alphabet->symbol(a);
            }
        for (const auto& [r, list] : letters)
            out << "  " << q << " -> " << r << " [label=\"" << dot_escape(list) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const SuccinctAutomaton& automaton) {
    return to_dot(automaton.as_any(), automaton.labels, automaton.construction);
}

namespace {

/// Code points in UTF-8 text.
std::size_t display_width(std::string_view text) {
    return static_cast<std::size_t>(
        std::count_if(text.begin(), text.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], display_width(row[i]));
    };
    measure(header);
    for (const auto& row : rows) measure(row);
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line.append(widths[i] - display_width(row[i]) + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

std::string to_table(const AnyAutomaton& automaton, const std::vector<std::string>& labels) {
    const auto shape = shape_of(automaton);
    const auto k = shape.alphabet->size();
    std::vector<std::string> header{"state", "label", "initial", "final"};
    for (Letter a = 0; a < k; ++a) header.push_back(std::string(1, shape.alphabet->symbol(a)));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t q = 0; q < shape.states; ++q) {
        std::vector<std::string> row{std::to_string(q), labels.empty() ? std::to_string(q) : labels[q],
                                     shape.initials.test(q) ? "yes" : "no", shape.finals.test(q) ? "yes" : "no"};
        for (Letter a = 0; a < k; ++a) row.push_back(format_members(shape.delta[q * k + a]));
        rows.push_back(std::move(row));
    }
    return shape.type + ", " + std::to_string(shape.states) + " states\n" + render_table(header, rows);
}

std::vector<Bits> generator_from_json(std::string_view text, const ProfileSystem& ps) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    auto fail = [](const std::string& pointer, const std::string& message) -> void {
        throw InputError("invalid generator document at " + pointer + ": " + message);
    };
    if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
        fail("/elements", "expected an array of elements");
    std::vector<Bits> out;
    const auto& elements = doc["elements"];
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto base = "/elements/" + std::to_string(i);
        const auto& e = elements[i];
        Bits element(ps.size());
        if (e.is_array()) {
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (!e[j].is_number_unsigned() || e[j].get<std::size_t>() >= ps.size())
                    fail(base + "/" + std::to_string(j), "expected a profile index below " + std::to_string(ps.size()));
                element.set(e[j].get<std::size_t>());
            }
        } else if (e.is_object() && e.contains("words") && e["words"].is_array()) {
            const auto& words = e["words"];
            for (std::size_t j = 0; j < words.size(); ++j) {
                const auto pointer = base + "/words/" + std::to_string(j);
                if (!words[j].is_string()) fail(pointer, "expected a string");
                try {
                    element.set(profile_of(ps, ps.alphabet().encode(words[j].get<std::string>())));
                } catch (const InputError& err) {
                    fail(pointer, err.what());
                }
            }
        } else {
            fail(base, "expected an array of profile indices or {\"words\": [...]}");
        }
        out.push_back(std::move(element));
    }
    return out;
}

std::string report_table(const ClosureReport& r) {
    auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
    std::vector<std::vector<std::string>> rows{
        {"language", r.language},
        {"minimal DFA states", std::to_string(r.states)},
        {"atoms", std::to_string(r.profiles)},
        {"CSL closure", std::to_string(r.csl)},
        {"CDL closure", std::to_string(r.cdl)},
        {"VEC closure", r.vec ? std::to_string(r.vec) : "2^" + std::to_string(r.vec_dimension)},
        {"VEC dimension", std::to_string(r.vec_dimension)},
        {"CABA closure", r.caba_log2 < 64 ? std::to_string(std::size_t{1} << r.caba_log2)
                                          : "2^" + std::to_string(r.caba_log2)},
        {"canonical RFSA", std::to_string(r.rfsa)},
        {"atomaton", std::to_string(r.atomaton)},
        {"distromaton", std::to_string(r.distromaton)},
        {"minimal xor", std::to_string(r.xor_automaton)},
        {"minimal xor-CABA", std::to_string(r.xor_caba)},
        {"CSL = CDL", yes_no(r.csl_eq_cdl)},
        {"CSL = CABA", yes_no(r.csl_eq_caba)},
        {"VEC = CABA", yes_no(r.vec_eq_caba)},
    };
    return render_table({"quantity", "value"}, rows);
}

std::string report_json(const ClosureReport& r) {
    Json doc;
    doc["language"] = r.language;
    doc["states"] = r.states;
    doc["atoms"] = r.profiles;
    doc["closures"] = {{"csl", r.csl}, {"cdl", r.cdl}, {"vec", r.vec}, {"vec_dimension", r.vec_dimension},
                       {"caba_log2", r.caba_log2}};
    doc["automata"] = {{"rfsa", r.rfsa},
                       {"atomaton", r.atomaton},
                       {"distromaton", r.distromaton},
                       {"xor", r.xor_automaton},
                       {"xor-caba", r.xor_caba}};
    doc["flags"] = {{"csl_eq_cdl", r.csl_eq_cdl}, {"csl_eq_caba", r.csl_eq_caba}, {"vec_eq_caba", r.vec_eq_caba}};
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace succinct
