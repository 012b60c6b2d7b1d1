#include "cli.hpp"

#include "succinct/analysis.hpp"
#include "succinct/equivalence.hpp"
#include "succinct/gf2.hpp"
#include "succinct/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace succinct::cli {

namespace {

struct InputOptions {
    std::string regex;
    std::string alphabet;
    std::string input;
    std::size_t cap = 0;

    void attach(CLI::App* command) {
        command->add_option("--regex", regex, "Regular expression: + or | for union, * for star, ~e and ~0");
        command->add_option("--alphabet", alphabet, "Alphabet symbols in order, e.g. ab (required with --regex)");
        command->add_option("--input", input, "Automaton JSON document");
        command->add_option("--cap", cap, "Cap on subset states, profiles and listed closure elements");
    }

    Limits limits() const { return cap ? Limits::uniform(cap) : Limits{}; }

    std::string description() const { return !regex.empty() ? regex : input; }

    ProfileSystem load() const {
        if (!regex.empty() && !input.empty()) throw InputError("give either --regex or --input, not both");
        if (!regex.empty()) {
            if (alphabet.empty()) throw InputError("--regex needs --alphabet");
            return profiles_of(parse_regex(regex, Alphabet(alphabet)), limits());
        }
        if (input.empty()) throw InputError("an input is required: --regex with --alphabet, or --input FILE");
        return profiles_of(from_json(read_file(input)).automaton, limits());
    }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write " + path);
    file << text;
}

std::string generator_note(const SuccinctAutomaton& automaton) {
    std::string note = "generator: " + std::to_string(automaton.size()) +
                       (automaton.size() == 1 ? " element, " : " elements, ");
    if (automaton.mode == Combination::Xor)
        note += "rank " + std::to_string(gf2_rank(automaton.elements, automaton.elements.empty()
                                                                          ? 0
                                                                          : automaton.elements.front().size())) +
                ", ";
    return note + (automaton.basis ? "basis" : "not a basis") + "\n";
}

std::string render_automaton(const SuccinctAutomaton& automaton, const std::string& format) {
    if (format == "dot") return to_dot(automaton);
    if (format == "json") return to_json(automaton);
    return "construction: " + automaton.construction + "\nmode: " + std::string(to_string(automaton.mode)) + "\n" +
           generator_note(automaton) + to_table(automaton.as_any(), automaton.labels);
}

std::string atoms_output(const ProfileSystem& ps, const std::string& format) {
    const auto& alphabet = ps.alphabet();
    if (format == "json") {
        std::ostringstream out;
        out << "{\n  \"atoms\": [";
        for (ProfileId p = 0; p < ps.size(); ++p) {
            out << (p ? ",\n" : "\n") << "    {\"index\": " << p << ", \"profile\": [";
            const auto states = members(ps.profile(p));
            for (std::size_t i = 0; i < states.size(); ++i) out << (i ? ", " : "") << states[i];
            out << "], \"witness\": \"" << alphabet.decode(ps.witness(p)) << "\", \"in_language\": "
                << (ps.profile(p).test(ps.base().initial()) ? "true" : "false") << "}";
        }
        out << (ps.size() ? "\n  " : "") << "]\n}\n";
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    for (ProfileId p = 0; p < ps.size(); ++p)
        rows.push_back({std::to_string(p), format_members(ps.profile(p)), display_word(alphabet, ps.witness(p)),
                        ps.profile(p).test(ps.base().initial()) ? "yes" : "no"});
    return std::to_string(ps.size()) + " atoms over a minimal DFA with " + std::to_string(ps.base().size()) +
           " states\n" + render_table({"atom", "profile", "witness", "in L"}, rows);
}

ClosureKind parse_kind(const std::string& name) {
    for (auto kind : {ClosureKind::CSL, ClosureKind::CDL, ClosureKind::CABA, ClosureKind::VEC})
        if (to_string(kind) == name) return kind;
    throw InputError("unknown closure kind '" + name + "' (expected CSL, CDL, CABA or VEC)");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Canonical succinct automata for regular languages", "succinct"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    InputOptions build_in, report_in, atoms_in, closure_in, check_in;
    std::string construction, build_format = "table", generator_path, basis = "greedy", out_path;
    std::string report_format = "table", report_generator;
    std::string atoms_format = "table";
    std::string kind = "CSL", closure_format = "table";
    std::string left, right, pair;

    auto* build = app.add_subcommand("build", "Build one canonical automaton");
    build_in.attach(build);
    build->add_option("--construction", construction, "rfsa, atomaton, distromaton, xor or xor-caba")->required();
    build->add_option("--output", build_format, "dot, json or table")->check(CLI::IsMember({"dot", "json", "table"}));
    build->add_option("--generator", generator_path, "JSON file with custom generator elements");
    build->add_option("--basis", basis, "xor basis rule: greedy or paper-fig6")
        ->check(CLI::IsMember({"greedy", "paper-fig6"}));
    build->add_option("--out", out_path, "Write to this file instead of stdout");

    auto* report = app.add_subcommand("report", "Closure sizes and canonical automaton sizes");
    report_in.attach(report);
    report->add_option("--output", report_format, "table or json")->check(CLI::IsMember({"json", "table"}));
    report->add_option("--generator", report_generator, "Also assess this xor-CABA generator");
    report->add_option("--out", out_path, "Write to this file instead of stdout");

    auto* check = app.add_subcommand("check", "Language equivalence of two automata, or closedness of one");
    check_in.attach(check);
    check->add_option("--left", left, "Automaton JSON document");
    check->add_option("--right", right, "Automaton JSON document");
    check->add_option("--pair", pair, "Closedness of --input: CSL/CABA, CSL/CDL or VEC/CABA");
    check->add_option("--out", out_path, "Write to this file instead of stdout");

    auto* atoms = app.add_subcommand("atoms", "List the atoms (reachable profiles)");
    atoms_in.attach(atoms);
    atoms->add_option("--output", atoms_format, "table or json")->check(CLI::IsMember({"json", "table"}));
    atoms->add_option("--out", out_path, "Write to this file instead of stdout");

    auto* closure_cmd = app.add_subcommand("closure", "The DFA on a closure of the residuals");
    closure_in.attach(closure_cmd);
    closure_cmd->add_option("--kind", kind, "CSL, CDL, CABA or VEC");
    closure_cmd->add_option("--output", closure_format, "dot, json or table")
        ->check(CLI::IsMember({"dot", "json", "table"}));
    closure_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (build->parsed()) {
        const auto ps = build_in.load();
        ConstructionOptions options;
        options.basis_rule = basis == "paper-fig6" ? Gf2BasisRule::PrefixXor : Gf2BasisRule::Greedy;
        if (!generator_path.empty()) options.generator = generator_from_json(read_file(generator_path), ps);
        const auto automaton = construct(parse_construction(construction), ps, options, build_in.limits());
        emit(render_automaton(automaton, build_format), out_path, out);
        return 0;
    }

    if (report->parsed()) {
        const auto ps = report_in.load();
        auto result = closure_report(ps, report_in.limits());
        result.language = report_in.description();
        std::string text = report_format == "json" ? report_json(result) : report_table(result);
        if (!report_generator.empty()) {
            const auto elements = generator_from_json(read_file(report_generator), ps);
            const auto automaton = minimal_xor_caba(ps, elements, report_in.limits());
            text += "custom xor-CABA " + generator_note(automaton) + "custom xor-CABA automaton: " +
                    std::to_string(automaton.size()) + " states\n";
        }
        emit(text, out_path, out);
        return 0;
    }

    if (check->parsed()) {
        if (!pair.empty()) {
            if (check_in.input.empty()) throw InputError("--pair needs --input");
            const auto doc = from_json(read_file(check_in.input));
            const auto closure_pair = parse_closure_pair(pair);
            ClosednessVerdict verdict;
            if (const auto* nfa = std::get_if<Nfa>(&doc.automaton))
                verdict = closedness_check(*nfa, closure_pair, check_in.limits());
            else if (const auto* xfa = std::get_if<Xfa>(&doc.automaton))
                verdict = closedness_check(*xfa, closure_pair, check_in.limits());
            else
                verdict = closedness_check(as_nfa(std::get<Dfa>(doc.automaton)), closure_pair, check_in.limits());
            emit(std::string(to_string(closure_pair)) + (verdict.closed ? " closed\n" : " not closed: " +
                                                                                              verdict.description + "\n"),
                 out_path, out);
            return 0;
        }
        if (left.empty() || right.empty()) throw InputError("check needs --left and --right, or --input with --pair");
        const auto lhs = from_json(read_file(left));
        const auto rhs = from_json(read_file(right));
        const auto result = equivalent(lhs.automaton, rhs.automaton, check_in.limits());
        if (result.equivalent) {
            emit("equivalent\n", out_path, out);
        } else {
            emit("not equivalent: \"" + display_word(alphabet_of(lhs.automaton), *result.counterexample) +
                     "\" is accepted by exactly one side\n",
                 out_path, out);
        }
        return 0;
    }

    if (atoms->parsed()) {
        emit(atoms_output(atoms_in.load(), atoms_format), out_path, out);
        return 0;
    }

    if (closure_cmd->parsed()) {
        const auto ps = closure_in.load();
        const auto algebra = closure(parse_kind(kind), ps, closure_in.limits());
        const auto dfa = closure_dfa(algebra);
        std::vector<std::string> labels;
        for (const auto& element : algebra.elements()) labels.push_back(element_label(ps, element));
        std::string text;
        if (closure_format == "dot")
            text = to_dot(dfa, labels, kind);
        else if (closure_format == "json")
            text = to_json(dfa, labels);
        else
            text = kind + " closure, " + std::to_string(algebra.size()) +
                   (algebra.size() == 1 ? " element\n" : " elements\n") + to_table(dfa, labels);
        emit(text, out_path, out);
        return 0;
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace succinct::cli
