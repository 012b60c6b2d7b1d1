#include "succinct/analysis.hpp"

#include "succinct/determinize.hpp"
#include "succinct/minimize.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

namespace succinct {

ClosureReport closure_report(const ProfileSystem& ps, const Limits& limits) {
    ClosureReport report;
    report.states = ps.base().size();
    report.profiles = ps.size();
    report.caba_log2 = ps.size();

    const auto csl = csl_closure(ps, limits);
    const auto cdl = cdl_closure(ps, limits);
    const auto vec = vec_closure(ps, limits);
    report.csl = csl.size();
    report.cdl = cdl.size();
    report.vec_dimension = vec.dimension();
    report.vec = report.vec_dimension < 64 ? std::size_t{1} << report.vec_dimension : 0;

    report.csl_eq_cdl = report.csl == report.cdl;
    report.csl_eq_caba = ps.size() < 64 && report.csl == (std::size_t{1} << ps.size());
    report.vec_eq_caba = report.vec_dimension == ps.size();

    report.rfsa = build_succinct(join_irreducibles(csl), "rfsa").size();
    report.atomaton = atomaton(ps, limits).size();
    report.distromaton = build_succinct(join_irreducibles(cdl), "distromaton").size();
    report.xor_automaton = build_succinct(gf2_basis(vec), "xor").size();
    report.xor_caba = minimal_xor_caba(ps, std::nullopt, limits).size();
    return report;
}

Dfa StateLanguages::language_dfa(std::size_t state) const { return minimize(system.base().with_initial(roots[state])); }

namespace {

template <Semantics S>
StateLanguages languages_of(const BasicNfa<S>& automaton, const Limits& limits) {
    std::vector<Bits> starts;
    for (std::size_t q = 0; q < automaton.size(); ++q) starts.push_back(singleton_bits(automaton.size(), q));
    const auto determinized = determinize_from(automaton, starts, limits);
    auto rooted = minimize_rooted(determinized.dfa, determinized.roots);
    auto system = build_profiles(rooted.dfa, limits);
    std::vector<Bits> languages;
    std::vector<State> roots;
    for (std::size_t q = 0; q < automaton.size(); ++q) {
        roots.push_back(rooted.roots[q]);
        languages.push_back(system.residual(rooted.roots[q]));
    }
    return StateLanguages{std::move(system), std::move(languages), std::move(roots)};
}

}  // namespace

StateLanguages state_languages(const Nfa& nfa, const Limits& limits) { return languages_of(nfa, limits); }
StateLanguages state_languages(const Xfa& xfa, const Limits& limits) { return languages_of(xfa, limits); }

StateLanguages state_languages(const SuccinctAutomaton& automaton, const Limits& limits) {
    return std::visit([&](const auto& a) { return languages_of(a, limits); }, automaton.automaton);
}

std::string_view to_string(ClosurePair pair) {
    switch (pair) {
        case ClosurePair::CslCaba: return "CSL/CABA";
        case ClosurePair::CslCdl: return "CSL/CDL";
        case ClosurePair::VecCaba: return "VEC/CABA";
    }
    return "?";
}

ClosurePair parse_closure_pair(std::string_view name) {
    for (auto pair : {ClosurePair::CslCaba, ClosurePair::CslCdl, ClosurePair::VecCaba})
        if (to_string(pair) == name) return pair;
    throw InputError("unknown closure pair '" + std::string(name) + "' (expected CSL/CABA, CSL/CDL or VEC/CABA)");
}

ClosednessVerdict closedness_check(const StateLanguages& languages, ClosurePair pair, const Limits& limits) {
    const auto& ps = languages.system;
    const auto& gens = languages.languages;
    const bool vector_pair = pair == ClosurePair::VecCaba;
    const auto smaller = closure_of(vector_pair ? ClosureKind::VEC : ClosureKind::CSL, ps, gens, limits, false);
    const auto larger = closure_of(pair == ClosurePair::CslCdl ? ClosureKind::CDL : ClosureKind::CABA, ps, gens,
                                   limits, false);

    // The larger closure consists of unions of its principal elements; the smaller one is closed
    // under union (CSL) or sum (VEC) of disjoint parts, so it suffices to test those.
    ClosednessVerdict verdict;
    verdict.pair = pair;
    std::unordered_set<Bits> tested;
    for (ProfileId p = 0; p < ps.size(); ++p) {
        const auto& element = larger.principal(p);
        if (!tested.insert(element).second || smaller.contains(element)) continue;
        verdict.witness = element;
        verdict.witness_word = ps.witness(p);
        verdict.description = std::string(to_string(larger.kind())) + " element " + format_members(element) +
                              " containing \"" + display_word(ps.alphabet(), ps.witness(p)) +
                              "\" is not in the " + std::string(to_string(smaller.kind())) + " closure";
        return verdict;
    }
    verdict.closed = true;
    verdict.description = "closed";
    return verdict;
}

namespace {

struct Candidate {
    std::size_t states;
    std::vector<std::uint32_t> successors;  ///< [y * k + a] as a bit mask
    std::uint32_t initials;
    std::uint32_t finals;
};

bool parity(std::uint32_t mask) { return (std::popcount(mask) & 1) != 0; }

/// Walks all pairs (profile(w), states accepting w) and compares acceptance with the target.
/// On success fills the per-state profile sets when every state language is a union of atoms.
bool equivalent_to(const ProfileSystem& ps, const Candidate& c, Combination mode,
                   std::vector<std::optional<Bits>>* state_sets) {
    const auto k = ps.alphabet().size();
    const std::size_t masks = std::size_t{1} << c.states;
    const auto q0 = ps.base().initial();
    std::vector<char> seen(ps.size() * masks, 0);
    std::deque<std::pair<ProfileId, std::uint32_t>> queue;
    auto visit = [&](ProfileId p, std::uint32_t r) {
        auto& flag = seen[p * masks + r];
        if (!flag) {
            flag = 1;
            queue.emplace_back(p, r);
        }
    };
    visit(ps.eps_profile(), c.finals);
    while (!queue.empty()) {
        const auto [p, r] = queue.front();
        queue.pop_front();
        const bool accepted = mode == Combination::Union ? (c.initials & r) != 0 : parity(c.initials & r);
        if (accepted != ps.profile(p).test(q0)) return false;
        for (Letter a = 0; a < k; ++a) {
            std::uint32_t pre = 0;
            for (std::size_t y = 0; y < c.states; ++y) {
                const auto hit = c.successors[y * k + a] & r;
                if (mode == Combination::Union ? hit != 0 : parity(hit)) pre |= 1U << y;
            }
            visit(ps.preimage(p, a), pre);
        }
    }
    if (!state_sets) return true;

    state_sets->assign(c.states, std::nullopt);
    for (std::size_t y = 0; y < c.states; ++y) {
        Bits in(ps.size()), out(ps.size());
        for (ProfileId p = 0; p < ps.size(); ++p)
            for (std::size_t r = 0; r < masks; ++r)
                if (seen[p * masks + r]) ((r >> y) & 1U ? in : out).set(p);
        if (!in.intersects(out)) (*state_sets)[y] = in;
    }
    return true;
}

template <Semantics S>
BasicNfa<S> to_automaton(const Alphabet& alphabet, const Candidate& c) {
    const auto k = alphabet.size();
    std::vector<Bits> delta;
    for (std::size_t i = 0; i < c.states * k; ++i) delta.emplace_back(c.states, c.successors[i]);
    return BasicNfa<S>(alphabet, c.states, Bits(c.states, c.initials), Bits(c.states, c.finals), std::move(delta));
}

bool satisfies(const ProfileSystem& ps, const Candidate& c, Combination mode, BruteConstraint constraint,
               const std::vector<std::optional<Bits>>& state_sets) {
    switch (constraint) {
        case BruteConstraint::None: return true;
        case BruteConstraint::StatesInResidualCsl:
        case BruteConstraint::StatesInResidualVec: {
            const auto kind =
                constraint == BruteConstraint::StatesInResidualCsl ? ClosureKind::CSL : ClosureKind::VEC;
            const auto algebra = closure_of(kind, ps, ps.residual_elements(), {}, false);
            for (const auto& set : state_sets)
                if (!set || !algebra.contains(*set)) return false;
            return true;
        }
        default: {
            const auto pair = constraint == BruteConstraint::ClosedCslCaba  ? ClosurePair::CslCaba
                              : constraint == BruteConstraint::ClosedCslCdl ? ClosurePair::CslCdl
                                                                            : ClosurePair::VecCaba;
            if (mode == Combination::Union)
                return closedness_check(to_automaton<Semantics::Union>(ps.alphabet(), c), pair).closed;
            return closedness_check(to_automaton<Semantics::Xor>(ps.alphabet(), c), pair).closed;
        }
    }
}

}  // namespace

BruteForceResult brute_force_min_nfa(const Dfa& language, std::size_t max_states, Combination mode,
                                     BruteConstraint constraint) {
    const auto k = language.alphabet().size();
    if (k > 2 || max_states > 3)
        throw InputError("brute-force search is limited to alphabets of at most 2 letters and at most 3 states");
    const auto ps = build_profiles(minimize(language));

    BruteForceResult result;
    std::vector<std::optional<Bits>> state_sets;
    for (std::size_t n = 0; n <= max_states; ++n) {
        const std::size_t transition_bits = n * n * k;
        const std::size_t total_bits = transition_bits + 2 * n;
        const std::uint64_t count = std::uint64_t{1} << total_bits;
        const std::uint32_t state_mask = (1U << n) - 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            Candidate c{n, std::vector<std::uint32_t>(n * k), 0, 0};
            for (std::size_t i = 0; i < n * k; ++i) c.successors[i] = static_cast<std::uint32_t>(code >> (i * n)) & state_mask;
            c.initials = static_cast<std::uint32_t>(code >> transition_bits) & state_mask;
            c.finals = static_cast<std::uint32_t>(code >> (transition_bits + n)) & state_mask;
            ++result.candidates;
            const bool needs_sets = constraint == BruteConstraint::StatesInResidualCsl ||
                                    constraint == BruteConstraint::StatesInResidualVec;
            if (!equivalent_to(ps, c, mode, needs_sets ? &state_sets : nullptr)) continue;
            if (!satisfies(ps, c, mode, constraint, state_sets)) continue;
            result.minimum = n;
            return result;
        }
    }
    return result;
}

SizeComparison size_comparison_check(const std::vector<ClosureReport>& reports) {
    SizeComparison out;
    auto expect = [&](const ClosureReport& r, const char* flag, std::size_t lhs, const char* lhs_name, std::size_t rhs,
                      const char* rhs_name) {
        if (lhs == rhs) return;
        out.violations.push_back(r.language + ": " + flag + " holds but " + lhs_name + "=" + std::to_string(lhs) +
                                 " differs from " + rhs_name + "=" + std::to_string(rhs));
    };
    for (const auto& r : reports) {
        ++out.checked;
        if (r.csl_eq_caba) {
            ++out.flag_counts[0];
            expect(r, "CSL=CABA", r.rfsa, "rfsa", r.atomaton, "atomaton");
        }
        if (r.csl_eq_cdl) {
            ++out.flag_counts[1];
            expect(r, "CSL=CDL", r.rfsa, "rfsa", r.distromaton, "distromaton");
        }
        if (r.vec_eq_caba) {
            ++out.flag_counts[2];
            expect(r, "VEC=CABA", r.xor_automaton, "xor", r.xor_caba, "xor-caba");
        }
    }
    return out;
}

}  // namespace succinct
