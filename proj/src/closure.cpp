#include "succinct/closure.hpp"

#include "succinct/gf2.hpp"

#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace succinct {

struct ClosureAlgebra::Carrier {
    std::vector<Bits> elements;
    std::unordered_map<Bits, std::size_t> index;
};

std::string_view to_string(ClosureKind kind) {
    switch (kind) {
        case ClosureKind::CSL: return "CSL";
        case ClosureKind::CDL: return "CDL";
        case ClosureKind::CABA: return "CABA";
        case ClosureKind::VEC: return "VEC";
    }
    return "?";
}

Bits derivative(const ProfileSystem& ps, const Bits& element, Letter a) {
    if (a >= ps.alphabet().size()) throw InputError("letter index out of range for the alphabet");
    Bits out(ps.size());
    for (ProfileId p = 0; p < ps.size(); ++p)
        if (element.test(ps.preimage(p, a))) out.set(p);
    return out;
}

namespace {

std::vector<Bits> distinct(const std::vector<Bits>& items) {
    std::vector<Bits> out;
    std::unordered_set<Bits> seen;
    for (const auto& item : items)
        if (seen.insert(item).second) out.push_back(item);
    return out;
}

/// Worklist closure of `seeds` under x ↦ x op g for every g in `steps`.
template <class Op>
std::vector<Bits> saturate(const std::vector<Bits>& seeds, const std::vector<Bits>& steps, std::size_t cap,
                           ClosureKind kind, Op op) {
    std::vector<Bits> elements;
    std::unordered_set<Bits> seen;
    std::deque<std::size_t> queue;
    auto add = [&](Bits element) {
        if (!seen.insert(element).second) return;
        if (elements.size() >= cap)
            throw ResourceError(std::string(to_string(kind)) + " closure exceeded the cap of " + std::to_string(cap) +
                                " elements");
        queue.push_back(elements.size());
        elements.push_back(std::move(element));
    };
    for (const auto& seed : seeds) add(seed);
    while (!queue.empty()) {
        const auto i = queue.front();
        queue.pop_front();
        for (const auto& step : steps) {
            Bits next = op(elements[i], step);
            add(std::move(next));
        }
    }
    return elements;
}

/// For each profile p, the class of profiles that lie in exactly the same generators.
std::vector<Bits> membership_classes(std::size_t width, const std::vector<Bits>& generators) {
    std::vector<Bits> classes(width, Bits(width));
    std::unordered_map<Bits, Bits> by_signature;
    for (std::size_t p = 0; p < width; ++p) {
        Bits signature(generators.size());
        for (std::size_t g = 0; g < generators.size(); ++g)
            if (generators[g].test(p)) signature.set(g);
        auto& members_of = by_signature.try_emplace(signature, Bits(width)).first->second;
        members_of.set(p);
    }
    for (const auto& [signature, cls] : by_signature)
        for (auto p : members(cls)) classes[p] = cls;
    return classes;
}

std::vector<Bits> meet_principals(std::size_t width, const std::vector<Bits>& generators) {
    std::vector<Bits> principals(width, Bits(width).set());
    for (const auto& g : generators)
        for (auto p : members(g)) principals[p] &= g;
    return principals;
}

}  // namespace

const std::vector<Bits>& ClosureAlgebra::elements() const {
    if (!carrier_)
        throw ResourceError(std::string(to_string(kind_)) + " carrier with 2^" + std::to_string(log2_size()) +
                            " elements is not materialized");
    return carrier_->elements;
}

std::optional<std::size_t> ClosureAlgebra::index_of(const Bits& element) const {
    if (!carrier_) elements();
    auto it = carrier_->index.find(element);
    if (it == carrier_->index.end()) return std::nullopt;
    return it->second;
}

std::size_t ClosureAlgebra::log2_size() const {
    switch (kind_) {
        case ClosureKind::CABA: return principals_.empty() ? 0 : distinct(principals_).size();
        case ClosureKind::VEC: return rank_;
        default: {
            if (!carrier_) elements();
            std::size_t bits = 0;
            while ((std::size_t{1} << bits) < carrier_->elements.size()) ++bits;
            return bits;
        }
    }
}

std::size_t ClosureAlgebra::size() const {
    if (carrier_) return carrier_->elements.size();
    const auto bits = log2_size();
    if (bits >= 64) throw ResourceError("closure size 2^" + std::to_string(bits) + " does not fit in 64 bits");
    return std::size_t{1} << bits;
}

std::size_t ClosureAlgebra::dimension() const {
    if (kind_ == ClosureKind::VEC || kind_ == ClosureKind::CABA) return log2_size();
    throw InputError("dimension is defined for VEC and CABA closures only");
}

const Bits& ClosureAlgebra::principal(ProfileId p) const {
    if (principals_.empty()) throw InputError(std::string(to_string(kind_)) + " closure has no principal elements");
    return principals_[p];
}

bool ClosureAlgebra::contains(const Bits& element) const {
    if (element.size() != ps_.size()) return false;
    switch (kind_) {
        case ClosureKind::CSL: {
            Bits joined(ps_.size());
            for (const auto& g : generators_)
                if (g.is_subset_of(element)) joined |= g;
            return joined == element;
        }
        case ClosureKind::CDL:
        case ClosureKind::CABA:
            for (auto p : members(element))
                if (!principals_[p].is_subset_of(element)) return false;
            return true;
        case ClosureKind::VEC: return span_->in_span(element);
    }
    return false;
}

ClosureAlgebra closure_of(ClosureKind kind, const ProfileSystem& ps, std::vector<Bits> generators,
                          const Limits& limits, bool list_carrier) {
    const auto width = ps.size();
    for (const auto& g : generators)
        if (g.size() != width) throw InputError("closure generator is not a set of profiles of this system");

    ClosureAlgebra algebra(ps);
    algebra.kind_ = kind;
    algebra.generators_ = std::move(generators);
    const auto& gens = algebra.generators_;
    const Bits bottom(width);
    const Bits top = Bits(width).set();

    std::vector<Bits> elements;
    bool materialize = true;
    switch (kind) {
        case ClosureKind::CSL: {
            if (!list_carrier) break;
            auto seeds = gens;
            seeds.push_back(bottom);
            elements = saturate(seeds, distinct(gens), limits.max_carrier, kind,
                                [](const Bits& x, const Bits& g) { return x | g; });
            break;
        }
        case ClosureKind::CDL: {
            algebra.principals_ = meet_principals(width, gens);
            if (!list_carrier) break;
            auto seeds = gens;
            seeds.push_back(bottom);
            seeds.push_back(top);
            elements = saturate(seeds, distinct(algebra.principals_), limits.max_carrier, kind,
                                [](const Bits& x, const Bits& g) { return x | g; });
            break;
        }
        case ClosureKind::CABA: {
            algebra.principals_ = membership_classes(width, gens);
            const auto atoms = distinct(algebra.principals_);
            materialize = list_carrier && atoms.size() <= limits.max_caba_profiles;
            if (materialize) {
                // Mask order over the atoms listed by least profile.
                const std::size_t count = std::size_t{1} << atoms.size();
                elements.reserve(count);
                for (std::size_t mask = 0; mask < count; ++mask) {
                    Bits element(width);
                    for (std::size_t i = 0; i < atoms.size(); ++i)
                        if ((mask >> i) & 1U) element |= atoms[i];
                    elements.push_back(std::move(element));
                }
            }
            break;
        }
        case ClosureKind::VEC: {
            auto span = std::make_shared<Gf2Eliminator>(width);
            for (const auto& g : gens) span->insert(g);
            algebra.rank_ = span->rank();
            algebra.span_ = std::move(span);
            materialize = list_carrier && algebra.rank_ < 64 && (std::size_t{1} << algebra.rank_) <= limits.max_carrier;
            if (materialize) {
                auto seeds = gens;
                seeds.push_back(bottom);
                elements = saturate(seeds, distinct(gens), limits.max_carrier, kind,
                                    [](const Bits& x, const Bits& g) { return x ^ g; });
            }
            break;
        }
    }

    if (materialize && list_carrier) {
        auto carrier = std::make_shared<ClosureAlgebra::Carrier>();
        carrier->elements = std::move(elements);
        for (std::size_t i = 0; i < carrier->elements.size(); ++i) carrier->index.emplace(carrier->elements[i], i);
        algebra.carrier_ = std::move(carrier);
    }
    return algebra;
}

ClosureAlgebra csl_closure(const ProfileSystem& ps, const Limits& limits) {
    return closure_of(ClosureKind::CSL, ps, ps.residual_elements(), limits);
}

ClosureAlgebra cdl_closure(const ProfileSystem& ps, const Limits& limits) {
    return closure_of(ClosureKind::CDL, ps, ps.residual_elements(), limits);
}

ClosureAlgebra caba_closure(const ProfileSystem& ps, const Limits& limits) {
    return closure_of(ClosureKind::CABA, ps, ps.residual_elements(), limits);
}

ClosureAlgebra vec_closure(const ProfileSystem& ps, const Limits& limits) {
    return closure_of(ClosureKind::VEC, ps, ps.residual_elements(), limits);
}

ClosureAlgebra closure(ClosureKind kind, const ProfileSystem& ps, const Limits& limits) {
    return closure_of(kind, ps, ps.residual_elements(), limits);
}

Dfa closure_dfa(const ClosureAlgebra& algebra) {
    const auto& ps = algebra.profiles();
    const auto& elements = algebra.elements();
    const auto k = ps.alphabet().size();
    std::vector<State> delta;
    delta.reserve(elements.size() * k);
    Bits finals(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (accepts_empty(ps, elements[i])) finals.set(i);
        for (Letter a = 0; a < k; ++a) {
            auto target = algebra.index_of(derivative(ps, elements[i], a));
            if (!target) throw InputError("closure is not closed under derivatives");
            delta.push_back(static_cast<State>(*target));
        }
    }
    auto initial = algebra.index_of(algebra.point());
    if (!initial) throw InputError("closure does not contain the language itself");
    return Dfa(ps.alphabet(), elements.size(), static_cast<State>(*initial), std::move(finals), std::move(delta));
}

}  // namespace succinct
