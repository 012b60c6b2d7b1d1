#include "succinct/minimize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

namespace succinct {

namespace {

/// Refinable partition over 0..n-1 with per-block marking (Valmari–Lehtinen style layout).
class Partition {
public:
    explicit Partition(std::size_t n) : elems_(n), loc_(n), block_(n, 0) {
        std::iota(elems_.begin(), elems_.end(), 0);
        std::iota(loc_.begin(), loc_.end(), 0);
        if (n > 0) {
            begin_.push_back(0);
            end_.push_back(n);
            mid_.push_back(0);
        }
    }

    std::size_t block_count() const { return begin_.size(); }
    std::size_t block_of(std::size_t e) const { return block_[e]; }
    std::size_t block_size(std::size_t b) const { return end_[b] - begin_[b]; }
    auto block_elements(std::size_t b) const {
        return std::vector<std::size_t>(elems_.begin() + static_cast<std::ptrdiff_t>(begin_[b]),
                                        elems_.begin() + static_cast<std::ptrdiff_t>(end_[b]));
    }

    void mark(std::size_t e) {
        const auto b = block_[e];
        const auto i = loc_[e];
        if (i < mid_[b]) return;
        if (mid_[b] == begin_[b]) touched_.push_back(b);
        std::swap(elems_[i], elems_[mid_[b]]);
        loc_[elems_[i]] = i;
        loc_[elems_[mid_[b]]] = mid_[b];
        ++mid_[b];
    }

    /// Splits every touched block into marked/unmarked parts; calls `on_new(new_block)` for the
    /// smaller part of each proper split.
    template <class Fn>
    void split(Fn&& on_new) {
        for (auto b : touched_) {
            if (mid_[b] == end_[b]) {
                mid_[b] = begin_[b];
                continue;
            }
            const std::size_t nb = begin_.size();
            if (mid_[b] - begin_[b] <= end_[b] - mid_[b]) {
                begin_.push_back(begin_[b]);
                end_.push_back(mid_[b]);
                begin_[b] = mid_[b];
            } else {
                begin_.push_back(mid_[b]);
                end_.push_back(end_[b]);
                end_[b] = mid_[b];
            }
            mid_.push_back(begin_[nb]);
            mid_[b] = begin_[b];
            for (auto i = begin_[nb]; i < end_[nb]; ++i) block_[elems_[i]] = nb;
            on_new(nb);
        }
        touched_.clear();
    }

private:
    std::vector<std::size_t> elems_, loc_, block_;
    std::vector<std::size_t> begin_, end_, mid_;
    std::vector<std::size_t> touched_;
};

std::vector<State> reachable_bfs(const Dfa& dfa, const std::vector<State>& roots, std::vector<State>& order_of) {
    const auto k = dfa.alphabet().size();
    std::vector<State> order;
    order_of.assign(dfa.size(), static_cast<State>(-1));
    std::deque<State> queue;
    auto visit = [&](State q) {
        if (order_of[q] != static_cast<State>(-1)) return;
        order_of[q] = static_cast<State>(order.size());
        order.push_back(q);
        queue.push_back(q);
    };
    for (auto r : roots) visit(r);
    while (!queue.empty()) {
        auto q = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) visit(dfa.next(q, a));
    }
    return order;
}

}  // namespace

std::vector<std::size_t> language_classes(const Dfa& dfa) {
    const auto n = dfa.size();
    const auto k = dfa.alphabet().size();

    // predecessors[a][q] = states p with next(p, a) = q, as CSR arrays per letter.
    std::vector<std::vector<std::size_t>> pred_start(k, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<State>> pred(k, std::vector<State>(n));
    for (Letter a = 0; a < k; ++a) {
        auto& start = pred_start[a];
        for (State p = 0; p < n; ++p) ++start[dfa.next(p, a) + 1];
        std::partial_sum(start.begin(), start.end(), start.begin());
        auto fill = start;
        for (State p = 0; p < n; ++p) pred[a][fill[dfa.next(p, a)]++] = p;
    }

    Partition partition(n);
    std::deque<std::pair<std::size_t, Letter>> work;
    auto enqueue_all_letters = [&](std::size_t block) {
        for (Letter a = 0; a < k; ++a) work.emplace_back(block, a);
    };

    for (State q = 0; q < n; ++q)
        if (dfa.is_final(q)) partition.mark(q);
    partition.split(enqueue_all_letters);
    if (partition.block_count() == 1 && k > 0) enqueue_all_letters(0);

    while (!work.empty()) {
        auto [splitter, a] = work.front();
        work.pop_front();
        for (auto q : partition.block_elements(splitter))
            for (auto i = pred_start[a][q]; i < pred_start[a][q + 1]; ++i) partition.mark(pred[a][i]);
        partition.split(enqueue_all_letters);
    }

    std::vector<std::size_t> classes(n);
    for (State q = 0; q < n; ++q) classes[q] = partition.block_of(q);
    return classes;
}

bool is_reduced(const Dfa& dfa) {
    auto classes = language_classes(dfa);
    std::sort(classes.begin(), classes.end());
    return std::adjacent_find(classes.begin(), classes.end()) == classes.end();
}

bool is_minimal_dfa(const Dfa& dfa) {
    std::vector<State> order_of;
    return reachable_bfs(dfa, {dfa.initial()}, order_of).size() == dfa.size() && is_reduced(dfa);
}

Dfa mark_minimal(Dfa dfa) {
    if (!is_minimal_dfa(dfa)) throw InputError("DFA is not minimal");
    dfa.minimal_ = true;
    return dfa;
}

RootedDfa minimize_rooted(const Dfa& dfa, const std::vector<State>& roots) {
    const auto k = dfa.alphabet().size();
    std::vector<State> order_of;
    const auto reachable = reachable_bfs(dfa, roots, order_of);

    // Restrict to reachable states before computing classes.
    const auto m = reachable.size();
    Bits finals(m);
    std::vector<State> delta(m * k);
    for (State i = 0; i < m; ++i) {
        if (dfa.is_final(reachable[i])) finals.set(i);
        for (Letter a = 0; a < k; ++a) delta[i * k + a] = order_of[dfa.next(reachable[i], a)];
    }
    const Dfa pruned(dfa.alphabet(), m, 0, std::move(finals), std::move(delta));
    const auto classes = language_classes(pruned);

    // Canonical numbering of the quotient: BFS over classes from the roots in order.
    std::vector<State> representative_of_class(m, static_cast<State>(-1));
    for (State i = 0; i < m; ++i)
        if (representative_of_class[classes[i]] == static_cast<State>(-1)) representative_of_class[classes[i]] = i;

    std::vector<State> number_of_class(m, static_cast<State>(-1));
    std::vector<std::size_t> class_order;
    std::deque<std::size_t> queue;
    auto visit = [&](std::size_t cls) {
        if (number_of_class[cls] != static_cast<State>(-1)) return number_of_class[cls];
        number_of_class[cls] = static_cast<State>(class_order.size());
        class_order.push_back(cls);
        queue.push_back(cls);
        return number_of_class[cls];
    };
    std::vector<State> new_roots;
    for (auto r : roots) new_roots.push_back(visit(classes[order_of[r]]));
    std::vector<State> quotient_delta;
    while (!queue.empty()) {
        auto cls = queue.front();
        queue.pop_front();
        const auto rep = representative_of_class[cls];
        for (Letter a = 0; a < k; ++a) quotient_delta.push_back(visit(classes[pruned.next(rep, a)]));
    }
    Bits quotient_finals(class_order.size());
    for (std::size_t i = 0; i < class_order.size(); ++i)
        if (pruned.is_final(representative_of_class[class_order[i]])) quotient_finals.set(i);

    const State initial = new_roots.empty() ? 0 : new_roots.front();
    return RootedDfa{Dfa(dfa.alphabet(), class_order.size(), initial, std::move(quotient_finals), std::move(quotient_delta)),
                     std::move(new_roots)};
}

Dfa minimize(const Dfa& dfa) {
    return mark_minimal(minimize_rooted(dfa, {dfa.initial()}).dfa);
}

}  // namespace succinct
