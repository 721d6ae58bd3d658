#pragma once

// Definition-level computation of standard Lyndon loop words.
//
// Every graded piece (alpha, d) of the positive loop algebra is one
// dimensional. Hence the standard Lyndon word of degree (alpha, d) is the
// lexicographically largest Lyndon word of that degree whose standard
// bracketing does not vanish: any smaller Lyndon word has its bracketing in
// the span of the larger one, and a vanishing bracketing is the zero
// combination.
//
// Nonvanishing is decided by root sums alone. If e_l1 and e_l2 are nonzero
// multiples of root vectors of degrees (g1, k1) and (g2, k2), their bracket
// is a nonzero multiple of e_{g1+g2} t^{k1+k2} exactly when g1 + g2 is a root
// (N_{g1,g2} != 0 in a simple Lie algebra). Costandard bracketings never form
// sums, so no structure constants are needed.
//
// Nothing here depends on the Leclerc engines.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "order.hpp"
#include "rootsys.hpp"
#include "words.hpp"

namespace loopwords::oracle {

// Costandard bracket tree of a Lyndon word; every node records its bidegree.
struct BracketTree {
    Root hdeg;
    Exponent vdeg = 0;
    std::optional<LoopLetter> leaf;
    std::unique_ptr<BracketTree> left, right;
};

inline std::unique_ptr<BracketTree> bracket_tree(const RootSystem& sys, const OrderPolicy& policy,
                                                 std::span<const LoopLetter> l) {
    auto node = std::make_unique<BracketTree>();
    node->hdeg = hdeg(l, sys.rank());
    node->vdeg = vdeg(l);
    if (l.size() == 1) {
        node->leaf = l.front();
        return node;
    }
    auto [l1, l2] = costandard_factorization(policy, l);
    node->left = bracket_tree(sys, policy, l1);
    node->right = bracket_tree(sys, policy, l2);
    return node;
}

inline bool tree_nonzero(const RootSystem& sys, const BracketTree& t) {
    if (t.leaf) return true;
    return sys.is_root(t.hdeg) && tree_nonzero(sys, *t.left) && tree_nonzero(sys, *t.right);
}

inline bool bracket_nonzero(const RootSystem& sys, const OrderPolicy& policy, std::span<const LoopLetter> l) {
    if (!is_lyndon(policy, l)) throw PreconditionError("standard bracketing is defined for Lyndon words only");
    return tree_nonzero(sys, *bracket_tree(sys, policy, l));
}

namespace detail {

struct Search {
    const RootSystem& sys;
    const OrderPolicy& policy;
    std::vector<std::pair<Exponent, Exponent>> window; // per node, possibly narrowed
    std::vector<LoopLetter> alphabet;                  // all window letters, descending
    std::vector<int> remaining;                        // letters still to place, per node
    LoopWord prefix;

    bool feasible(Exponent sum_left) const {
        Exponent lo = 0, hi = 0;
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            if (remaining[k] == 0) continue;
            if (window[k].first > window[k].second) return false;
            lo += remaining[k] * window[k].first;
            hi += remaining[k] * window[k].second;
        }
        return lo <= sum_left && sum_left <= hi;
    }

    template <class Visit>
    bool descend(Exponent sum_left, std::size_t length, Visit& visit) {
        if (prefix.size() == length) return visit(prefix);
        for (const auto& letter : alphabet) {
            auto k = static_cast<std::size_t>(letter.node - 1);
            if (remaining[k] == 0 || letter.exp < window[k].first || letter.exp > window[k].second) continue;
            --remaining[k];
            prefix.push_back(letter);
            bool stop = feasible(sum_left - letter.exp) && descend(sum_left - letter.exp, length, visit);
            prefix.pop_back();
            ++remaining[k];
            if (stop) return true;
        }
        return false;
    }
};

inline Search make_search(const RootSystem& sys, const OrderPolicy& policy, const Root& alpha, int s) {
    Search st{sys, policy, policy.alphabet_window(s), {}, {}, {}};
    for (int node = 1; node <= sys.rank(); ++node) {
        const auto [lo, hi] = st.window[static_cast<std::size_t>(node - 1)];
        for (Exponent e = lo; e <= hi; ++e) st.alphabet.push_back({node, e});
        st.remaining.push_back(alpha[node]);
    }
    std::sort(st.alphabet.begin(), st.alphabet.end(),
              [&](const LoopLetter& a, const LoopLetter& b) { return policy.less(b, a); });
    return st;
}

// Runs visit on candidate words in descending lexicographic order. A Lyndon
// word starts with its smallest letter, so once the first letter is fixed the
// remaining letters of each node are capped at the largest exponent not below it.
template <class Visit>
void search_descending(const RootSystem& sys, const OrderPolicy& policy, const Root& alpha, Exponent d, int s,
                       Visit visit) {
    auto st = make_search(sys, policy, alpha, s);
    const auto length = static_cast<std::size_t>(alpha.height());
    const auto full = st.window;
    for (const auto& first : std::vector<LoopLetter>(st.alphabet)) {
        auto k0 = static_cast<std::size_t>(first.node - 1);
        if (st.remaining[k0] == 0) continue;
        st.window = full;
        for (int node = 1; node <= sys.rank(); ++node) {
            auto& [lo, hi] = st.window[static_cast<std::size_t>(node - 1)];
            while (hi >= lo && policy.less(LoopLetter{node, hi}, first)) --hi;
        }
        --st.remaining[k0];
        st.prefix.assign(1, first);
        bool stop = st.feasible(d - first.exp) && st.descend(d - first.exp, length, visit);
        ++st.remaining[k0];
        if (stop) return;
    }
}

} // namespace detail

// All Lyndon words of degree (alpha, d) over I^(s), in descending order.
inline std::vector<LoopWord> enumerate_lyndon(const RootSystem& sys, const OrderPolicy& policy, const Root& alpha,
                                              Exponent d, int s) {
    std::vector<LoopWord> out;
    detail::search_descending(sys, policy, alpha, d, s, [&](const LoopWord& w) {
        if (is_lyndon(policy, w)) out.push_back(w);
        return false;
    });
    return out;
}

// Largest Lyndon word of degree (alpha, d) over I^(s) with nonvanishing bracketing.
inline LoopWord oracle_word(const RootSystem& sys, const OrderPolicy& policy, const Root& alpha, Exponent d, int s) {
    if (!sys.is_root(alpha)) throw PreconditionError("degree " + to_string(alpha) + " is not a positive root");
    std::optional<LoopWord> found;
    detail::search_descending(sys, policy, alpha, d, s, [&](const LoopWord& w) {
        if (is_lyndon(policy, w) && bracket_nonzero(sys, policy, w)) {
            found = w;
            return true;
        }
        return false;
    });
    if (!found)
        throw WindowExhausted("no nonvanishing Lyndon word of degree " + to_string(alpha) + ", " + std::to_string(d) +
                              " over the window s=" + std::to_string(s));
    return *found;
}

// Smallest s whose window contains degree (alpha, d).
inline int minimal_window(const OrderPolicy& policy, const Root& alpha, Exponent d) {
    for (int s = 0;; ++s) {
        auto lo = OrderPolicy::marker_height(policy.marker(s, -1), alpha);
        auto hi = OrderPolicy::marker_height(policy.marker(s, +1), alpha);
        if (lo <= d && d <= hi) return s;
    }
}

} // namespace loopwords::oracle
