#pragma once

// Standard Lyndon loop words l(alpha, d) via the generalized Leclerc recursion
//
//     l(alpha, d) = max { l(g1, d1) l(g2, d2) : (g1, d1) + (g2, d2) = (alpha, d), l(g1, d1) < l(g2, d2) }.
//
// Naive engine: every split whose exponent d1 is compatible with the a priori
// bound floor(d / f(alpha)) <= d_r / c_{i_r} <= ceil(d / f(alpha)) on the
// letters of l(alpha, d). Weighted orders only.
//
// Fast engine: the letter multiset of l(alpha, d) is known in advance (it is
// reached from the d = 0 multiset by single first-letter steps), and only
// splits whose two multisets partition it are tried. The costandard
// factorization of l(alpha, d) is such a split, so the restricted maximum is
// the unrestricted one. Weighted orders are first reduced to 0 <= d < f(alpha)
// by the periodicity shift.
//
// An engine caches per root and exponent for its own policy. It is not safe
// for concurrent use; give each thread its own engine.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "oracle.hpp"
#include "order.hpp"
#include "rootsys.hpp"
#include "words.hpp"

namespace loopwords {

enum class EngineKind { Naive, Fast, Oracle };

inline Exponent floor_div(Exponent a, Exponent b) {
    Exponent q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline Exponent ceil_div(Exponent a, Exponent b) { return -floor_div(-a, b); }

class LeclercEngine {
public:
    LeclercEngine(const RootSystem& sys, OrderPolicy policy) : sys_(std::make_shared<const RootSystem>(sys)), policy_(std::move(policy)) {
        if (policy_.rank() != sys.rank()) throw ConfigError("order rank does not match the root system");
        finite_.resize(sys.size());
        chain_.resize(sys.size());
        fast_reduced_.resize(sys.size());
        gen_chain_.resize(sys.size());
    }

    const RootSystem& system() const { return *sys_; }
    const OrderPolicy& policy() const { return policy_; }

    std::size_t id_of(const Root& alpha) const {
        auto id = sys_->index_of(alpha.coeffs);
        if (!id) throw PreconditionError(to_string(alpha) + " is not a positive root");
        return *id;
    }

    // Finite-type standard Lyndon word with zero exponents.
    const LoopWord& finite_word(std::size_t id) {
        if (finite_[id]) return *finite_[id];
        LoopWord best;
        if (sys_->is_simple(id)) {
            best = {LoopLetter{simple_node(id), 0}};
        } else {
            for (auto [g1, g2] : sys_->splittings(id)) {
                const LoopWord& w1 = finite_word(g1);
                const LoopWord& w2 = finite_word(g2);
                if (!word_less(policy_, w1, w2)) continue;
                LoopWord cand = concat(w1, w2);
                if (best.empty() || word_less(policy_, best, cand)) best = std::move(cand);
            }
        }
        finite_[id] = std::move(best);
        return *finite_[id];
    }
    LoopWord finite_word(const Root& alpha) { return finite_word(id_of(alpha)); }

    Exponent weighted_height(std::size_t id) const { return policy_.weighted_height(sys_->root(id)); }

    // Letter multiset of l(alpha, d).
    LetterMultiset multiset_chain(std::size_t id, Exponent d) {
        if (policy_.is_weighted()) {
            const Exponent f = weighted_height(id);
            const Exponent q = floor_div(d, f);
            return weighted_chain(id)[static_cast<std::size_t>(d - q * f)].shifted(policy_, q);
        }
        auto& [up, down] = gen_chain_[id];
        if (up.empty()) up.emplace_back(finite_word(id));
        if (d >= 0) {
            while (static_cast<Exponent>(up.size()) <= d) up.push_back(up.back().step_up(policy_));
            return up[static_cast<std::size_t>(d)];
        }
        if (down.empty()) down.push_back(up.front());
        while (static_cast<Exponent>(down.size()) <= -d) down.push_back(down.back().step_down(policy_));
        return down[static_cast<std::size_t>(-d)];
    }
    LetterMultiset multiset_chain(const Root& alpha, Exponent d) { return multiset_chain(id_of(alpha), d); }

    LoopWord fast(std::size_t id, Exponent d) {
        if (policy_.is_weighted()) {
            const Exponent f = weighted_height(id);
            const Exponent q = floor_div(d, f);
            const auto r = static_cast<std::size_t>(d - q * f);
            auto& slot = fast_reduced_[id];
            if (slot.empty()) slot.resize(static_cast<std::size_t>(f));
            if (!slot[r]) slot[r] = fast_core(id, static_cast<Exponent>(r));
            return q == 0 ? *slot[r] : upsilon(policy_, *slot[r], q);
        }
        auto key = std::make_pair(id, d);
        if (auto it = fast_general_.find(key); it != fast_general_.end()) return it->second;
        LoopWord w = fast_core(id, d);
        fast_general_.emplace(key, w);
        return w;
    }

    LoopWord naive(std::size_t id, Exponent d) {
        if (!policy_.is_weighted())
            throw UnsupportedOperation("the naive engine relies on weighted exponent bounds");
        auto key = std::make_pair(id, d);
        if (auto it = naive_.find(key); it != naive_.end()) return it->second;
        LoopWord best;
        if (sys_->is_simple(id)) {
            best = {LoopLetter{simple_node(id), d}};
        } else {
            const Exponent f = weighted_height(id);
            const Exponent lo = floor_div(d, f), hi = ceil_div(d, f);
            for (auto [g1, g2] : sys_->splittings(id)) {
                const Exponent f1 = weighted_height(g1);
                for (Exponent d1 = lo * f1; d1 <= hi * f1; ++d1) {
                    LoopWord w1 = naive(g1, d1);
                    LoopWord w2 = naive(g2, d - d1);
                    if (!word_less(policy_, w1, w2)) continue;
                    LoopWord cand = concat(w1, w2);
                    if (best.empty() || word_less(policy_, best, cand)) best = std::move(cand);
                }
            }
            if (best.empty()) throw InvariantViolation("naive engine found no admissible split");
        }
        naive_.emplace(key, best);
        return best;
    }

    LoopWord compute(std::size_t id, Exponent d, EngineKind engine, int oracle_window = -1) {
        switch (engine) {
        case EngineKind::Naive: return naive(id, d);
        case EngineKind::Fast: return fast(id, d);
        case EngineKind::Oracle: {
            const Root& alpha = sys_->root(id);
            int s = oracle_window >= 0 ? oracle_window : oracle::minimal_window(policy_, alpha, d);
            return oracle::oracle_word(*sys_, policy_, alpha, d, s);
        }
        }
        throw PreconditionError("unknown engine");
    }
    LoopWord compute(const Root& alpha, Exponent d, EngineKind engine = EngineKind::Fast, int oracle_window = -1) {
        return compute(id_of(alpha), d, engine, oracle_window);
    }

    // w is standard iff every factor of its canonical factorization is the
    // standard Lyndon word of its own degree.
    bool is_standard(const LoopWord& w) {
        for (const auto& factor : canonical_factorization(policy_, w)) {
            auto id = sys_->index_of(hdeg(factor, sys_->rank()).coeffs);
            if (!id) return false;
            if (fast(*id, vdeg(factor)) != factor) return false;
        }
        return true;
    }

private:
    int simple_node(std::size_t id) const {
        const auto& c = sys_->root(id).coeffs;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k]) return static_cast<int>(k) + 1;
        return 0;
    }

    const std::vector<LetterMultiset>& weighted_chain(std::size_t id) {
        auto& chain = chain_[id];
        if (chain.empty()) {
            const Exponent f = weighted_height(id);
            chain.emplace_back(finite_word(id));
            while (static_cast<Exponent>(chain.size()) < f) chain.push_back(chain.back().step_up(policy_));
        }
        return chain;
    }

    LoopWord fast_core(std::size_t id, Exponent d) {
        if (sys_->is_simple(id)) return {LoopLetter{simple_node(id), d}};
        const LetterMultiset whole = multiset_chain(id, d);
        const auto& letters = whole.letters();
        std::optional<LoopWord> best;
        for (auto [g1, g2] : sys_->splittings(id)) {
            const Root& r1 = sys_->root(g1);
            // Range of vertical degrees of sub-multisets with horizontal degree r1.
            Exponent lo = 0, hi = 0;
            for (int node = 1; node <= sys_->rank(); ++node) {
                std::vector<Exponent> exps;
                for (const auto& l : letters)
                    if (l.node == node) exps.push_back(l.exp);
                const auto take = static_cast<std::size_t>(r1[node]);
                for (std::size_t k = 0; k < take; ++k) {
                    lo += exps[k];
                    hi += exps[exps.size() - 1 - k];
                }
            }
            for (Exponent d1 = lo; d1 <= hi; ++d1) {
                LetterMultiset m1 = multiset_chain(g1, d1);
                if (!whole.contains(m1)) continue;
                if (whole.minus(m1) != multiset_chain(g2, d - d1)) continue;
                LoopWord w1 = fast(g1, d1);
                LoopWord w2 = fast(g2, d - d1);
                if (!word_less(policy_, w1, w2)) continue;
                LoopWord cand = concat(w1, w2);
                if (!best || word_less(policy_, *best, cand)) best = std::move(cand);
            }
        }
        if (!best) throw InvariantViolation("fast engine found no multiset-compatible split");
        return *best;
    }

    std::shared_ptr<const RootSystem> sys_;
    OrderPolicy policy_;
    std::vector<std::optional<LoopWord>> finite_;
    std::vector<std::vector<LetterMultiset>> chain_;
    std::vector<std::vector<std::optional<LoopWord>>> fast_reduced_;
    std::vector<std::pair<std::vector<LetterMultiset>, std::vector<LetterMultiset>>> gen_chain_;
    std::map<std::pair<std::size_t, Exponent>, LoopWord> fast_general_;
    std::map<std::pair<std::size_t, Exponent>, LoopWord> naive_;
};

struct WordQuery {
    Root alpha;
    Exponent d = 0;
    EngineKind engine = EngineKind::Fast;
};

inline LoopWord compute_word(const RootSystem& sys, const OrderPolicy& policy, const WordQuery& q) {
    LeclercEngine engine(sys, policy);
    return engine.compute(q.alpha, q.d, q.engine);
}

} // namespace loopwords
