#pragma once

// Real affine roots (lambda, d) = lambda + d delta, the affine Weyl group action,
// terminal sets E_x and the convex order on Delta+ x Z induced by standard
// Lyndon loop words: (alpha, d) < (beta, e) iff l(alpha, -d) < l(beta, -e).
//
// Coweights are integer vectors mu with (alpha_j, mu) = mu_j.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "leclerc.hpp"
#include "order.hpp"
#include "rootsys.hpp"
#include "words.hpp"

namespace loopwords {

struct AffineRealRoot {
    Root finite;
    Exponent level = 0;

    friend auto operator<=>(const AffineRealRoot&, const AffineRealRoot&) = default;
    friend bool operator==(const AffineRealRoot&, const AffineRealRoot&) = default;
};

using Coweight = std::vector<Exponent>;

inline std::string to_string(const AffineRealRoot& r) {
    return "(" + to_string(r.finite) + "," + std::to_string(r.level) + ")";
}

inline bool is_positive(const RootSystem& sys, const AffineRealRoot& r) {
    if (r.level > 0) return sys.is_root(r.finite) || sys.is_root(-r.finite);
    if (r.level < 0) return false;
    return sys.is_root(r.finite);
}

// alpha_0 = (-theta, 1); alpha_i = (alpha_i, 0).
inline AffineRealRoot simple_affine_root(const RootSystem& sys, int j) {
    if (j == 0) return {-sys.theta(), 1};
    return {sys.simple_root(j), 0};
}

inline int simple_affine_index(const RootSystem& sys, const AffineRealRoot& r) {
    for (int j = 0; j <= sys.rank(); ++j)
        if (simple_affine_root(sys, j) == r) return j;
    return -1;
}

inline AffineRealRoot affine_reflect(const RootSystem& sys, int j, const AffineRealRoot& r) {
    if (j < 0 || j > sys.rank()) throw PreconditionError("reflection index out of range");
    AffineRealRoot out = r;
    if (j == 0) {
        const auto k = sys.theta_coroot_pairing(r.finite.coeffs);
        for (std::size_t t = 0; t < out.finite.coeffs.size(); ++t)
            out.finite.coeffs[t] -= static_cast<int>(k) * sys.theta().coeffs[t];
        out.level += k;
        return out;
    }
    const auto k = sys.coroot_pairing(r.finite.coeffs, j);
    out.finite.coeffs[static_cast<std::size_t>(j - 1)] -= static_cast<int>(k);
    return out;
}

inline Exponent coweight_pairing(const Root& alpha, const Coweight& mu) {
    Exponent s = 0;
    for (std::size_t k = 0; k < mu.size(); ++k) s += alpha.coeffs[k] * mu[k];
    return s;
}

// E_mu = {(alpha, d) : alpha in Delta+, 0 <= d < (alpha, mu)} for dominant regular mu.
inline std::vector<AffineRealRoot> translation_terminal_set(const RootSystem& sys, const Coweight& mu) {
    if (static_cast<int>(mu.size()) != sys.rank()) throw PreconditionError("coweight has the wrong rank");
    for (auto m : mu)
        if (m <= 0) throw PreconditionError("coweight is not dominant regular");
    std::vector<AffineRealRoot> out;
    for (const auto& alpha : sys.positive_roots())
        for (Exponent d = 0; d < coweight_pairing(alpha, mu); ++d) out.push_back({alpha, d});
    return out;
}

// Translation by mu acts as (lambda, d) -> (lambda, d - (lambda, mu)); its
// terminal set is the set of positive roots it sends to negative ones. Scans
// levels [0, max_level].
inline std::vector<AffineRealRoot> translation_inversions(const RootSystem& sys, const Coweight& mu,
                                                          Exponent max_level) {
    std::vector<AffineRealRoot> out;
    for (Exponent d = 0; d <= max_level; ++d)
        for (const auto& alpha : sys.positive_roots())
            for (const Root& lambda : {alpha, -alpha}) {
                AffineRealRoot r{lambda, d};
                if (!is_positive(sys, r)) continue;
                AffineRealRoot image{lambda, d - coweight_pairing(lambda, mu)};
                if (!is_positive(sys, image)) out.push_back(r);
            }
    std::sort(out.begin(), out.end());
    return out;
}

// p_j: the unique integer with j^(-p_j) >= i^(-d) > j^(-p_j + 1).
inline Exponent p_constant_by_rule(const OrderPolicy& policy, int i, Exponent d, int j) {
    const LoopLetter target{i, -d};
    Exponent p = 0;
    // j^(-p) grows with p; find the first p with j^(-p) >= target.
    while (policy.less(LoopLetter{j, -p}, target)) ++p;
    while (p > 0 && !policy.less(LoopLetter{j, -(p - 1)}, target)) --p;
    return p;
}

inline Coweight p_constants(const OrderPolicy& policy, int i, Exponent d) {
    if (d < 0) throw PreconditionError("p-constants need d >= 0");
    if (i < 1 || i > policy.rank()) throw PreconditionError("node index out of range");
    Coweight p(static_cast<std::size_t>(policy.rank()));
    for (int j = 1; j <= policy.rank(); ++j) {
        auto& pj = p[static_cast<std::size_t>(j - 1)];
        if (j == i) {
            pj = d;
        } else if (policy.is_weighted()) {
            const Exponent num = d * policy.weight(j), den = policy.weight(i);
            if (num % den != 0) pj = ceil_div(num, den);
            else pj = num / den + (policy.node_less(j, i) ? 1 : 0);
        } else {
            pj = p_constant_by_rule(policy, i, d, j);
        }
    }
    return p;
}

inline Exponent p_of_alpha(const Coweight& p, const Root& alpha) { return coweight_pairing(alpha, p); }

// Orders affine roots (alpha, d), alpha > 0, by l(alpha, -d).
class LoopRootOrder {
public:
    explicit LoopRootOrder(LeclercEngine& engine) : engine_(&engine) {}

    LoopWord word(const AffineRealRoot& r) const { return engine_->fast(engine_->id_of(r.finite), -r.level); }
    bool less(const AffineRealRoot& a, const AffineRealRoot& b) const {
        return word_less(engine_->policy(), word(a), word(b));
    }
    void sort(std::vector<AffineRealRoot>& roots) const {
        std::vector<std::pair<LoopWord, AffineRealRoot>> keyed;
        for (const auto& r : roots) keyed.emplace_back(word(r), r);
        const auto& policy = engine_->policy();
        std::sort(keyed.begin(), keyed.end(),
                  [&](const auto& x, const auto& y) { return word_less(policy, x.first, y.first); });
        for (std::size_t k = 0; k < roots.size(); ++k) roots[k] = keyed[k].second;
    }

private:
    LeclercEngine* engine_;
};

struct TerminalSegment {
    std::vector<AffineRealRoot> word_level;    // sorted by l(alpha, -p)
    std::vector<AffineRealRoot> formula_level; // sorted by (alpha, p)
    Coweight p;
};

// L_{<(i,d)} = {(alpha, p) : p >= 0, l(alpha, -p) < [i^(-d)]}, computed by a
// word scan and by 0 <= p < p(alpha); throws InvariantViolation if they differ.
inline TerminalSegment terminal_segment(LeclercEngine& engine, int i, Exponent d) {
    const auto& sys = engine.system();
    const auto& policy = engine.policy();
    TerminalSegment seg;
    seg.p = p_constants(policy, i, d);
    const LoopWord bound{LoopLetter{i, -d}};
    for (std::size_t id = 0; id < sys.size(); ++id) {
        const Root& alpha = sys.root(id);
        for (Exponent p = 0; word_less(policy, engine.fast(id, -p), bound); ++p) seg.word_level.push_back({alpha, p});
        for (Exponent p = 0; p < p_of_alpha(seg.p, alpha); ++p) seg.formula_level.push_back({alpha, p});
    }
    std::vector<AffineRealRoot> a = seg.word_level, b = seg.formula_level;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw InvariantViolation("terminal segment below [" + std::to_string(i) + "^(" + std::to_string(-d) +
                                 ")]: word scan and p-constants disagree");
    LoopRootOrder(engine).sort(seg.word_level);
    return seg;
}

// Greedy reduced word of a convex-ordered terminal set (smallest root first).
inline std::vector<int> extract_reduced_word(const RootSystem& sys, std::vector<AffineRealRoot> ordered) {
    std::vector<int> word;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        int j = simple_affine_index(sys, ordered[k]);
        if (j < 0)
            throw NotReducedOrder("root #" + std::to_string(k) + " reduces to " + to_string(ordered[k]) +
                                  ", which is not a simple affine root");
        word.push_back(j);
        for (std::size_t t = k + 1; t < ordered.size(); ++t) ordered[t] = affine_reflect(sys, j, ordered[t]);
    }
    return word;
}

// beta_k = s_{j_1} ... s_{j_{k-1}}(alpha_{j_k}).
inline std::vector<AffineRealRoot> reconstruct_roots(const RootSystem& sys, const std::vector<int>& word) {
    std::vector<AffineRealRoot> out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        AffineRealRoot r = simple_affine_root(sys, word[k]);
        for (std::size_t t = k; t-- > 0;) r = affine_reflect(sys, word[t], r);
        out.push_back(r);
    }
    return out;
}

// Positive roots of level <= max_level sent to negative roots by x^{-1}, x = s_{j_1} ... s_{j_m}.
inline std::vector<AffineRealRoot> inversion_set(const RootSystem& sys, const std::vector<int>& word,
                                                 Exponent max_level) {
    std::vector<AffineRealRoot> out;
    for (Exponent d = 0; d <= max_level; ++d)
        for (const auto& alpha : sys.positive_roots())
            for (const Root& lambda : {alpha, -alpha}) {
                AffineRealRoot r{lambda, d};
                if (!is_positive(sys, r)) continue;
                AffineRealRoot image = r;
                for (int j : word) image = affine_reflect(sys, j, image);
                if (!is_positive(sys, image)) out.push_back(r);
            }
    std::sort(out.begin(), out.end());
    return out;
}

// Extracts a reduced word and checks it two ways: the word regenerates the
// ordered list, and its inversion set is exactly the list's underlying set.
inline std::vector<int> extract_and_verify(const RootSystem& sys, const std::vector<AffineRealRoot>& ordered) {
    auto word = extract_reduced_word(sys, ordered);
    if (reconstruct_roots(sys, word) != ordered) throw InvariantViolation("reduced word does not regenerate the order");
    Exponent top = 0;
    for (const auto& r : ordered) top = std::max(top, r.level);
    auto expected = ordered;
    std::sort(expected.begin(), expected.end());
    if (inversion_set(sys, word, top + 2) != expected)
        throw InvariantViolation("inversion set of the reduced word differs from the terminal set");
    return word;
}

struct BetaEntry {
    Exponent k = 0;
    AffineRealRoot root;
};

namespace detail {

// Generalized-order block at depth s: the roots (alpha, d), d >= 0, with
// d < -f_N(alpha) for the s-th negative marker (upper side, ascending), or
// the roots with -f_N(alpha) <= d < 0 for the s-th positive marker (lower side, descending).
inline std::vector<AffineRealRoot> marker_block(LeclercEngine& engine, int s, bool upper) {
    const auto& sys = engine.system();
    const auto m = engine.policy().marker(s, upper ? -1 : +1);
    std::vector<AffineRealRoot> block;
    for (const auto& alpha : sys.positive_roots()) {
        const Exponent h = OrderPolicy::marker_height(m, alpha);
        if (upper)
            for (Exponent d = 0; d < -h; ++d) block.push_back({alpha, d});
        else
            for (Exponent d = -h; d < 0; ++d) block.push_back({alpha, d});
    }
    LoopRootOrder(engine).sort(block);
    if (!upper) std::reverse(block.begin(), block.end());
    return block;
}

inline std::vector<AffineRealRoot> stable_marker_prefix(LeclercEngine& engine, std::size_t count, bool upper) {
    std::vector<AffineRealRoot> prev = marker_block(engine, 1, upper);
    for (int s = 2;; ++s) {
        auto next = marker_block(engine, s, upper);
        if (next.size() < prev.size() || !std::equal(prev.begin(), prev.end(), next.begin()))
            throw InvariantViolation("marker blocks at depth " + std::to_string(s - 1) + " and " + std::to_string(s) +
                                     " are not nested");
        if (prev.size() >= count) {
            prev.resize(count);
            return prev;
        }
        prev = std::move(next);
    }
}

} // namespace detail

// beta_k for k_min <= k <= k_max, listed in increasing order (k descending):
// ... < beta_1 < beta_0 < beta_{-1} < ...
inline std::vector<BetaEntry> beta_sequence(LeclercEngine& engine, Exponent k_min, Exponent k_max) {
    if (k_min > k_max) return {};
    const auto& sys = engine.system();
    std::vector<BetaEntry> out;
    if (engine.policy().is_weighted()) {
        std::vector<AffineRealRoot> block;
        for (const auto& alpha : sys.positive_roots())
            for (Exponent d = 0; d < engine.policy().weighted_height(alpha); ++d) block.push_back({alpha, d});
        LoopRootOrder(engine).sort(block);
        const auto l = static_cast<Exponent>(block.size());
        for (Exponent k = k_max; k >= k_min; --k) {
            const Exponent m = -k, n = floor_div(m, l), r = m - n * l;
            AffineRealRoot root = block[static_cast<std::size_t>(r)];
            root.level += n * engine.policy().weighted_height(root.finite);
            out.push_back({k, root});
        }
        return out;
    }
    std::vector<AffineRealRoot> upper, lower;
    if (k_min <= 0) upper = detail::stable_marker_prefix(engine, static_cast<std::size_t>(-k_min + 1), true);
    if (k_max > 0) lower = detail::stable_marker_prefix(engine, static_cast<std::size_t>(k_max), false);
    for (Exponent k = k_max; k >= k_min; --k)
        out.push_back({k, k > 0 ? lower[static_cast<std::size_t>(k - 1)] : upper[static_cast<std::size_t>(-k)]});
    return out;
}

} // namespace loopwords
