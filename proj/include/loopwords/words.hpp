#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "order.hpp"
#include "rootsys.hpp"

namespace loopwords {

using LoopWord = std::vector<LoopLetter>;

// Lexicographic order; a proper prefix is smaller.
inline std::strong_ordering compare_words(const OrderPolicy& policy, std::span<const LoopLetter> u,
                                          std::span<const LoopLetter> v) {
    const auto n = std::min(u.size(), v.size());
    for (std::size_t k = 0; k < n; ++k)
        if (auto c = policy.compare(u[k], v[k]); c != 0) return c;
    return u.size() <=> v.size();
}

inline bool word_less(const OrderPolicy& policy, std::span<const LoopLetter> u, std::span<const LoopLetter> v) {
    return compare_words(policy, u, v) < 0;
}

inline LoopWord concat(const LoopWord& a, const LoopWord& b) {
    LoopWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// Smaller than every proper suffix.
inline bool is_lyndon(const OrderPolicy& policy, std::span<const LoopLetter> w) {
    if (w.empty()) return false;
    for (std::size_t a = 1; a < w.size(); ++a)
        if (compare_words(policy, w, w.subspan(a)) >= 0) return false;
    return true;
}

// Smaller than every nontrivial cyclic rotation.
inline bool is_lyndon_by_rotation(const OrderPolicy& policy, std::span<const LoopLetter> w) {
    if (w.empty()) return false;
    LoopWord rot(w.begin(), w.end());
    for (std::size_t a = 1; a < w.size(); ++a) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (compare_words(policy, w, rot) >= 0) return false;
    }
    return true;
}

// l = l1 l2 with l2 the longest proper Lyndon suffix.
inline std::pair<LoopWord, LoopWord> costandard_factorization(const OrderPolicy& policy, std::span<const LoopLetter> l) {
    if (l.size() < 2) throw PreconditionError("costandard factorization needs a Lyndon word of length >= 2");
    for (std::size_t a = 1; a < l.size(); ++a) {
        auto suffix = l.subspan(a);
        if (is_lyndon(policy, suffix))
            return {LoopWord(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(a)), LoopWord(suffix.begin(), suffix.end())};
    }
    // unreachable: the last letter is always Lyndon
    throw InvariantViolation("no Lyndon suffix found");
}

// Duval's algorithm: w = l1 l2 ... lk with l1 >= ... >= lk Lyndon.
inline std::vector<LoopWord> canonical_factorization(const OrderPolicy& policy, std::span<const LoopLetter> w) {
    std::vector<LoopWord> out;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n) {
            auto c = policy.compare(w[k], w[j]);
            if (c > 0) break;
            k = (c < 0) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            const std::size_t len = j - k;
            out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + len));
            i += len;
        }
    }
    return out;
}

// i_k^(d_k) >= i_r^(d_r + 1) for all k, r.
inline bool is_exponent_tight(const OrderPolicy& policy, std::span<const LoopLetter> w) {
    for (const auto& a : w)
        for (const auto& b : w)
            if (policy.less(a, LoopLetter{b.node, b.exp + 1})) return false;
    return true;
}

// For a Lyndon word the first letter is the minimum, so only k = 1 needs checking.
inline bool is_exponent_tight_lyndon(const OrderPolicy& policy, std::span<const LoopLetter> w) {
    if (w.empty()) return true;
    for (const auto& b : w)
        if (policy.less(w.front(), LoopLetter{b.node, b.exp + 1})) return false;
    return true;
}

// Shift every letter i^(d) to i^(d + k c_i).
inline LoopWord upsilon(const OrderPolicy& policy, const LoopWord& w, Exponent k) {
    if (!policy.is_weighted()) throw UnsupportedOperation("the periodicity shift needs a weighted order");
    LoopWord out = w;
    for (auto& l : out) l.exp += k * policy.weight(l.node);
    return out;
}

inline Root hdeg(std::span<const LoopLetter> w, int rank) {
    Root r{std::vector<int>(static_cast<std::size_t>(rank), 0)};
    for (const auto& l : w) r.coeffs[static_cast<std::size_t>(l.node - 1)] += 1;
    return r;
}

inline Exponent vdeg(std::span<const LoopLetter> w) {
    Exponent s = 0;
    for (const auto& l : w) s += l.exp;
    return s;
}

// "[3^(1) 2^(0) 1^(0) 4^(1)]"
inline std::string render(std::span<const LoopLetter> w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(w[k].node) + "^(" + std::to_string(w[k].exp) + ")";
    }
    return s + "]";
}

// Multiset of loop letters, kept sorted by (node, exponent).
class LetterMultiset {
public:
    LetterMultiset() = default;
    explicit LetterMultiset(std::span<const LoopLetter> letters) : letters_(letters.begin(), letters.end()) { normalize(); }

    const std::vector<LoopLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

    // Smallest letter in the policy order.
    std::size_t argmin(const OrderPolicy& policy) const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < letters_.size(); ++k)
            if (policy.less(letters_[k], letters_[best])) best = k;
        return best;
    }

    // Replace the letter whose increment is the largest by that increment.
    LetterMultiset step_up(const OrderPolicy& policy) const {
        LetterMultiset m = *this;
        std::size_t best = 0;
        for (std::size_t k = 1; k < m.letters_.size(); ++k)
            if (policy.less(LoopLetter{m.letters_[best].node, m.letters_[best].exp + 1},
                            LoopLetter{m.letters_[k].node, m.letters_[k].exp + 1}))
                best = k;
        m.letters_[best].exp += 1;
        m.normalize();
        return m;
    }

    // Inverse of step_up: decrement the smallest letter.
    LetterMultiset step_down(const OrderPolicy& policy) const {
        LetterMultiset m = *this;
        m.letters_[m.argmin(policy)].exp -= 1;
        m.normalize();
        return m;
    }

    LetterMultiset shifted(const OrderPolicy& policy, Exponent k) const {
        LetterMultiset m = *this;
        for (auto& l : m.letters_) l.exp += k * policy.weight(l.node);
        return m;
    }

    bool contains(const LetterMultiset& sub) const {
        return std::includes(letters_.begin(), letters_.end(), sub.letters_.begin(), sub.letters_.end(), key_less);
    }

    LetterMultiset minus(const LetterMultiset& sub) const {
        LetterMultiset m;
        std::set_difference(letters_.begin(), letters_.end(), sub.letters_.begin(), sub.letters_.end(),
                            std::back_inserter(m.letters_), key_less);
        return m;
    }

    Exponent vdeg() const { return loopwords::vdeg(letters_); }

    friend bool operator==(const LetterMultiset&, const LetterMultiset&) = default;

private:
    static bool key_less(const LoopLetter& a, const LoopLetter& b) {
        return a.node != b.node ? a.node < b.node : a.exp < b.exp;
    }
    void normalize() { std::sort(letters_.begin(), letters_.end(), key_less); }

    std::vector<LoopLetter> letters_;
};

} // namespace loopwords
