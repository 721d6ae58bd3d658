#pragma once

// Property suites over a grid of (alpha, d). Each suite counts checked
// instances and collects failure descriptions; an optional trace receives
// every instance.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "leclerc.hpp"
#include "oracle.hpp"
#include "order.hpp"
#include "rootsys.hpp"
#include "typea.hpp"
#include "weyl.hpp"
#include "words.hpp"

namespace loopwords::verify {

struct Report {
    std::string suite;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    std::function<void(const std::string&)> trace;

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++checked;
        if (!ok) failures.push_back(describe());
        if (trace) trace(std::string(ok ? "ok   " : "FAIL ") + describe());
    }
    // Runs f, recording any exception as a failure.
    template <class F, class Describe>
    void guard(F&& f, Describe&& describe) {
        try {
            f();
        } catch (const std::exception& e) {
            expect(false, [&] { return describe() + ": " + e.what(); });
        }
    }
    bool ok() const { return failures.empty(); }
    void merge(const Report& other) {
        checked += other.checked;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

// Exponent window per root: absolute [lo, hi] if given, otherwise
// [-f(alpha), 2 f(alpha)] for weighted orders and [-4, 6] for generalized ones.
struct Window {
    std::optional<std::pair<Exponent, Exponent>> absolute;

    std::pair<Exponent, Exponent> range(const LeclercEngine& e, std::size_t id) const {
        if (absolute) return *absolute;
        if (!e.policy().is_weighted()) return {-4, 6};
        const Exponent f = e.weighted_height(id);
        return {-f, 2 * f};
    }
};

inline std::string cell(const LeclercEngine& e, std::size_t id, Exponent d) {
    return "l(" + to_string(e.system().root(id)) + "," + std::to_string(d) + ")";
}

// Lyndon, exponent-tight, correct bidegree; Naive = Fast when both run.
inline Report tightness(LeclercEngine& e, const Window& win, std::function<void(const std::string&)> trace = {}) {
    Report r{"tightness", 0, {}, std::move(trace)};
    const auto& sys = e.system();
    for (std::size_t id = 0; id < sys.size(); ++id) {
        auto [lo, hi] = win.range(e, id);
        for (Exponent d = lo; d <= hi; ++d)
            r.guard([&] {
                const LoopWord w = e.fast(id, d);
                r.expect(is_lyndon(e.policy(), w) && is_exponent_tight(e.policy(), w) &&
                             hdeg(w, sys.rank()) == sys.root(id) && vdeg(w) == d,
                         [&] { return cell(e, id, d) + " = " + render(w) + " is Lyndon, tight, of its degree"; });
                if (e.policy().is_weighted()) {
                    const LoopWord n = e.naive(id, d);
                    r.expect(n == w, [&] { return cell(e, id, d) + ": naive " + render(n) + " = fast " + render(w); });
                }
            }, [&] { return cell(e, id, d); });
    }
    return r;
}

inline Report monotonicity(LeclercEngine& e, const Window& win, std::function<void(const std::string&)> trace = {}) {
    Report r{"monotonicity", 0, {}, std::move(trace)};
    for (std::size_t id = 0; id < e.system().size(); ++id) {
        auto [lo, hi] = win.range(e, id);
        for (Exponent d = lo + 1; d <= hi; ++d)
            r.guard([&] {
                r.expect(word_less(e.policy(), e.fast(id, d), e.fast(id, d - 1)),
                         [&] { return cell(e, id, d) + " < " + cell(e, id, d - 1); });
            }, [&] { return cell(e, id, d); });
    }
    return r;
}

// l(alpha, d + f(alpha)) = Upsilon(l(alpha, d)), checked on the naive engine,
// which does not use the shift.
inline Report periodicity(LeclercEngine& e, const Window& win, std::function<void(const std::string&)> trace = {}) {
    Report r{"periodicity", 0, {}, std::move(trace)};
    if (!e.policy().is_weighted()) throw UnsupportedOperation("periodicity needs a weighted order");
    for (std::size_t id = 0; id < e.system().size(); ++id) {
        auto [lo, hi] = win.range(e, id);
        const Exponent f = e.weighted_height(id);
        for (Exponent d = lo; d <= hi; ++d)
            r.guard([&] {
                r.expect(e.naive(id, d + f) == upsilon(e.policy(), e.naive(id, d), 1),
                         [&] { return cell(e, id, d + f) + " = Upsilon " + cell(e, id, d); });
            }, [&] { return cell(e, id, d); });
    }
    return r;
}

inline Report finite_restriction(LeclercEngine& e, std::function<void(const std::string&)> trace = {}) {
    Report r{"finite-restriction", 0, {}, std::move(trace)};
    for (std::size_t id = 0; id < e.system().size(); ++id)
        r.guard([&] {
            const LoopWord f = e.finite_word(id);
            bool ok = e.fast(id, 0) == f;
            if (e.policy().is_weighted()) ok = ok && e.naive(id, 0) == f;
            r.expect(ok, [&] { return cell(e, id, 0) + " = finite word " + render(f); });
        }, [&] { return cell(e, id, 0); });
    return r;
}

// The first letter j^(e) of l(alpha, d) has e > N_j iff d > f_N(alpha); for
// weighted orders only N = 0 is checked, for generalized orders markers 0..3.
inline Report first_letter(LeclercEngine& e, const Window& win, std::function<void(const std::string&)> trace = {}) {
    Report r{"first-letter", 0, {}, std::move(trace)};
    std::vector<Marker> markers{e.policy().marker(0, 1)};
    if (!e.policy().is_weighted())
        for (int s = 1; s <= 3; ++s) {
            markers.push_back(e.policy().marker(s, 1));
            markers.push_back(e.policy().marker(s, -1));
        }
    for (std::size_t id = 0; id < e.system().size(); ++id) {
        auto [lo, hi] = win.range(e, id);
        for (Exponent d = lo; d <= hi; ++d)
            r.guard([&] {
                const LoopWord w = e.fast(id, d);
                for (const auto& m : markers) {
                    const Exponent h = OrderPolicy::marker_height(m, e.system().root(id));
                    const Exponent n = m.preimage[static_cast<std::size_t>(w.front().node - 1)];
                    r.expect((d > h) == (w.front().exp > n), [&] {
                        return cell(e, id, d) + " first letter vs marker height " + std::to_string(h);
                    });
                }
            }, [&] { return cell(e, id, d); });
    }
    return r;
}

// l(alpha, d) < l(beta, e) implies l(alpha, d) < l(alpha + beta, d + e) < l(beta, e).
inline Report convexity(LeclercEngine& e, const Window& win, std::function<void(const std::string&)> trace = {}) {
    Report r{"convexity", 0, {}, std::move(trace)};
    const auto& sys = e.system();
    const auto& policy = e.policy();
    for (std::size_t a = 0; a < sys.size(); ++a)
        for (std::size_t b = 0; b < sys.size(); ++b) {
            auto sum = sys.sum_id(a, b);
            if (!sum) continue;
            auto [alo, ahi] = win.range(e, a);
            auto [blo, bhi] = win.range(e, b);
            for (Exponent d = alo; d <= ahi; ++d)
                for (Exponent f = blo; f <= bhi; ++f)
                    r.guard([&] {
                        const LoopWord u = e.fast(a, d), v = e.fast(b, f);
                        if (!word_less(policy, u, v)) return;
                        const LoopWord m = e.fast(*sum, d + f);
                        r.expect(word_less(policy, u, m) && word_less(policy, m, v), [&] {
                            return cell(e, a, d) + " < " + cell(e, *sum, d + f) + " < " + cell(e, b, f);
                        });
                    }, [&] { return cell(e, a, d) + " + " + cell(e, b, f); });
        }
    return r;
}

// For every costandard-type instance l(alpha, d) = l1 l2 with l1 < l2 standard,
// no split (g1', d1') + (g2', d2') = (alpha, d) has l1 < l1' < l2' < l2.
inline Report minimality(LeclercEngine& e, const Window& win, std::function<void(const std::string&)> trace = {}) {
    Report r{"minimality", 0, {}, std::move(trace)};
    const auto& sys = e.system();
    const auto& policy = e.policy();
    for (std::size_t id = 0; id < sys.size(); ++id) {
        auto [lo, hi] = win.range(e, id);
        for (Exponent d = lo; d <= hi; ++d)
            r.guard([&] {
                const LoopWord whole = e.fast(id, d);
                for (auto [g1, g2] : sys.splittings(id)) {
                    auto [l1lo, l1hi] = win.range(e, g1);
                    const Exponent margin = hi - lo + 1;
                    for (Exponent d1 = l1lo - margin; d1 <= l1hi + margin; ++d1) {
                        const LoopWord l1 = e.fast(g1, d1), l2 = e.fast(g2, d - d1);
                        if (!word_less(policy, l1, l2) || concat(l1, l2) != whole) continue;
                        for (auto [h1, h2] : sys.splittings(id))
                            for (Exponent e1 = l1lo - margin; e1 <= l1hi + margin; ++e1) {
                                const LoopWord m1 = e.fast(h1, e1), m2 = e.fast(h2, d - e1);
                                const bool between = word_less(policy, l1, m1) && word_less(policy, m1, m2) &&
                                                     word_less(policy, m2, l2);
                                r.expect(!between, [&] {
                                    return cell(e, id, d) + " = " + render(l1) + render(l2) + " vs " + render(m1) +
                                           render(m2);
                                });
                            }
                    }
                }
            }, [&] { return cell(e, id, d); });
    }
    return r;
}

// min of one side <= max of the other for random degree-equal decompositions.
inline Report several_summands(LeclercEngine& e, const Window& win, std::size_t count, std::uint64_t seed,
                               std::function<void(const std::string&)> trace = {}) {
    Report r{"several-summands", 0, {}, std::move(trace)};
    const auto& sys = e.system();
    const auto& policy = e.policy();
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto random_exponent = [&](std::size_t id) {
        auto [lo, hi] = win.range(e, id);
        return std::uniform_int_distribution<Exponent>(lo, hi)(rng);
    };
    using Term = std::pair<std::size_t, Exponent>;
    auto describe = [&](const std::vector<Term>& side) {
        std::string s;
        for (const auto& [id, d] : side) s += (s.empty() ? "" : " + ") + cell(e, id, d);
        return s;
    };
    for (std::size_t n = 0; n < count; ++n) {
        std::vector<Term> left, right;
        const std::size_t k = 1 + pick(3);
        std::vector<int> total(static_cast<std::size_t>(sys.rank()), 0);
        Exponent dsum = 0;
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t id = pick(sys.size());
            const Exponent d = random_exponent(id);
            left.emplace_back(id, d);
            for (std::size_t c = 0; c < total.size(); ++c) total[c] += sys.root(id).coeffs[c];
            dsum += d;
        }
        // Random decomposition of the same total into positive roots.
        std::vector<int> rest = total;
        while (std::any_of(rest.begin(), rest.end(), [](int x) { return x > 0; })) {
            std::vector<std::size_t> fits;
            for (std::size_t id = 0; id < sys.size(); ++id) {
                bool ok = true;
                for (std::size_t c = 0; c < rest.size(); ++c) ok = ok && sys.root(id).coeffs[c] <= rest[c];
                if (ok) fits.push_back(id);
            }
            const std::size_t id = fits[pick(fits.size())];
            for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= sys.root(id).coeffs[c];
            right.emplace_back(id, random_exponent(id));
        }
        Exponent rsum = 0;
        for (std::size_t t = 0; t + 1 < right.size(); ++t) rsum += right[t].second;
        right.back().second = dsum - rsum;

        r.guard([&] {
            auto extreme = [&](const std::vector<Term>& side, bool want_min) {
                LoopWord best = e.fast(side.front().first, side.front().second);
                for (const auto& [id, d] : side) {
                    LoopWord w = e.fast(id, d);
                    if (want_min ? word_less(policy, w, best) : word_less(policy, best, w)) best = std::move(w);
                }
                return best;
            };
            const LoopWord lmin = extreme(left, true), rmax = extreme(right, false);
            const LoopWord rmin = extreme(right, true), lmax = extreme(left, false);
            r.expect(!word_less(policy, rmax, lmin) && !word_less(policy, lmax, rmin),
                     [&] { return describe(left) + " = " + describe(right); });
        }, [&] { return describe(left) + " = " + describe(right); });
    }
    return r;
}

// Oracle = Fast (= Naive) over the window max(s, smallest window holding the
// degree); the oracle answer is unchanged one window up when check_stability
// is set; every factor of a standard word is standard.
inline Report oracle_agreement(LeclercEngine& e, const Window& win, int s, bool check_stability,
                               std::function<void(const std::string&)> trace = {}) {
    Report r{"oracle", 0, {}, std::move(trace)};
    const auto& sys = e.system();
    for (std::size_t id = 0; id < sys.size(); ++id) {
        auto [lo, hi] = win.range(e, id);
        for (Exponent d = lo; d <= hi; ++d)
            r.guard([&] {
                const LoopWord w = e.fast(id, d);
                const int window = std::max(s, oracle::minimal_window(e.policy(), sys.root(id), d));
                const LoopWord o = oracle::oracle_word(sys, e.policy(), sys.root(id), d, window);
                bool ok = o == w;
                if (e.policy().is_weighted()) ok = ok && e.naive(id, d) == w;
                r.expect(ok, [&] { return cell(e, id, d) + ": oracle " + render(o) + ", fast " + render(w); });
                if (check_stability) {
                    const LoopWord o2 = oracle::oracle_word(sys, e.policy(), sys.root(id), d, window + 1);
                    r.expect(o2 == o, [&] { return cell(e, id, d) + " stable from s=" + std::to_string(window); });
                }
                for (std::size_t a = 0; a < w.size(); ++a)
                    for (std::size_t b = a + 1; b <= w.size(); ++b) {
                        const LoopWord sub(w.begin() + static_cast<std::ptrdiff_t>(a),
                                           w.begin() + static_cast<std::ptrdiff_t>(b));
                        r.expect(e.is_standard(sub),
                                 [&] { return "factor " + render(sub) + " of " + cell(e, id, d) + " is standard"; });
                    }
            }, [&] { return cell(e, id, d); });
    }
    return r;
}

struct WeylOptions {
    std::size_t beta_count = 200;
    std::size_t random_mu = 20;
    std::uint64_t seed = 1;
};

inline Report weyl(LeclercEngine& e, const WeylOptions& opt, std::function<void(const std::string&)> trace = {}) {
    Report r{"weyl", 0, {}, std::move(trace)};
    const auto& sys = e.system();
    const auto& policy = e.policy();
    LoopRootOrder order(e);

    r.guard([&] {
        const auto half = static_cast<Exponent>(opt.beta_count / 2);
        const auto beta = beta_sequence(e, half - static_cast<Exponent>(opt.beta_count) + 1, half);
        for (std::size_t k = 1; k < beta.size(); ++k)
            r.expect(order.less(beta[k - 1].root, beta[k].root), [&] {
                return "beta_" + std::to_string(beta[k - 1].k) + " = " + to_string(beta[k - 1].root) + " < beta_" +
                       std::to_string(beta[k].k) + " = " + to_string(beta[k].root);
            });
    }, [] { return std::string("beta sequence"); });

    if (policy.is_weighted()) {
        r.guard([&] {
            std::vector<Exponent> mu;
            for (int i = 1; i <= sys.rank(); ++i) mu.push_back(policy.weight(i));
            auto block = translation_terminal_set(sys, mu);
            order.sort(block);
            const auto word = extract_and_verify(sys, block);
            r.expect(word.size() == block.size(), [&] { return "reduced word of the L block"; });
            auto twice = mu;
            for (auto& x : twice) x *= 2;
            auto block2 = translation_terminal_set(sys, twice);
            order.sort(block2);
            const auto word2 = extract_and_verify(sys, block2);
            r.expect(std::equal(word.begin(), word.end(), word2.begin()),
                     [&] { return "reduced word of two L blocks extends that of one"; });
        }, [] { return std::string("L block extraction"); });

        Exponent top = 0;
        for (int i = 1; i <= sys.rank(); ++i) top = std::max(top, policy.weight(i));
        for (int i = 1; i <= sys.rank(); ++i)
            for (Exponent d = 0; d <= 3 * top; ++d)
                r.guard([&] {
                    const auto seg = terminal_segment(e, i, d);
                    Exponent expected = 0;
                    for (const auto& alpha : sys.positive_roots()) expected += p_of_alpha(seg.p, alpha);
                    r.expect(static_cast<Exponent>(seg.word_level.size()) == expected,
                             [&] { return "|L_<(" + std::to_string(i) + "," + std::to_string(d) + ")| = sum p(alpha)"; });
                    extract_and_verify(sys, seg.word_level);
                    for (int j = 1; j <= sys.rank(); ++j)
                        r.expect(seg.p[static_cast<std::size_t>(j - 1)] == p_constant_by_rule(policy, i, d, j), [&] {
                            return "p_" + std::to_string(j) + " for (" + std::to_string(i) + "," + std::to_string(d) +
                                   ") matches the letter rule";
                        });
                }, [&] { return "terminal segment (" + std::to_string(i) + "," + std::to_string(d) + ")"; });
    }

    std::mt19937_64 rng(opt.seed);
    for (std::size_t n = 0; n < opt.random_mu; ++n) {
        Coweight mu;
        for (int i = 0; i < sys.rank(); ++i) mu.push_back(std::uniform_int_distribution<Exponent>(1, 5)(rng));
        r.guard([&] {
            Exponent length = 0, top = 0;
            for (const auto& alpha : sys.positive_roots()) {
                length += coweight_pairing(alpha, mu);
                top = std::max(top, coweight_pairing(alpha, mu));
            }
            auto set = translation_terminal_set(sys, mu);
            std::sort(set.begin(), set.end());
            r.expect(static_cast<Exponent>(set.size()) == length && translation_inversions(sys, mu, top + 2) == set,
                     [&] {
                         std::string s = "|E_mu| = sum (alpha, mu) for mu =";
                         for (auto x : mu) s += " " + std::to_string(x);
                         return s;
                     });
        }, [] { return std::string("random coweight"); });
    }
    return r;
}

// Closed forms for type A_n, n = 2..5, against the fast engine on the window [-F, 2F].
inline Report typea_closed_forms(std::function<void(const std::string&)> trace = {}) {
    Report r{"typea", 0, {}, std::move(trace)};
    auto chain_str = [](const std::vector<Exponent>& c) {
        std::string s;
        for (auto x : c) s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    for (int n = 2; n <= 5; ++n)
        for (int kind = 0; kind < 3; ++kind) {
            std::vector<Exponent> c;
            Exponent x = 1;
            for (int i = 0; i < n; ++i) {
                c.push_back(x);
                x *= kind == 0 ? 1 : kind == 1 ? (i + 2) : 3; // (1,..,1), (1,2,6,24,..), (1,3,9,27,..)
            }
            const auto sys = RootSystem::build("A", n);
            LeclercEngine e(sys, OrderPolicy::weighted(OrderPolicy::identity_order(n), c));
            const Exponent f = e.weighted_height(sys.theta_id());
            for (Exponent d = -f; d <= 2 * f; ++d)
                r.guard([&] {
                    const LoopWord cf = typea::closed_form_word(c, d), w = e.fast(sys.theta_id(), d);
                    r.expect(cf == w, [&] {
                        return "A" + std::to_string(n) + " c=" + chain_str(c) + " d=" + std::to_string(d) + ": closed " +
                               render(cf) + ", fast " + render(w);
                    });
                }, [&] { return "A" + std::to_string(n) + " c=" + chain_str(c) + " d=" + std::to_string(d); });
        }
    return r;
}

// B/C/D multiset rule against multiset_chain for alpha = theta, order 1 < ... < n.
inline Report bcd_multisets(const std::string& type, const std::vector<Exponent>& c,
                            std::function<void(const std::string&)> trace = {}) {
    Report r{"bcd", 0, {}, std::move(trace)};
    const auto sys = RootSystem::build(type, static_cast<int>(c.size()));
    LeclercEngine e(sys, OrderPolicy::weighted(OrderPolicy::identity_order(sys.rank()), c));
    const auto& m = sys.theta().coeffs;
    const Exponent f = e.weighted_height(sys.theta_id());
    for (Exponent d = 1; d <= f; ++d)
        r.guard([&] {
            r.expect(typea::bcd_multiset(c, m, d) == e.multiset_chain(sys.theta_id(), d),
                     [&] { return sys.type_label() + " multiset of l(theta," + std::to_string(d) + ")"; });
        }, [&] { return sys.type_label() + " d=" + std::to_string(d); });
    return r;
}

// l(alpha, f_N(alpha)) lifts l(alpha, 0) letterwise to exponents N_i, for the
// first `markers` markers of each sign.
inline Report marker_lift(LeclercEngine& e, int markers, std::function<void(const std::string&)> trace = {}) {
    Report r{"marker-lift", 0, {}, std::move(trace)};
    const auto& sys = e.system();
    for (int s = 1; s <= markers; ++s)
        for (int sign : {+1, -1}) {
            const Marker m = e.policy().marker(s, sign);
            for (std::size_t id = 0; id < sys.size(); ++id)
                r.guard([&] {
                    LoopWord lifted = e.finite_word(id);
                    for (auto& l : lifted) l.exp = m.preimage[static_cast<std::size_t>(l.node - 1)];
                    const Exponent h = OrderPolicy::marker_height(m, sys.root(id));
                    const LoopWord w = e.fast(id, h);
                    r.expect(w == lifted, [&] {
                        return cell(e, id, h) + " = " + render(w) + " lifts the d=0 word to marker " +
                               std::to_string(sign * s);
                    });
                }, [&] { return cell(e, id, 0) + " marker " + std::to_string(sign * s); });
        }
    return r;
}

// Nested marker blocks and reduced words of the generalized beta sequence.
inline Report generalized_beta(LeclercEngine& e, std::size_t count, std::function<void(const std::string&)> trace = {}) {
    Report r{"generalized-beta", 0, {}, std::move(trace)};
    r.guard([&] {
        const auto half = static_cast<Exponent>(count / 2);
        const auto beta = beta_sequence(e, -half, half);
        LoopRootOrder order(e);
        std::vector<AffineRealRoot> upper;
        for (std::size_t k = 0; k < beta.size(); ++k) {
            if (k) r.expect(order.less(beta[k - 1].root, beta[k].root), [&] {
                return "beta_" + std::to_string(beta[k - 1].k) + " < beta_" + std::to_string(beta[k].k);
            });
            if (beta[k].k <= 0) upper.push_back(beta[k].root);
        }
        const auto word = extract_and_verify(e.system(), upper);
        r.expect(word.size() == upper.size(), [] { return std::string("reduced word of the upper prefix"); });
    }, [] { return std::string("generalized beta sequence"); });
    return r;
}

} // namespace loopwords::verify
