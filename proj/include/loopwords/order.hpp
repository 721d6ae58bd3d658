#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "error.hpp"
#include "rootsys.hpp"

namespace loopwords {

using Exponent = std::int64_t;
using Rational = boost::rational<std::int64_t>;

// A loop letter i^(d): Dynkin node i (1-based) carrying exponent d.
struct LoopLetter {
    int node = 1;
    Exponent exp = 0;

    friend bool operator==(const LoopLetter&, const LoopLetter&) = default;
};

// Letters are compared by relative exponent d / c_i; a larger relative
// exponent means a smaller letter.
struct Weighted {
    std::vector<Exponent> c;
};

// f_i(d) = plus[i] * d for d >= 0 and minus[i] * d for d < 0.
struct Generalized {
    std::vector<Rational> plus;
    std::vector<Rational> minus;
};

// Marker values N with per-node preimages N_i, f_i(N_i) = N.
struct Marker {
    Rational value{0};
    std::vector<Exponent> preimage;
};

// Total order on the loop alphabet: an order on the nodes plus an exact
// exponent-comparison rule.
class OrderPolicy {
public:
    using Mode = std::variant<Weighted, Generalized>;

    // index_order lists the nodes in increasing order ("51324" is 5 < 1 < 3 < 2 < 4).
    OrderPolicy(std::vector<int> index_order, Mode mode) : order_(std::move(index_order)), mode_(std::move(mode)) {
        const auto n = order_.size();
        if (n == 0) throw ConfigError("empty node order");
        position_.assign(n + 1, -1);
        for (std::size_t k = 0; k < n; ++k) {
            int node = order_[k];
            if (node < 1 || static_cast<std::size_t>(node) > n || position_[static_cast<std::size_t>(node)] != -1)
                throw ConfigError("node order is not a permutation of 1.." + std::to_string(n));
            position_[static_cast<std::size_t>(node)] = static_cast<int>(k);
        }
        if (auto* w = std::get_if<Weighted>(&mode_)) {
            if (w->c.size() != n) throw ConfigError("expected " + std::to_string(n) + " weights");
            for (auto c : w->c)
                if (c < 1) throw ConfigError("weights must be positive integers");
        } else {
            auto& g = std::get<Generalized>(mode_);
            if (g.plus.size() != n || g.minus.size() != n)
                throw ConfigError("expected " + std::to_string(n) + " slopes per sign");
            for (std::size_t k = 0; k < n; ++k)
                if (g.plus[k] <= Rational(0) || g.minus[k] <= Rational(0)) throw ConfigError("slopes must be positive");
        }
    }

    static OrderPolicy weighted(std::vector<int> index_order, std::vector<Exponent> c) {
        return OrderPolicy(std::move(index_order), Weighted{std::move(c)});
    }
    static OrderPolicy generalized(std::vector<int> index_order, std::vector<Rational> plus, std::vector<Rational> minus) {
        return OrderPolicy(std::move(index_order), Generalized{std::move(plus), std::move(minus)});
    }
    static std::vector<int> identity_order(int rank) {
        std::vector<int> o(static_cast<std::size_t>(rank));
        std::iota(o.begin(), o.end(), 1);
        return o;
    }

    int rank() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& index_order() const { return order_; }
    const Mode& mode() const { return mode_; }
    bool is_weighted() const { return std::holds_alternative<Weighted>(mode_); }
    const std::vector<Exponent>& weights() const {
        if (!is_weighted()) throw UnsupportedOperation("weights requested from a generalized order");
        return std::get<Weighted>(mode_).c;
    }
    Exponent weight(int node) const { return weights()[static_cast<std::size_t>(node - 1)]; }
    int position(int node) const { return position_[static_cast<std::size_t>(node)]; }
    bool node_less(int i, int j) const { return position(i) < position(j); }

    // f_i(d) as an exact rational.
    Rational relative(int node, Exponent d) const {
        auto k = static_cast<std::size_t>(node - 1);
        if (auto* w = std::get_if<Weighted>(&mode_)) return Rational(d, w->c[k]);
        const auto& g = std::get<Generalized>(mode_);
        return (d >= 0 ? g.plus[k] : g.minus[k]) * d;
    }

    // Three-way comparison of f_i(d) against f_j(e).
    std::strong_ordering compare_relative(int i, Exponent d, int j, Exponent e) const {
        if (auto* w = std::get_if<Weighted>(&mode_)) {
            __int128 lhs = static_cast<__int128>(d) * w->c[static_cast<std::size_t>(j - 1)];
            __int128 rhs = static_cast<__int128>(e) * w->c[static_cast<std::size_t>(i - 1)];
            return lhs <=> rhs;
        }
        Rational a = relative(i, d), b = relative(j, e);
        if (a < b) return std::strong_ordering::less;
        if (b < a) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::strong_ordering compare(const LoopLetter& a, const LoopLetter& b) const {
        auto rel = compare_relative(a.node, a.exp, b.node, b.exp);
        if (rel != 0) return 0 <=> rel; // larger relative exponent sorts first
        return position(a.node) <=> position(b.node);
    }
    bool less(const LoopLetter& a, const LoopLetter& b) const { return compare(a, b) < 0; }

    // f(alpha) = sum k_i c_i.
    Exponent weighted_height(const Root& alpha) const {
        const auto& c = weights();
        Exponent s = 0;
        for (std::size_t k = 0; k < c.size(); ++k) s += alpha.coeffs[k] * c[k];
        return s;
    }

    // s-th marker on the given side (sign = +1 or -1). Weighted mode uses N = +-s.
    Marker marker(int s, int sign) const {
        if (s < 0) throw PreconditionError("marker index must be non-negative");
        const auto n = order_.size();
        Marker m;
        if (auto* w = std::get_if<Weighted>(&mode_)) {
            m.value = Rational(sign * s);
            for (std::size_t k = 0; k < n; ++k) m.preimage.push_back(sign * s * w->c[k]);
            return m;
        }
        const auto& slopes = sign > 0 ? std::get<Generalized>(mode_).plus : std::get<Generalized>(mode_).minus;
        // Smallest positive N with N / a_i integral for every i: lcm(num) / gcd(den).
        std::int64_t num = 1, den = 0;
        for (const auto& a : slopes) {
            num = std::lcm(num, a.numerator());
            den = std::gcd(den, a.denominator());
        }
        m.value = Rational(num, den) * (sign * s);
        for (const auto& a : slopes) {
            Rational pre = m.value / a;
            m.preimage.push_back(pre.numerator());
        }
        return m;
    }

    // f_N(alpha) = sum k_i N_i.
    static Exponent marker_height(const Marker& m, const Root& alpha) {
        Exponent s = 0;
        for (std::size_t k = 0; k < m.preimage.size(); ++k) s += alpha.coeffs[k] * m.preimage[k];
        return s;
    }

    // Per-node exponent interval of the bounded alphabet I^(s).
    std::vector<std::pair<Exponent, Exponent>> alphabet_window(int s) const {
        auto lo = marker(s, -1), hi = marker(s, +1);
        std::vector<std::pair<Exponent, Exponent>> out;
        for (std::size_t k = 0; k < order_.size(); ++k) out.emplace_back(lo.preimage[k], hi.preimage[k]);
        return out;
    }

    // Stable identity of the policy, used to key caches.
    std::string fingerprint() const {
        std::string s = "order=";
        for (int v : order_) s += std::to_string(v) + ",";
        if (auto* w = std::get_if<Weighted>(&mode_)) {
            s += ";c=";
            for (auto c : w->c) s += std::to_string(c) + ",";
        } else {
            const auto& g = std::get<Generalized>(mode_);
            s += ";plus=";
            for (auto a : g.plus) s += std::to_string(a.numerator()) + "/" + std::to_string(a.denominator()) + ",";
            s += ";minus=";
            for (auto a : g.minus) s += std::to_string(a.numerator()) + "/" + std::to_string(a.denominator()) + ",";
        }
        return s;
    }

private:
    std::vector<int> order_;
    std::vector<int> position_;
    Mode mode_;
};

} // namespace loopwords
