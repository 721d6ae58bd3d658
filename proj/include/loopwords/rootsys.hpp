#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "error.hpp"

namespace loopwords {

using Matrix = std::vector<std::vector<int>>;

// An element of the root lattice in simple-root coordinates. Node i of the
// Dynkin diagram is stored at coeffs[i - 1].
struct Root {
    std::vector<int> coeffs;

    int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
    int operator[](int node) const { return coeffs[static_cast<std::size_t>(node - 1)]; }

    friend Root operator+(const Root& a, const Root& b) {
        Root r = a;
        for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
        return r;
    }
    friend Root operator-(const Root& a, const Root& b) {
        Root r = a;
        for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= b.coeffs[k];
        return r;
    }
    friend Root operator-(const Root& a) {
        Root r = a;
        for (auto& x : r.coeffs) x = -x;
        return r;
    }
    friend auto operator<=>(const Root&, const Root&) = default;
    friend bool operator==(const Root&, const Root&) = default;
};

inline std::string to_string(const Root& r) {
    std::string s = "(";
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(r.coeffs[k]);
    }
    return s + ")";
}

namespace detail {

struct Bond {
    int a, b;      // 1-based nodes
    int ratio = 1; // squared-length ratio long/short
    int long_node = 0;
};

inline std::vector<Bond> chain(int from, int to) {
    std::vector<Bond> out;
    for (int k = from; k < to; ++k) out.push_back({k, k + 1});
    return out;
}

// Dynkin diagrams. A-D follow Bourbaki; G2 has node 1 long; F4 is 1-2=3-4 with
// 3,4 long; E_n is a chain 1..n-1 with node n attached to n-3.
inline std::vector<Bond> diagram(char family, int rank) {
    switch (family) {
    case 'A': return chain(1, rank);
    case 'B': {
        auto b = chain(1, rank - 1);
        b.push_back({rank - 1, rank, 2, rank - 1});
        return b;
    }
    case 'C': {
        auto b = chain(1, rank - 1);
        b.push_back({rank - 1, rank, 2, rank});
        return b;
    }
    case 'D': {
        auto b = chain(1, rank - 1);
        b.push_back({rank - 2, rank});
        return b;
    }
    case 'E': {
        auto b = chain(1, rank - 1);
        b.push_back({rank - 3, rank});
        return b;
    }
    case 'F': return {{1, 2}, {2, 3, 2, 3}, {3, 4}};
    case 'G': return {{1, 2, 3, 1}};
    }
    throw ConfigError("unknown family");
}

inline std::pair<char, int> parse_type(std::string_view label, int rank) {
    if (label.empty()) throw ConfigError("empty type label");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int implied = 0;
    if (label.size() > 1) {
        std::string digits(label.substr(1));
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ConfigError("malformed type label '" + std::string(label) + "'");
        implied = std::stoi(digits);
    }
    if (implied && rank && implied != rank)
        throw ConfigError("rank " + std::to_string(rank) + " contradicts type " + std::string(label));
    int n = implied ? implied : rank;
    bool ok = false;
    switch (family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 3; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: throw ConfigError("unknown type '" + std::string(label) + "'");
    }
    if (!ok) throw ConfigError("invalid rank " + std::to_string(n) + " for type " + std::string(1, family));
    return {family, n};
}

} // namespace detail

// Finite root system of a simple Lie algebra, built by root-string closure
// from its Cartan matrix. Immutable once built.
class RootSystem {
public:
    static RootSystem build(std::string_view type_label, int rank = 0) {
        auto [family, n] = detail::parse_type(type_label, rank);
        RootSystem sys;
        sys.family_ = family;
        sys.rank_ = n;
        sys.label_ = std::string(1, family) + std::to_string(n);
        sys.init_cartan(detail::diagram(family, n));
        sys.init_roots();
        return sys;
    }

    const std::string& type_label() const { return label_; }
    char family() const { return family_; }
    int rank() const { return rank_; }
    const Matrix& cartan() const { return cartan_; }
    const Matrix& sym_cartan() const { return sym_; }
    const std::vector<Root>& positive_roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    const Root& root(std::size_t id) const { return roots_[id]; }
    const Root& theta() const { return roots_[theta_id_]; }
    std::size_t theta_id() const { return theta_id_; }
    const std::vector<int>& labels() const { return theta().coeffs; }

    Root simple_root(int node) const {
        Root r{std::vector<int>(static_cast<std::size_t>(rank_), 0)};
        r.coeffs[static_cast<std::size_t>(node - 1)] = 1;
        return r;
    }
    std::size_t simple_id(int node) const { return *index_of(simple_root(node).coeffs); }
    bool is_simple(std::size_t id) const { return roots_[id].height() == 1; }

    // (alpha, beta) through the symmetrized Cartan matrix.
    long long pairing(std::span<const int> a, std::span<const int> b) const {
        long long s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                s += static_cast<long long>(a[i]) * b[j] * sym_[i][j];
        return s;
    }
    long long pairing(const Root& a, const Root& b) const { return pairing(a.coeffs, b.coeffs); }

    // (lambda, alpha_i^vee) = sum_j lambda_j a_ij.
    long long coroot_pairing(std::span<const int> lambda, int node) const {
        long long s = 0;
        for (int j = 0; j < rank_; ++j) s += static_cast<long long>(lambda[j]) * cartan_[node - 1][j];
        return s;
    }
    // (lambda, theta^vee) = 2 (lambda, theta) / (theta, theta).
    long long theta_coroot_pairing(std::span<const int> lambda) const {
        return 2 * pairing(lambda, theta().coeffs) / pairing(theta(), theta());
    }

    std::optional<std::size_t> index_of(std::span<const int> coeffs) const {
        auto it = index_.find(std::vector<int>(coeffs.begin(), coeffs.end()));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool is_root(std::span<const int> coeffs) const { return index_of(coeffs).has_value(); }
    bool is_root(const Root& r) const { return is_root(r.coeffs); }

    std::optional<Root> add(const Root& a, const Root& b) const {
        Root s = a + b;
        if (is_root(s)) return s;
        return std::nullopt;
    }

    // Id of roots[a] + roots[b] when it is a positive root.
    std::optional<std::size_t> sum_id(std::size_t a, std::size_t b) const {
        int v = sum_[a][b];
        if (v < 0) return std::nullopt;
        return static_cast<std::size_t>(v);
    }

    // All ordered pairs (g1, g2) of positive-root ids with roots[g1] + roots[g2] = roots[id].
    const std::vector<std::pair<std::size_t, std::size_t>>& splittings(std::size_t id) const { return splits_[id]; }

private:
    void init_cartan(const std::vector<detail::Bond>& bonds) {
        auto n = static_cast<std::size_t>(rank_);
        cartan_.assign(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) cartan_[i][i] = 2;
        for (const auto& b : bonds) {
            auto i = static_cast<std::size_t>(b.a - 1), j = static_cast<std::size_t>(b.b - 1);
            cartan_[i][j] = cartan_[j][i] = -1;
            if (b.ratio > 1) {
                // a_ij = <alpha_j, alpha_i^vee>: the row of the short node carries -ratio.
                auto s = static_cast<std::size_t>((b.long_node == b.a ? b.b : b.a) - 1);
                auto l = static_cast<std::size_t>(b.long_node - 1);
                cartan_[s][l] = -b.ratio;
                cartan_[l][s] = -1;
            }
        }
        // Minimal positive integers eps_i with eps_i a_ij = eps_j a_ji; (alpha_i, alpha_i) = 2 eps_i.
        using Q = boost::rational<long long>;
        std::vector<Q> eps(n, Q(0));
        eps[0] = 1;
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j && cartan_[i][j] != 0 && eps[i] != Q(0) && eps[j] == Q(0)) {
                        eps[j] = eps[i] * Q(cartan_[i][j], cartan_[j][i]);
                        changed = true;
                    }
        }
        long long den = 1;
        for (auto e : eps) den = std::lcm(den, e.denominator());
        std::vector<long long> scaled;
        long long g = 0;
        for (auto e : eps) {
            scaled.push_back(e.numerator() * (den / e.denominator()));
            g = std::gcd(g, scaled.back());
        }
        sym_.assign(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sym_[i][j] = static_cast<int>(scaled[i] / g) * cartan_[i][j];
    }

    void init_roots() {
        auto n = static_cast<std::size_t>(rank_);
        std::map<std::vector<int>, int> known;
        std::vector<std::vector<int>> layer;
        for (int node = 1; node <= rank_; ++node) {
            layer.push_back(simple_root(node).coeffs);
            known.emplace(layer.back(), 0);
        }
        std::vector<std::vector<int>> all = layer;
        while (!layer.empty()) {
            std::map<std::vector<int>, int> next;
            for (const auto& beta : layer) {
                for (std::size_t i = 0; i < n; ++i) {
                    std::vector<int> down = beta;
                    int p = 0;
                    while (true) {
                        down[i] -= 1;
                        if (!known.count(down)) break;
                        ++p;
                    }
                    long long pair = 0;
                    for (std::size_t j = 0; j < n; ++j) pair += static_cast<long long>(beta[j]) * cartan_[i][j];
                    bool simple_self = std::accumulate(beta.begin(), beta.end(), 0) == 1 && beta[i] == 1;
                    if (!simple_self && p - pair > 0) {
                        auto up = beta;
                        up[i] += 1;
                        next.emplace(up, 0);
                    }
                }
            }
            layer.clear();
            for (auto& [v, _] : next) {
                known.emplace(v, 0);
                layer.push_back(v);
                all.push_back(v);
            }
        }
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
            if (ha != hb) return ha < hb;
            return a < b;
        });
        roots_.clear();
        for (std::size_t k = 0; k < all.size(); ++k) {
            roots_.push_back(Root{all[k]});
            index_.emplace(all[k], k);
        }
        theta_id_ = roots_.size() - 1;

        sum_.assign(roots_.size(), std::vector<int>(roots_.size(), -1));
        splits_.assign(roots_.size(), {});
        for (std::size_t a = 0; a < roots_.size(); ++a)
            for (std::size_t b = 0; b < roots_.size(); ++b) {
                auto s = index_of((roots_[a] + roots_[b]).coeffs);
                if (s) {
                    sum_[a][b] = static_cast<int>(*s);
                    splits_[*s].emplace_back(a, b);
                }
            }
    }

    char family_ = 'A';
    int rank_ = 0;
    std::string label_;
    Matrix cartan_, sym_;
    std::vector<Root> roots_;
    std::map<std::vector<int>, std::size_t> index_;
    std::size_t theta_id_ = 0;
    std::vector<std::vector<int>> sum_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits_;
};

} // namespace loopwords
