#pragma once

// Closed forms for the order 1 < 2 < ... < n and weight chains c_1 | c_2 | ... | c_n.
//
// The first-letter table lists, for d = 1, 2, ..., the index whose exponent
// grows when passing from l(alpha, d - 1) to l(alpha, d). It is built column
// by column: start with m_n copies of n; for i = 2..n copy the table to the
// right c_{n-i+2} / c_{n-i+1} - 1 times and append m_{n-i+1} copies of
// n - i + 1 to the last column; finally copy it c_1 - 1 more times.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "leclerc.hpp"
#include "order.hpp"
#include "words.hpp"

namespace loopwords::typea {

struct FirstLetterTable {
    std::vector<std::vector<int>> columns;

    std::vector<int> flat() const {
        std::vector<int> out;
        for (const auto& col : columns) out.insert(out.end(), col.begin(), col.end());
        return out;
    }
    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& col : columns) n += col.size();
        return n;
    }
};

inline void check_chain(const std::vector<Exponent>& c) {
    if (c.empty()) throw PreconditionError("empty weight chain");
    for (auto x : c)
        if (x < 1) throw PreconditionError("weights must be positive");
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] % c[k - 1] != 0)
            throw PreconditionError("weights do not form a divisibility chain: c_" + std::to_string(k) + " = " +
                                    std::to_string(c[k - 1]) + " does not divide c_" + std::to_string(k + 1) + " = " +
                                    std::to_string(c[k]));
}

// m defaults to all ones (type A, alpha = theta).
inline FirstLetterTable build_table(const std::vector<Exponent>& c, std::vector<int> m = {}) {
    check_chain(c);
    const int n = static_cast<int>(c.size());
    if (m.empty()) m.assign(c.size(), 1);
    if (m.size() != c.size()) throw PreconditionError("expected one multiplicity per node");
    for (int x : m)
        if (x < 1) throw PreconditionError("multiplicities must be positive");
    auto weight = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };
    auto mult = [&](int i) { return m[static_cast<std::size_t>(i - 1)]; };
    auto paste = [](FirstLetterTable& t, Exponent times) {
        const auto base = t.columns;
        for (Exponent r = 0; r < times; ++r) t.columns.insert(t.columns.end(), base.begin(), base.end());
    };

    FirstLetterTable t;
    t.columns.emplace_back(static_cast<std::size_t>(mult(n)), n);
    for (int i = 2; i <= n; ++i) {
        const int node = n - i + 1;
        paste(t, weight(node + 1) / weight(node) - 1);
        t.columns.back().insert(t.columns.back().end(), static_cast<std::size_t>(mult(node)), node);
    }
    paste(t, c.front() - 1);
    return t;
}

// Column-major layout: one text row per table row, columns separated by spaces.
inline std::string render_table(const FirstLetterTable& t) {
    std::size_t rows = 0;
    for (const auto& col : t.columns) rows = std::max(rows, col.size());
    std::string out;
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        for (std::size_t k = 0; k < t.columns.size(); ++k) {
            if (k) line += ' ';
            line += r < t.columns[k].size() ? std::to_string(t.columns[k][r]) : " ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

// l(theta, d) in type A_n for the order 1 < ... < n.
inline LoopWord closed_form_word(const std::vector<Exponent>& c, Exponent d) {
    const auto flat = build_table(c).flat();
    const auto period = static_cast<Exponent>(flat.size());
    const Exponent q = ceil_div(d, period) - 1;
    const Exponent r = d - q * period; // 0 < r <= period
    const int a = flat[static_cast<std::size_t>(r - 1)];
    const Exponent k = std::count(flat.begin(), flat.begin() + r, a);
    const int n = static_cast<int>(c.size());
    auto weight = [&](int i) { return c[static_cast<std::size_t>(i - 1)]; };

    LoopWord w{LoopLetter{a, k}};
    for (int i = 2; i <= a; ++i) {
        const int node = a - i + 1;
        w.push_back({node, ceil_div(k * weight(node) - weight(a), weight(a))});
    }
    for (int i = a + 1; i <= n; ++i) w.push_back({i, k * weight(i) / weight(a)});
    for (auto& l : w) l.exp += q * weight(l.node);
    return w;
}

// Letter multiset of l(alpha, d) with alpha = sum m_i alpha_i, 0 < d <= sum m_i c_i:
// with p_i copies of i among the first d table entries and p_i = m_i d_i + r_i,
// r_i letters of node i carry exponent d_i + 1 and the others d_i.
inline LetterMultiset bcd_multiset(const std::vector<Exponent>& c, const std::vector<int>& m, Exponent d) {
    const auto flat = build_table(c, m).flat();
    if (d <= 0 || d > static_cast<Exponent>(flat.size()))
        throw PreconditionError("d must lie in (0, " + std::to_string(flat.size()) + "]");
    std::vector<LoopLetter> letters;
    for (int i = 1; i <= static_cast<int>(c.size()); ++i) {
        const Exponent p = std::count(flat.begin(), flat.begin() + d, i);
        const Exponent mi = m[static_cast<std::size_t>(i - 1)];
        const Exponent di = p / mi, ri = p % mi;
        for (Exponent t = 0; t < mi; ++t) letters.push_back({i, t < ri ? di + 1 : di});
    }
    return LetterMultiset(letters);
}

} // namespace loopwords::typea
