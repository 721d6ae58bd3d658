#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <loopwords/loopwords.hpp>

namespace loopwords::cli {

using nlohmann::json;

enum class Format { Text, Json, Tsv };

struct RunConfig {
    std::string type;
    int rank = 0;
    std::string order;
    std::string weights;
    std::string slopes_pos, slopes_neg;
    std::string root = "theta";
    std::optional<Exponent> d;
    std::string d_range;
    std::string engine = "fast";
    std::string format = "text";
    std::string suite;
    std::string emit;
    std::string out;
    int s = 3;
    std::size_t count = 0;
    std::uint64_t seed = 1;
    std::string mu;
    int i = 0;
    int n = 0;
    std::string mult;
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        auto b = cur.find_first_not_of(' '), e = cur.find_last_not_of(' ');
        if (b == std::string::npos) throw ConfigError("empty entry in list '" + text + "'");
        out.push_back(cur.substr(b, e - b + 1));
    }
    return out;
}

inline Exponent parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw ConfigError("not an integer: '" + s + "'");
    return v;
}

inline std::vector<Exponent> parse_ints(const std::string& text) {
    std::vector<Exponent> out;
    for (const auto& t : split_list(text)) out.push_back(parse_int(t));
    return out;
}

// "5,1,3,2,4" or the compact form "51324".
inline std::vector<int> parse_order(const std::string& text, int rank) {
    std::vector<int> out;
    if (text.find(',') == std::string::npos && static_cast<int>(text.size()) == rank && rank <= 9) {
        for (char c : text) {
            if (c < '1' || c > '9') throw ConfigError("bad order '" + text + "'");
            out.push_back(c - '0');
        }
        return out;
    }
    for (auto v : parse_ints(text)) out.push_back(static_cast<int>(v));
    return out;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    const Exponent den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
    return Rational(parse_int(s.substr(0, slash)), den);
}

inline std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& t : split_list(text)) out.push_back(parse_rational(t));
    return out;
}

// "a..b"
inline std::pair<Exponent, Exponent> parse_range(const std::string& text) {
    auto dots = text.find("..", text.empty() ? 0 : 1);
    if (dots == std::string::npos) throw ConfigError("expected a range a..b, got '" + text + "'");
    auto lo = parse_int(text.substr(0, dots)), hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw ConfigError("empty range '" + text + "'");
    return {lo, hi};
}

inline std::string rational_str(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

template <class T, class F>
std::string join(const std::vector<T>& xs, const std::string& sep, F f) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? sep : "") + f(xs[k]);
    return s;
}

inline std::string ints_str(const std::vector<Exponent>& xs, const std::string& sep = ",") {
    return join(xs, sep, [](Exponent x) { return std::to_string(x); });
}

// "alpha1", "alpha1+2alpha2" in text output.
inline std::string root_text(const Root& r) {
    std::string s;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
        int c = r.coeffs[k];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        if (std::abs(c) != 1) s += std::to_string(std::abs(c));
        s += "α" + std::to_string(k + 1);
    }
    return s.empty() ? "0" : s;
}

inline std::string affine_text(const AffineRealRoot& r) {
    return "(" + root_text(r.finite) + "," + std::to_string(r.level) + ")";
}

inline json word_json(const LoopWord& w) {
    json a = json::array();
    for (const auto& l : w) a.push_back({l.node, l.exp});
    return a;
}

} // namespace detail

// Parsed system, policy and output settings shared by the subcommands.
class Session {
public:
    explicit Session(const RunConfig& cfg) : cfg_(cfg) {
        if (cfg.format == "text") format_ = Format::Text;
        else if (cfg.format == "json") format_ = Format::Json;
        else if (cfg.format == "tsv") format_ = Format::Tsv;
        else throw ConfigError("unknown format '" + cfg.format + "'");
    }

    const RootSystem& system() {
        if (!sys_) {
            if (cfg_.type.empty()) throw ConfigError("--type is required");
            sys_ = RootSystem::build(cfg_.type, cfg_.rank);
        }
        return *sys_;
    }

    const OrderPolicy& policy() {
        if (!policy_) {
            const int rank = system().rank();
            auto order = cfg_.order.empty() ? OrderPolicy::identity_order(rank) : detail::parse_order(cfg_.order, rank);
            if (!cfg_.slopes_pos.empty() || !cfg_.slopes_neg.empty()) {
                if (cfg_.slopes_pos.empty() || cfg_.slopes_neg.empty())
                    throw ConfigError("--slopes-pos and --slopes-neg go together");
                if (!cfg_.weights.empty()) throw ConfigError("give either --weights or slopes, not both");
                policy_ = OrderPolicy::generalized(order, detail::parse_rationals(cfg_.slopes_pos),
                                                   detail::parse_rationals(cfg_.slopes_neg));
            } else {
                std::vector<Exponent> c(static_cast<std::size_t>(rank), 1);
                if (!cfg_.weights.empty()) c = detail::parse_ints(cfg_.weights);
                policy_ = OrderPolicy::weighted(order, c);
            }
            if (policy_->rank() != rank) throw ConfigError("order has the wrong length");
        }
        return *policy_;
    }

    LeclercEngine& engine() {
        if (!engine_) engine_.emplace(system(), policy());
        return *engine_;
    }

    std::vector<std::size_t> roots() {
        const auto& sys = system();
        if (cfg_.root == "all") {
            std::vector<std::size_t> ids(sys.size());
            for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
            return ids;
        }
        if (cfg_.root == "theta") return {sys.theta_id()};
        if (cfg_.root.rfind("simple:", 0) == 0) {
            auto i = detail::parse_int(cfg_.root.substr(7));
            if (i < 1 || i > sys.rank()) throw ConfigError("simple root index out of range");
            return {sys.simple_id(static_cast<int>(i))};
        }
        std::vector<int> coeffs;
        if (cfg_.root.find(',') == std::string::npos && static_cast<int>(cfg_.root.size()) == sys.rank())
            for (char c : cfg_.root) coeffs.push_back(c - '0');
        else
            for (auto v : detail::parse_ints(cfg_.root)) coeffs.push_back(static_cast<int>(v));
        auto id = sys.index_of(coeffs);
        if (!id) throw ConfigError("'" + cfg_.root + "' is not a positive root of " + sys.type_label());
        return {*id};
    }

    EngineKind engine_kind() const {
        if (cfg_.engine == "fast") return EngineKind::Fast;
        if (cfg_.engine == "naive") return EngineKind::Naive;
        if (cfg_.engine == "oracle") return EngineKind::Oracle;
        throw ConfigError("unknown engine '" + cfg_.engine + "'");
    }

    Format format() const { return format_; }
    const RunConfig& config() const { return cfg_; }

    std::string order_text() {
        const auto& o = policy().index_order();
        if (o.size() <= 9) return detail::join(o, "", [](int v) { return std::to_string(v); });
        return detail::join(o, ",", [](int v) { return std::to_string(v); });
    }
    std::string weights_text() {
        const auto& p = policy();
        if (p.is_weighted()) return detail::ints_str(p.weights());
        const auto& g = std::get<Generalized>(p.mode());
        return "+" + detail::join(g.plus, ",", detail::rational_str) + ";-" +
               detail::join(g.minus, ",", detail::rational_str);
    }

    json header() {
        const auto& sys = system();
        const auto& p = policy();
        json j;
        j["type"] = sys.type_label();
        j["rank"] = sys.rank();
        j["order"] = p.index_order();
        if (p.is_weighted()) {
            j["weights"] = p.weights();
        } else {
            const auto& g = std::get<Generalized>(p.mode());
            std::vector<std::string> plus, minus;
            for (const auto& a : g.plus) plus.push_back(detail::rational_str(a));
            for (const auto& a : g.minus) minus.push_back(detail::rational_str(a));
            j["slopes"] = {{"plus", plus}, {"minus", minus}};
        }
        return j;
    }

    json word_record(std::size_t id, Exponent d, const LoopWord& w) {
        json j = header();
        j["alpha"] = system().root(id).coeffs;
        j["d"] = d;
        j["word"] = detail::word_json(w);
        return j;
    }

    std::string tsv_row(std::size_t id, Exponent d, const LoopWord& w) {
        return system().type_label() + "\t" + order_text() + "\t" + weights_text() + "\t" +
               detail::join(system().root(id).coeffs, ",", [](int v) { return std::to_string(v); }) + "\t" +
               std::to_string(d) + "\t" + render(w);
    }

private:
    RunConfig cfg_;
    Format format_ = Format::Text;
    std::optional<RootSystem> sys_;
    std::optional<OrderPolicy> policy_;
    std::optional<LeclercEngine> engine_;
};

inline int cmd_word(Session& s, std::ostream& out) {
    auto ids = s.roots();
    if (ids.size() != 1) throw ConfigError("word takes a single root");
    if (!s.config().d) throw ConfigError("--d is required");
    const Exponent d = *s.config().d;
    const LoopWord w = s.engine().compute(ids.front(), d, s.engine_kind(), s.config().s);
    switch (s.format()) {
    case Format::Text: out << render(w) << '\n'; break;
    case Format::Json: out << s.word_record(ids.front(), d, w).dump() << '\n'; break;
    case Format::Tsv: out << s.tsv_row(ids.front(), d, w) << '\n'; break;
    }
    return 0;
}

inline int cmd_table(Session& s, std::ostream& out) {
    auto ids = s.roots();
    auto& eng = s.engine();
    json rows = json::array();
    if (s.format() == Format::Tsv) out << "# type\torder\tweights\talpha\td\tword\n";
    for (auto id : ids) {
        Exponent lo = 0, hi = 0;
        if (!s.config().d_range.empty()) {
            std::tie(lo, hi) = detail::parse_range(s.config().d_range);
        } else if (s.config().d) {
            lo = hi = *s.config().d;
        } else if (s.policy().is_weighted()) {
            hi = eng.weighted_height(id) - 1;
        } else {
            throw ConfigError("--d or --d-range is required for generalized orders");
        }
        for (Exponent d = lo; d <= hi; ++d) {
            const LoopWord w = eng.compute(id, d, s.engine_kind());
            switch (s.format()) {
            case Format::Text:
                out << detail::root_text(s.system().root(id)) << '\t' << d << '\t' << render(w) << '\n';
                break;
            case Format::Json: rows.push_back(s.word_record(id, d, w)); break;
            case Format::Tsv: out << s.tsv_row(id, d, w) << '\n'; break;
            }
        }
    }
    if (s.format() == Format::Json) out << rows.dump(1) << '\n';
    return 0;
}

inline int cmd_verify(Session& s, std::ostream& out) {
    const auto& cfg = s.config();
    static const std::vector<std::string> suites{"tightness", "convexity", "periodicity", "monotonicity",
                                                 "oracle",    "weyl",      "typea",       "generalized"};
    if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end())
        throw CLI::ValidationError("--suite", "unknown suite '" + cfg.suite + "'");

    verify::Window win;
    if (!cfg.d_range.empty()) win.absolute = detail::parse_range(cfg.d_range);
    std::vector<verify::Report> reports;
    auto trace = [&](const std::string& line) { out << line << '\n'; };
    const bool text = s.format() == Format::Text;
    std::function<void(const std::string&)> t = text ? std::function<void(const std::string&)>(trace) : nullptr;

    if (cfg.suite == "typea") {
        reports.push_back(verify::typea_closed_forms(t));
        reports.push_back(verify::bcd_multisets("C", {1, 2, 6, 12}, t));
    } else {
        auto& e = s.engine();
        if (cfg.suite == "generalized" && s.policy().is_weighted())
            throw ConfigError("the generalized suite needs --slopes-pos/--slopes-neg");
        if (cfg.suite == "tightness") {
            reports.push_back(verify::tightness(e, win, t));
            reports.push_back(verify::finite_restriction(e, t));
        } else if (cfg.suite == "convexity") {
            reports.push_back(verify::convexity(e, win, t));
            reports.push_back(verify::minimality(e, win, t));
            reports.push_back(verify::several_summands(e, win, cfg.count ? cfg.count : 1000, cfg.seed, t));
        } else if (cfg.suite == "periodicity") {
            reports.push_back(verify::periodicity(e, win, t));
        } else if (cfg.suite == "monotonicity") {
            reports.push_back(verify::monotonicity(e, win, t));
            reports.push_back(verify::first_letter(e, win, t));
        } else if (cfg.suite == "oracle") {
            reports.push_back(verify::oracle_agreement(e, win, cfg.s, true, t));
        } else if (cfg.suite == "weyl") {
            verify::WeylOptions opt;
            if (cfg.count) opt.beta_count = cfg.count;
            opt.seed = cfg.seed;
            reports.push_back(verify::weyl(e, opt, t));
        } else if (cfg.suite == "generalized") {
            reports.push_back(verify::tightness(e, win, t));
            reports.push_back(verify::monotonicity(e, win, t));
            reports.push_back(verify::first_letter(e, win, t));
            reports.push_back(verify::oracle_agreement(e, win, cfg.s, false, t));
            reports.push_back(verify::marker_lift(e, 3, t));
            reports.push_back(verify::generalized_beta(e, cfg.count ? cfg.count : 60, t));
        }
    }

    bool ok = true;
    json j = json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        if (s.format() == Format::Json) {
            j.push_back({{"suite", r.suite}, {"checked", r.checked}, {"failures", r.failures}, {"pass", r.ok()}});
        } else {
            if (!text)
                for (const auto& f : r.failures) out << r.suite << "\tFAIL\t" << f << '\n';
            out << r.suite << (text ? ": " : "\t") << r.checked << (text ? " checked, " : "\t")
                << r.failures.size() << (text ? " failed" : "") << '\n';
        }
    }
    if (s.format() == Format::Json) out << j.dump(1) << '\n';
    else out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

inline int cmd_weyl(Session& s, std::ostream& out) {
    const auto& cfg = s.config();
    const auto& sys = s.system();
    const bool js = s.format() == Format::Json;
    auto roots_json = [](const std::vector<AffineRealRoot>& rs) {
        json a = json::array();
        for (const auto& r : rs) a.push_back({{"alpha", r.finite.coeffs}, {"d", r.level}});
        return a;
    };
    auto roots_line = [](const std::vector<AffineRealRoot>& rs) {
        return "{" + detail::join(rs, ",", detail::affine_text) + "}";
    };
    auto need_i_d = [&] {
        if (!cfg.i || !cfg.d) throw ConfigError("--i and --d are required");
    };

    if (cfg.emit == "p-constants") {
        need_i_d();
        auto p = p_constants(s.policy(), cfg.i, *cfg.d);
        if (js) out << json{{"i", cfg.i}, {"d", *cfg.d}, {"p", p}}.dump() << '\n';
        else out << "p = " << detail::ints_str(p) << '\n';
        return 0;
    }
    if (cfg.emit == "terminal-set") {
        std::vector<AffineRealRoot> set;
        if (!cfg.mu.empty()) {
            set = translation_terminal_set(sys, detail::parse_ints(cfg.mu));
        } else {
            need_i_d();
            set = terminal_segment(s.engine(), cfg.i, *cfg.d).word_level;
        }
        if (js) out << roots_json(set).dump() << '\n';
        else if (s.format() == Format::Tsv)
            for (const auto& r : set) out << detail::ints_str({r.finite.coeffs.begin(), r.finite.coeffs.end()}) << '\t' << r.level << '\n';
        else out << roots_line(set) << '\n';
        return 0;
    }
    if (cfg.emit == "beta") {
        const std::size_t count = cfg.count ? cfg.count : 20;
        const auto half = static_cast<Exponent>(count / 2);
        auto beta = beta_sequence(s.engine(), half - static_cast<Exponent>(count) + 1, half);
        json a = json::array();
        for (const auto& b : beta) {
            const LoopWord w = s.engine().fast(sys.index_of(b.root.finite.coeffs).value(), -b.root.level);
            if (js) a.push_back({{"k", b.k}, {"alpha", b.root.finite.coeffs}, {"d", b.root.level}, {"word", detail::word_json(w)}});
            else out << "beta_" << b.k << (s.format() == Format::Tsv ? "\t" : " = ") << detail::affine_text(b.root)
                     << (s.format() == Format::Tsv ? "\t" : "  ") << render(w) << '\n';
        }
        if (js) out << a.dump(1) << '\n';
        return 0;
    }
    if (cfg.emit == "reduced-word") {
        std::vector<AffineRealRoot> ordered;
        if (cfg.i || cfg.d) {
            need_i_d();
            ordered = terminal_segment(s.engine(), cfg.i, *cfg.d).word_level;
        } else if (!cfg.mu.empty()) {
            ordered = translation_terminal_set(sys, detail::parse_ints(cfg.mu));
            LoopRootOrder(s.engine()).sort(ordered);
        } else if (s.policy().is_weighted()) {
            ordered = translation_terminal_set(sys, s.policy().weights());
            LoopRootOrder(s.engine()).sort(ordered);
        } else {
            const std::size_t count = cfg.count ? cfg.count : 20;
            for (const auto& b : beta_sequence(s.engine(), -static_cast<Exponent>(count) + 1, 0)) ordered.push_back(b.root);
        }
        auto word = extract_and_verify(sys, ordered);
        if (js) out << json{{"word", word}, {"roots", roots_json(ordered)}}.dump() << '\n';
        else out << "s = " << detail::join(word, " ", [](int j) { return std::to_string(j); }) << '\n';
        return 0;
    }
    throw CLI::ValidationError("--emit", "unknown weyl output '" + cfg.emit + "'");
}

inline int cmd_typea(Session& s, std::ostream& out) {
    const auto& cfg = s.config();
    if (cfg.weights.empty()) throw ConfigError("--weights is required");
    const auto c = detail::parse_ints(cfg.weights);
    if (cfg.n && cfg.n != static_cast<int>(c.size())) throw ConfigError("--n does not match the number of weights");
    std::vector<int> m;
    if (!cfg.mult.empty())
        for (auto v : detail::parse_ints(cfg.mult)) m.push_back(static_cast<int>(v));
    const bool js = s.format() == Format::Json;

    if (cfg.emit == "table") {
        auto t = typea::build_table(c, m);
        auto flat = t.flat();
        if (js) out << json{{"weights", c}, {"sequence", flat}, {"columns", t.columns}}.dump() << '\n';
        else out << detail::join(flat, " ", [](int v) { return std::to_string(v); }) << "\n\n" << typea::render_table(t);
        return 0;
    }
    if (!cfg.d) throw ConfigError("--d is required");
    if (cfg.emit == "word") {
        if (!m.empty()) throw ConfigError("closed-form words are for type A (no --mult)");
        auto w = typea::closed_form_word(c, *cfg.d);
        if (js) out << json{{"weights", c}, {"d", *cfg.d}, {"word", detail::word_json(w)}}.dump() << '\n';
        else out << render(w) << '\n';
        return 0;
    }
    if (cfg.emit == "multiset") {
        if (m.empty()) m.assign(c.size(), 1);
        auto ms = typea::bcd_multiset(c, m, *cfg.d);
        if (js) out << json{{"weights", c}, {"mult", m}, {"d", *cfg.d}, {"letters", detail::word_json(ms.letters())}}.dump() << '\n';
        else out << "{" << detail::join(ms.letters(), ",", [](const LoopLetter& l) {
                       return std::to_string(l.node) + "^(" + std::to_string(l.exp) + ")";
                   }) << "}\n";
        return 0;
    }
    throw CLI::ValidationError("--emit", "unknown typea output '" + cfg.emit + "'");
}

// Exit codes: 0 success, 1 computation or invariant failure, 2 usage error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Standard Lyndon loop words for simple Lie algebras"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--type", cfg.type, "A, B, C, D (with --rank), E6, E7, E8, F4, G2");
        sub->add_option("--rank", cfg.rank);
        sub->add_option("--order", cfg.order, "increasing node order, e.g. 5,1,3,2,4 or 51324");
        sub->add_option("--weights", cfg.weights, "weights c_i in node order");
        sub->add_option("--slopes-pos", cfg.slopes_pos, "generalized order: slopes for d >= 0");
        sub->add_option("--slopes-neg", cfg.slopes_neg, "generalized order: slopes for d < 0");
        sub->add_option("--format", cfg.format, "text, json or tsv");
        sub->add_option("--out", cfg.out, "write output to a file");
    };

    auto* word = app.add_subcommand("word", "compute one standard Lyndon loop word");
    common(word);
    word->add_option("--root", cfg.root, "theta, simple:i or coefficients");
    word->add_option("--d", cfg.d);
    word->add_option("--engine", cfg.engine, "fast, naive or oracle");
    int word_window = -1;
    word->add_option("--s", word_window, "oracle window (default: smallest holding the degree)");

    auto* table = app.add_subcommand("table", "words over a range of exponents");
    common(table);
    table->add_option("--root", cfg.root, "theta, simple:i, coefficients or all");
    table->add_option("--d", cfg.d);
    table->add_option("--d-range", cfg.d_range, "a..b");
    table->add_option("--engine", cfg.engine);

    auto* ver = app.add_subcommand("verify", "run a property suite");
    common(ver);
    ver->add_option("--suite", cfg.suite)->required();
    ver->add_option("--d-range", cfg.d_range, "a..b (default [-f, 2f] per root)");
    ver->add_option("--s", cfg.s, "oracle window");
    ver->add_option("--count", cfg.count);
    ver->add_option("--seed", cfg.seed);

    auto* weyl = app.add_subcommand("weyl", "affine Weyl group data");
    common(weyl);
    weyl->add_option("--emit", cfg.emit, "beta, reduced-word, terminal-set or p-constants")->required();
    weyl->add_option("--i", cfg.i);
    weyl->add_option("--d", cfg.d);
    weyl->add_option("--mu", cfg.mu, "dominant coweight, comma separated");
    weyl->add_option("--count", cfg.count);

    auto* ta = app.add_subcommand("typea", "closed forms for divisible weight chains");
    ta->add_option("--n", cfg.n);
    ta->add_option("--weights", cfg.weights);
    ta->add_option("--mult", cfg.mult, "multiplicities m_i (B/C/D variant)");
    ta->add_option("--emit", cfg.emit, "table, word or multiset")->required();
    ta->add_option("--d", cfg.d);
    ta->add_option("--format", cfg.format);
    ta->add_option("--out", cfg.out);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            err << "error: cannot open " << cfg.out << '\n';
            return 2;
        }
    }
    std::ostream& sink = cfg.out.empty() ? out : file;
    if (word->parsed()) cfg.s = word_window;
    try {
        Session s(cfg);
        if (!ta->parsed()) s.policy();
        if (word->parsed()) {
            return cmd_word(s, sink);
        }
        if (table->parsed()) return cmd_table(s, sink);
        if (ver->parsed()) return cmd_verify(s, sink);
        if (weyl->parsed()) return cmd_weyl(s, sink);
        return cmd_typea(s, sink);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return 1;
    }
}

} // namespace loopwords::cli
