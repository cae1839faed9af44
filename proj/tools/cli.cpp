#include "lbr/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lbr/constructions.hpp"
#include "lbr/geometry.hpp"
#include "lbr/io.hpp"
#include "lbr/resolve.hpp"

namespace lbr::cli {

namespace {

// ---------------------------------------------------------------------------
// JSON encoding

json num(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return format_rational(r);
}

json real(const RealAlgebraic& r) {
    if (r.is_rational()) return num(*r.exact);
    json coeffs = json::array();
    for (const auto& c : r.poly.coeffs()) coeffs.push_back(num(c));
    return {{"minpoly", coeffs}, {"interval", {num(r.lo), num(r.hi)}}, {"approx", r.approx(20)}};
}

json alg(const AlgNum& a) { return a.is_rational() ? num(a.rational()) : real(to_real_algebraic(a)); }

json point(const Point& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(alg(c));
    return out;
}

json points(const std::vector<Point>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(point(p));
    return out;
}

json interval(const ValueInterval& v) {
    return {{"lo", real(v.lo)},
            {"hi", real(v.hi)},
            {"lo_attained", v.lo_attained},
            {"hi_attained", v.hi_attained},
            {"text", "[" + format_real_algebraic(v.lo) + ", " + format_real_algebraic(v.hi) + "]"}};
}

json arc_limit(const ArcLimit& l) {
    json out;
    out["order"] = l.order ? num(*l.order) : json("+inf");
    out["infinite"] = l.infinite;
    out["limit"] = l.infinite ? json(nullptr) : alg(l.limit);
    return out;
}

json arc_json(const Arc& a, const RationalFunction& f) {
    json out = {{"arc", format_arc(a)}};
    out.update(arc_limit(compose(f, a)));
    return out;
}

json witness(const Witness& w) {
    json out = {{"arc", format_arc(w.arc)}};
    out.update(arc_limit(w.limit));
    return out;
}

json pulled(const PulledBack& p, ChartKind chart) {
    std::vector<std::string> names = {"u", "v"};
    return {{"chart", to_string(chart)},
            {"a_order", p.a_order},
            {"b_order", p.b_order},
            {"p_tilde", format_alg_poly(p.p_tilde, names)},
            {"q_tilde", format_alg_poly(p.q_tilde, names)}};
}

json tree(const ResolutionNode& n) {
    json out = {{"center", point(n.center)}, {"depth", n.depth}, {"regular", n.regular}};
    if (n.regular) {
        out["value"] = alg(n.value);
        return out;
    }
    out["chart_a"] = pulled(n.chart_a, ChartKind::A);
    out["chart_b"] = pulled(n.chart_b, ChartKind::B);
    json kids = json::array();
    for (const auto& c : n.children)
        kids.push_back({{"chart", to_string(c.chart)}, {"fiber", alg(c.fiber)}, {"node", tree(*c.node)}});
    out["children"] = kids;
    return out;
}

json tree_summary(const ResolutionNode& n) {
    return {{"size", n.size()}, {"height", n.height()}, {"max_tower_height", n.max_tower_height()}};
}

json membership(const Membership& m) {
    json out = {{"member", m.member}, {"regular", m.regular}};
    if (m.regular) out["value"] = alg(m.value);
    if (m.interval) out["interval"] = interval(*m.interval);
    return out;
}

json zero_points(const std::vector<ZeroPoint>& zs) {
    json out = json::array();
    for (const auto& z : zs) {
        json e = {{"point", point(z.point)}};
        e.update(membership(z.certificate));
        out.push_back(e);
    }
    return out;
}

json global_verdict(const GlobalVerdict& v) {
    json out = {{"verdict", v.bounded ? "bounded" : "unbounded"}, {"indet", points(v.indeterminacy)}};
    out["curve_witness"] = v.curve_witness ? point(*v.curve_witness) : json(nullptr);
    json certs = json::array();
    for (const auto& c : v.certificates) {
        json e = {{"point", point(c.point)}};
        e.update(tree_summary(*c.tree));
        e["tree"] = tree(*c.tree);
        certs.push_back(e);
    }
    out["certificates"] = certs;
    out["witness"] = v.witness ? witness(*v.witness) : json(nullptr);
    return out;
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::PreconditionFailed: return "precondition_failed";
        case SearchStatus::Exhausted: return "exhausted";
    }
    return "exhausted";
}

// ---------------------------------------------------------------------------
// Commands

struct Context {
    const Query& q;
    ResolveOptions resolve;

    explicit Context(const Query& query) : q(query) { resolve.max_depth = query.options.max_depth; }

    void need(std::size_t lo, std::size_t hi = 0) const {
        std::size_t n = q.arguments.size();
        if (n < lo || (hi && n > hi)) {
            std::string want = std::to_string(lo) + (hi == lo ? "" : hi ? "-" + std::to_string(hi) : " or more");
            throw Error(ErrorKind::Precondition,
                        "command '" + q.command + "' expects " + want + " argument(s), got " + std::to_string(n));
        }
    }
    RationalFunction function(std::size_t i, std::size_t arity = 0) const {
        return parse_function(q.arguments[i], arity ? arity : q.options.arity);
    }
    std::vector<RationalFunction> functions(std::size_t from) const {
        std::vector<RationalFunction> out;
        std::size_t arity = q.options.arity;
        for (std::size_t i = from; i < q.arguments.size(); ++i) arity = std::max(arity, function(i).arity());
        for (std::size_t i = from; i < q.arguments.size(); ++i) out.push_back(function(i, arity));
        return out;
    }
    ScanBudget budget() const {
        ScanBudget b;
        b.max_exponent_numerator = q.options.scan_exp;
        b.max_exponent_denominator = q.options.scan_den;
        b.coefficients = q.options.scan_coeffs;
        return b;
    }
    json scan(const RationalFunction& f, const Point& pt, const std::optional<ValueInterval>& within) const {
        if (!is_rational_point(pt)) return {{"skipped", "point is not rational"}};
        ScanResult r = arc_family_scan(f, to_rationals(pt), budget());
        json out = {{"evaluated", r.evaluated}, {"skipped", r.skipped}, {"found_infinite", r.found_infinite}};
        out["min"] = r.min() ? num(*r.min()) : json(nullptr);
        out["max"] = r.max() ? num(*r.max()) : json(nullptr);
        if (r.infinite_example) out["infinite_example"] = format_arc(*r.infinite_example);
        if (within) {
            bool inside = true;
            for (const auto& l : r.limits) inside = inside && within->contains(RealAlgebraic(l));
            out["within_value_set"] = inside && !r.found_infinite;
        }
        return out;
    }
};

json cmd_bounded(const Context& c) {
    c.need(1, 1);
    RationalFunction f = c.function(0);
    GlobalVerdict v = is_locally_bounded(f, c.resolve);
    json out = {{"function", format_function(f)}};
    out.update(global_verdict(v));
    if (c.q.options.scan) {
        json scans = json::array();
        for (const auto& p : v.indeterminacy) scans.push_back({{"point", point(p)}, {"scan", c.scan(f, p, std::nullopt)}});
        out["scans"] = scans;
    }
    return out;
}

json cmd_indet(const Context& c) {
    c.need(1, 1);
    RationalFunction f = c.function(0);
    IndetReport r = indeterminacy_points(f);
    json out = {{"function", format_function(f)}, {"indet", points(r.points)}, {"curve", r.real_curve_witness.has_value()}};
    out["curve_witness"] = r.real_curve_witness ? point(*r.real_curve_witness) : json(nullptr);
    return out;
}

json cmd_valueset(const Context& c) {
    c.need(1, 1);
    RationalFunction f = c.function(0);
    std::vector<Point> at;
    if (c.q.options.at) {
        TowerPtr ctx;
        at.push_back(parse_point(*c.q.options.at, ctx));
    } else {
        at = indeterminacy_points(f).points;
    }
    json sets = json::array();
    for (const auto& p : at) {
        ValueInterval v = value_set(f, p, c.resolve);
        json e = {{"point", point(p)}, {"interval", interval(v)}};
        if (c.q.options.scan) e["scan"] = c.scan(f, p, v);
        sets.push_back(e);
    }
    json out = {{"function", format_function(f)}};
    if (c.q.options.at && sets.size() == 1) {
        out["point"] = sets[0]["point"];
        out["interval"] = sets[0]["interval"];
        if (c.q.options.scan) out["scan"] = sets[0]["scan"];
    } else {
        out["value_sets"] = sets;
    }
    return out;
}

json cmd_zeroset(const Context& c) {
    c.need(1);
    std::vector<RationalFunction> fs = c.functions(0);
    ZeroSetDescription z = fs.size() == 1 ? zero_set(fs[0], c.resolve) : zero_set_ideal(fs, c.resolve);
    json names = json::array();
    for (const auto& f : fs) names.push_back(format_function(f));
    json out = {{"functions", names}, {"empty", z.empty()}};
    out["curve_part"] = z.curve_part ? json(format_poly(*z.curve_part)) : json(nullptr);
    out["curve_sample"] = z.curve_sample ? point(*z.curve_sample) : json(nullptr);
    out["isolated_points"] = zero_points(z.isolated_points);
    out["excluded_indet_points"] = zero_points(z.excluded_indet_points);
    return out;
}

json cmd_contains(const Context& c) {
    c.need(2, 2);
    RationalFunction f = c.function(0);
    TowerPtr ctx;
    Point p = parse_point(c.q.arguments[1], ctx);
    json out = {{"function", format_function(f)}, {"point", point(p)}};
    out.update(membership(contains(f, p, c.resolve)));
    return out;
}

json cmd_included(const Context& c) {
    c.need(2, 2);
    std::vector<RationalFunction> fs = c.functions(0);
    Inclusion r = zero_set_included(fs[0], fs[1], c.resolve);
    json out = {{"g", format_function(fs[0])}, {"f", format_function(fs[1])}, {"included", r.included}};
    if (r.counterexample) {
        json ce = {{"arc", format_arc(*r.counterexample)}};
        ce["g"] = arc_limit(compose(fs[0], *r.counterexample));
        ce["f"] = arc_limit(compose(fs[1], *r.counterexample));
        out["counterexample"] = ce;
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

json loja_json(const LojaResult& l, const RationalFunction& f, const RationalFunction& g) {
    json out = {{"status", status_name(l.status)}};
    out["N"] = l.status == SearchStatus::Found ? json(l.exponent) : json(nullptr);
    if (l.certificate) {
        json cert = {{"function", format_function(pow(f, static_cast<int>(l.exponent)) / g)}};
        cert.update(global_verdict(*l.certificate));
        out["certificate"] = cert;
    }
    if (l.refutation) {
        json ref = {{"function", format_function(pow(f, static_cast<int>(l.exponent) - 1) / g)}};
        ref.update(global_verdict(*l.refutation));
        out["refutation"] = ref;
    }
    if (l.counterexample) out["counterexample"] = arc_json(*l.counterexample, f);
    return out;
}

json cmd_loja(const Context& c) {
    c.need(2, 2);
    std::vector<RationalFunction> fs = c.functions(0);
    LojaResult l = loja_exponent(fs[0], fs[1], c.q.options.n_max, c.resolve);
    json out = {{"f", format_function(fs[0])}, {"g", format_function(fs[1])}, {"n_max", c.q.options.n_max}};
    out.update(loja_json(l, fs[0], fs[1]));
    return out;
}

json cmd_radical(const Context& c) {
    c.need(2);
    std::vector<RationalFunction> fs = c.functions(0);
    std::vector<RationalFunction> gens(fs.begin() + 1, fs.end());
    RadicalResult r = radical_member(fs[0], gens, c.q.options.n_max, c.resolve);
    json names = json::array();
    for (const auto& g : gens) names.push_back(format_function(g));
    const char* verdict = r.status == SearchStatus::Found              ? "member"
                          : r.status == SearchStatus::PreconditionFailed ? "not_member"
                                                                         : "exhausted";
    json out = {{"f", format_function(fs[0])}, {"ideal", names}, {"verdict", verdict}, {"g", format_function(r.g)}};
    out["N"] = r.status == SearchStatus::Found ? json(r.exponent) : json(nullptr);
    if (r.h) {
        out["h"] = format_function(*r.h);
        out["identity"] = "f^" + std::to_string(r.exponent) + " = h * g";
        out["identity_verified"] = (*r.h) * r.g == pow(fs[0], static_cast<int>(r.exponent));
    }
    if (r.counterexample) {
        json ce = {{"arc", format_arc(*r.counterexample)}};
        ce["f"] = arc_limit(compose(fs[0], *r.counterexample));
        ce["g"] = arc_limit(compose(r.g, *r.counterexample));
        out["counterexample"] = ce;
    }
    if (r.search && r.search->certificate) {
        json cert = {{"function", format_function(pow(fs[0], static_cast<int>(r.exponent)) / r.g)}};
        cert.update(global_verdict(*r.search->certificate));
        out["certificate"] = cert;
    }
    return out;
}

json cmd_weak_nss(const Context& c) {
    c.need(1);
    std::vector<RationalFunction> fs = c.functions(0);
    NullstellensatzResult r = weak_nullstellensatz(fs, c.resolve);
    json names = json::array();
    for (const auto& f : fs) names.push_back(format_function(f));
    json out = {{"ideal", names}, {"verdict", r.unit ? "unit_ideal" : "proper"}, {"sum_of_squares", format_function(r.sum_of_squares)}};
    if (r.unit) {
        json coeffs = json::array();
        RationalFunction total = RationalFunction::constant(fs[0].arity(), Rational(0));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            GlobalVerdict v = is_locally_bounded(r.coefficients[i], c.resolve);
            coeffs.push_back({{"a", format_function(r.coefficients[i])}, {"bounded", v.bounded}});
            total = total + r.coefficients[i] * fs[i];
        }
        out["coefficients"] = coeffs;
        out["identity_verified"] = total == RationalFunction::constant(fs[0].arity(), Rational(1));
        json sets = json::array();
        for (const auto& p : indeterminacy_points(r.sum_of_squares).points)
            sets.push_back({{"point", point(p)}, {"interval", interval(value_set(r.sum_of_squares, p, c.resolve))}});
        out["sum_of_squares_value_sets"] = sets;
    }
    if (r.common_zero) {
        json z = {{"point", point(r.common_zero->point)}};
        z.update(membership(r.common_zero->certificate));
        out["common_zero"] = z;
    }
    return out;
}

json cmd_invertible(const Context& c) {
    c.need(1, 1);
    RationalFunction f = c.function(0);
    InvertibilityResult r = is_invertible(f, c.resolve);
    json out = {{"function", format_function(f)}, {"invertible", r.invertible}};
    out["inverse"] = r.inverse ? json(format_function(*r.inverse)) : json(nullptr);
    out["zeros"] = zero_points(r.zeros);
    return out;
}

json cmd_regulous(const Context& c) {
    c.need(1, 1);
    if (!c.q.options.at) throw Error(ErrorKind::Precondition, "regulous needs --at");
    RationalFunction f = c.function(0);
    TowerPtr ctx;
    Point p = parse_point(*c.q.options.at, ctx);
    RegulousResult r = is_regulous_at(f, p, c.resolve);
    return {{"function", format_function(f)}, {"point", point(p)}, {"regulous", r.regulous}, {"interval", interval(r.interval)}};
}

json cmd_arc_eval(const Context& c) {
    c.need(2, 2);
    TowerPtr ctx;
    Arc a = parse_arc(c.q.arguments[1], ctx);
    RationalFunction f = c.function(0, std::max(c.q.options.arity, a.dimension()));
    if (f.arity() != a.dimension())
        throw Error(ErrorKind::Precondition, "arc dimension " + std::to_string(a.dimension()) +
                                                 " does not match the function arity " + std::to_string(f.arity()));
    json out = {{"function", format_function(f)}, {"arc", format_arc(a)}, {"limit_point", point(limit_point(a))}};
    out.update(arc_limit(compose(f, a)));
    return out;
}

json cmd_encode(const Context& c) {
    c.need(1);
    std::size_t arity = c.q.options.arity;
    for (const auto& s : c.q.arguments) arity = std::max(arity, parse_polynomial(s, c.q.options.arity).arity());
    std::vector<Poly> gens;
    for (const auto& s : c.q.arguments) gens.push_back(parse_polynomial(s, arity));
    EncodedSet e = encode_closed_sa_set(gens);
    std::vector<std::string> in_names = default_variable_names(arity);
    in_names.resize(arity);
    json g = json::array(), emb = json::array(), proj = json::array();
    for (const auto& p : gens) g.push_back(format_poly(p, in_names));
    for (const auto& p : e.embedding) emb.push_back(format_poly(p, in_names));
    for (auto i : e.projection) proj.push_back(i + 1);
    json out = {{"generators", g},
                {"input_arity", arity},
                {"ambient_arity", e.ambient_arity()},
                {"variables", e.variable_names()},
                {"h", format_function(e.h, e.variable_names())},
                {"embedding", emb},
                {"projection", proj}};
    if (c.q.options.at) {
        TowerPtr ctx;
        Point p = parse_point(*c.q.options.at, ctx);
        if (!is_rational_point(p) || p.size() != arity)
            throw Error(ErrorKind::Precondition, "--at must be a rational point of the input space");
        auto x = to_rationals(p);
        json cert = {{"point", point(p)}};
        json img = json::array();
        for (const auto& v : e.embed(x)) img.push_back(num(v));
        cert["embedding"] = img;
        auto arc = membership_arc(e, x);
        cert["member"] = arc.has_value();
        cert["certificate"] = arc ? arc_json(*arc, e.h) : json(nullptr);
        out["membership"] = cert;
    }
    return out;
}

json cmd_gallery(const Context& c) {
    c.need(0, 1);
    json out = json::array();
    for (const auto& g : gallery()) {
        if (!c.q.arguments.empty() && g.name != c.q.arguments[0]) continue;
        out.push_back({{"name", g.name}, {"arity", g.f.arity()}, {"formula", format_function(g.f)}, {"description", g.description}});
    }
    if (!c.q.arguments.empty() && out.empty()) gallery_entry(c.q.arguments[0]);
    return {{"entries", out}};
}

using Handler = json (*)(const Context&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> table = {
        {"bounded", cmd_bounded},   {"indet", cmd_indet},       {"valueset", cmd_valueset},
        {"zeroset", cmd_zeroset},   {"contains", cmd_contains}, {"included", cmd_included},
        {"loja", cmd_loja},         {"radical", cmd_radical},   {"weak-nss", cmd_weak_nss},
        {"invertible", cmd_invertible}, {"regulous", cmd_regulous}, {"arc-eval", cmd_arc_eval},
        {"encode", cmd_encode},     {"gallery", cmd_gallery},
    };
    return table;
}

int result_exit_code(const json& doc) {
    if (doc.contains("status")) {
        if (doc["status"] == "exhausted") return 4;
        if (doc["status"] == "precondition_failed") return 3;
    }
    if (doc.contains("verdict") && doc["verdict"] == "exhausted") return 4;
    return 0;
}

// ---------------------------------------------------------------------------
// Argument parsing

Rational parse_rational_word(const std::string& s) {
    std::vector<Rational> r = to_rationals(parse_point("(" + s + ")"));
    return r.front();
}

struct Extra {
    std::optional<std::string> batch;
    unsigned jobs = 0;
    std::string format = "text";
};

void configure(CLI::App& app, Query& q, std::string& format, Extra* extra) {
    app.add_option("command", q.command, "Command to run")->required(extra == nullptr);
    app.add_option("arguments", q.arguments, "Expressions, points or arcs");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-depth", q.options.max_depth, "Resolution depth limit");
    app.add_option("--n-max", q.options.n_max, "Largest exponent tried by loja and radical");
    app.add_option("--scan-exp", q.options.scan_exp, "Largest exponent numerator in the scan family");
    app.add_option("--scan-den", q.options.scan_den, "Largest exponent denominator in the scan family");
    app.add_option_function<std::string>(
        "--scan-coeffs",
        [&q](const std::string& s) {
            q.options.scan_coeffs.clear();
            std::stringstream in(s);
            std::string word;
            while (std::getline(in, word, ',')) q.options.scan_coeffs.push_back(parse_rational_word(word));
        },
        "Comma-separated rational coefficients of the scan family");
    app.add_flag("--scan", q.options.scan, "Attach arc-family scan evidence");
    app.add_option("--seed", q.options.seed, "Seed for randomized sampling");
    app.add_option_function<std::string>("--at", [&q](const std::string& s) { q.options.at = s; }, "Point");
    app.add_option("--arity", q.options.arity, "Force the number of variables");
    app.add_flag("--timing", q.options.timing, "Report wall-clock time");
    if (extra) {
        app.add_option_function<std::string>("--batch", [extra](const std::string& s) { extra->batch = s; },
                                             "File with one query per line");
        app.add_option("--jobs", extra->jobs, "Concurrent batch workers");
    }
}

Query parse_words(const std::vector<std::string>& words, Extra* extra) {
    Query q;
    std::string format = "text";
    CLI::App app{"Locally bounded rational functions"};
    configure(app, q, format, extra);
    std::vector<std::string> rev(words.rbegin(), words.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw SyntaxError(0, std::string("usage: ") + e.what());
    }
    q.options.format = format == "json" ? Format::Json : Format::Text;
    if (extra) extra->format = format;
    if (!q.command.empty()) {
        const auto& cs = commands();
        if (std::find(cs.begin(), cs.end(), q.command) == cs.end())
            throw SyntaxError(0, "usage: unknown command '" + q.command + "'");
    }
    return q;
}

json error_document(const std::string& command, const Error& e) {
    json err = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) err["offset"] = s->offset();
    return {{"command", command}, {"error", err}};
}

// ---------------------------------------------------------------------------
// Text rendering

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool is_algebraic(const json& j) { return j.is_object() && j.contains("minpoly") && j.contains("approx"); }

std::string inline_text(const json& j) {
    if (is_scalar(j)) return scalar_text(j);
    if (is_algebraic(j)) return "~" + j["approx"].get<std::string>();
    if (j.is_array()) {
        std::string out = "(";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_text(j[i]);
        return out + ")";
    }
    return j.dump();
}

bool is_inline(const json& j) {
    if (is_scalar(j) || is_algebraic(j)) return true;
    if (j.is_array()) {
        for (const auto& e : j)
            if (!is_scalar(e) && !is_algebraic(e)) return false;
        return true;
    }
    return false;
}

void render(const json& j, int indent, std::ostringstream& out) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        std::size_t width = 0;
        for (const auto& [k, v] : j.items())
            if (is_inline(v)) width = std::max(width, k.size());
        for (const auto& [k, v] : j.items()) {
            if (is_inline(v)) {
                out << pad << k << std::string(width - k.size(), ' ') << " : " << inline_text(v) << "\n";
            } else if (v.is_array() && v.empty()) {
                out << pad << k << " : (none)\n";
            } else {
                out << pad << k << ":\n";
                render(v, indent + 2, out);
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (is_inline(j[i])) {
                out << pad << "- " << inline_text(j[i]) << "\n";
            } else {
                out << pad << "[" << i << "]\n";
                render(j[i], indent + 2, out);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

std::string render_response(const Response& r, Format f) {
    if (f == Format::Json) return r.document.dump(2) + "\n";
    return render_text(r.document);
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : handlers()) out.push_back(entry.first);
        return out;
    }();
    return names;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Syntax: return 2;
        case ErrorKind::DepthExceeded:
        case ErrorKind::Exhausted: return 4;
        case ErrorKind::InternalInvariant: return 5;
        default: return 3;
    }
}

Query parse_query(const std::vector<std::string>& words) { return parse_words(words, nullptr); }

Response run(const Query& query) {
    auto start = std::chrono::steady_clock::now();
    Response r;
    try {
        Context c(query);
        auto it = std::find_if(handlers().begin(), handlers().end(), [&](const auto& h) { return h.first == query.command; });
        if (it == handlers().end()) throw SyntaxError(0, "usage: unknown command '" + query.command + "'");
        r.document = {{"command", query.command}};
        r.document.update(it->second(c));
        r.exit_code = result_exit_code(r.document);
    } catch (const Error& e) {
        r.document = error_document(query.command, e);
        r.exit_code = exit_code(e.kind());
    } catch (const std::exception& e) {
        r.document = {{"command", query.command}, {"error", {{"kind", "InternalInvariant"}, {"message", e.what()}}}};
        r.exit_code = 5;
    }
    if (query.options.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        r.document["timing_ms"] = ms;
    }
    return r;
}

Response run(const std::vector<std::string>& words) {
    Query q;
    try {
        q = parse_query(words);
    } catch (const Error& e) {
        return {error_document(words.empty() ? "" : words.front(), e), exit_code(e.kind())};
    }
    return run(q);
}

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool have = false;
    char quote = 0;
    for (char ch : line) {
        if (quote) {
            if (ch == quote)
                quote = 0;
            else
                cur += ch;
        } else if (ch == '"' || ch == '\'') {
            quote = ch;
            have = true;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (have) out.push_back(cur);
            cur.clear();
            have = false;
        } else {
            cur += ch;
            have = true;
        }
    }
    if (quote) throw SyntaxError(line.size() + 1, "unterminated quote");
    if (have) out.push_back(cur);
    return out;
}

std::vector<Response> run_batch(const std::vector<std::string>& lines, unsigned workers) {
    std::vector<std::size_t> jobs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto first = lines[i].find_first_not_of(" \t\r");
        if (first != std::string::npos && lines[i][first] != '#') jobs.push_back(i);
    }
    std::vector<Response> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            std::size_t line = jobs[k];
            try {
                out[k] = run(split_words(lines[line]));
            } catch (const Error& e) {
                out[k] = {error_document("", e), exit_code(e.kind())};
            }
            out[k].document["line"] = line + 1;
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

std::string render_text(const json& document) {
    std::ostringstream out;
    render(document, 0, out);
    return out.str();
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> words(argv + 1, argv + argc);
    Extra extra;
    Query q;
    try {
        q = parse_words(words, &extra);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e.kind());
    }
    Format format = q.options.format;
    if (extra.batch) {
        std::ifstream in(*extra.batch);
        if (!in) {
            std::cerr << "cannot open batch file '" << *extra.batch << "'\n";
            return 3;
        }
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        unsigned workers = extra.jobs ? extra.jobs : std::max(1u, std::thread::hardware_concurrency());
        std::vector<Response> rs = run_batch(lines, workers);
        int code = 0;
        json all = json::array();
        for (const auto& r : rs) {
            code = std::max(code, r.exit_code);
            if (format == Format::Json)
                all.push_back(r.document);
            else
                std::cout << render_text(r.document) << "\n";
        }
        if (format == Format::Json) std::cout << all.dump(2) << "\n";
        return code;
    }
    if (q.command.empty()) {
        std::cerr << "usage: lbr <command> [arguments] [options]; commands:";
        for (const auto& c : commands()) std::cerr << " " << c;
        std::cerr << "\n";
        return 2;
    }
    Response r = run(q);
    std::cout << render_response(r, format);
    return r.exit_code;
}

}  // namespace lbr::cli
