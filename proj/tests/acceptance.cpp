#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "lbr/cli.hpp"
#include "lbr/constructions.hpp"
#include "lbr/geometry.hpp"
#include "lbr/io.hpp"
#include "lbr/resolve.hpp"
#include "properties.hpp"

using namespace lbr;

namespace {

RationalFunction F(const std::string& s) { return parse_function(s); }
Rational Q(long p, long q = 1) { return make_rational(p, q); }
const Point origin{AlgNum(0L), AlgNum(0L)};

bool is_exact(const RealAlgebraic& r, const Rational& v) { return r.exact && *r.exact == v; }
bool is_interval(const ValueInterval& vs, const Rational& lo, const Rational& hi) {
    return is_exact(vs.lo, lo) && is_exact(vs.hi, hi);
}

struct Check {
    std::vector<std::string> failures;
    void operator()(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

using Criterion = std::function<void(Check&)>;

void prototype(Check& c) {
    RationalFunction f1 = F("x^2/(x^2+y^2)");
    GlobalVerdict v = is_locally_bounded(f1);
    c(v.bounded, "F1 bounded");
    c(v.indeterminacy.size() == 1 && same_point(v.indeterminacy.front(), origin), "indeterminacy is {(0,0)}");
    c(is_interval(value_set(f1, origin), Q(0), Q(1)), "value set [0,1]");
    auto r = cli::run(std::vector<std::string>{"valueset", "x^2/(x^2+y^2)", "--at", "(0,0)"});
    c(r.exit_code == 0 && r.document["interval"]["lo"] == 0 && r.document["interval"]["hi"] == 1, "CLI valueset [0,1]");
}

void unbounded_witness(Check& c) {
    auto r = cli::run(std::vector<std::string>{"bounded", "x/(x^2+y^2)"});
    c(r.exit_code == 0 && r.document["verdict"] == "unbounded", "verdict unbounded");
    if (!r.document.contains("witness") || r.document["witness"].is_null()) {
        c(false, "witness present");
        return;
    }
    std::string arc = r.document["witness"]["arc"];
    auto e = cli::run(std::vector<std::string>{"arc-eval", "x/(x^2+y^2)", arc});
    c(e.exit_code == 0 && e.document["infinite"] == true, "arc-eval reports an infinite limit");
    c(e.document["order"] == -1, "arc-eval order -1");
}

void counterexample_pair(Check& c) {
    RationalFunction f1 = F("x^2/(x^2+y^2)"), f2 = F("y^2/(x^2+y^2)");
    c(zero_set(f1 * f1 + f2 * f2).empty(), "Z(F1^2+F2^2) empty");
    c(contains(f1, origin).member, "origin in Z(F1)");
    c(contains(f2, origin).member, "origin in Z(F2)");
}

void lojasiewicz(Check& c) {
    LojaResult l = loja_exponent(F("x"), F("x^2+y^2"));
    c(l.status == SearchStatus::Found && l.exponent == 2, "N = 2");
    c(l.certificate && l.certificate->bounded, "bounded certificate for x^2/(x^2+y^2)");
    c(l.refutation && !l.refutation->bounded && l.refutation->witness &&
          compose(F("x/(x^2+y^2)"), l.refutation->witness->arc).infinite,
      "unbounded refutation at N = 1");
}

void radicals(Check& c) {
    RadicalResult a = radical_member(F("x"), {F("x^2+y^2")});
    c(a.status == SearchStatus::Found && a.exponent == 2, "member with N = 2");
    c(a.h && *a.h * F("x^2+y^2") == F("x^2") && a.g == F("x^2+y^2"), "x^2 = h (x^2+y^2)");
    RadicalResult b = radical_member(F("x^2+y^2"), {F("x")});
    c(b.status == SearchStatus::PreconditionFailed && b.counterexample, "not a member");
    if (b.counterexample)
        c(in_arc_zero_set(F("x"), *b.counterexample) && !in_arc_zero_set(F("x^2+y^2"), *b.counterexample),
          "counterexample arc validated");
}

void weak_nullstellensatz_witness(Check& c) {
    RationalFunction f5 = F("(x^2+y^4)/(x^2+y^2)"), f6 = F("(x^4+y^2)/(x^2+y^2)");
    NullstellensatzResult n = weak_nullstellensatz({f5, f6});
    c(n.unit && n.coefficients.size() == 2, "unit ideal");
    if (n.coefficients.size() != 2) return;
    c(n.coefficients[0] * f5 + n.coefficients[1] * f6 == F("1"), "sum a_i f_i = 1");
    for (const auto& a : n.coefficients) c(is_locally_bounded(a).bounded, "a_i bounded");
    c(is_interval(value_set(f5 * f5 + f6 * f6, origin), Q(1, 2), Q(1)), "value set [1/2,1]");
}

void regulous(Check& c) {
    RationalFunction f = F("x^4/(x^2+y^2)");
    c(is_interval(value_set(f, origin), Q(0), Q(0)), "value set [0,0]");
    c(is_regulous_at(f, origin).regulous, "regulous at the origin");
}

bool has_sqrt2_fiber(const ResolutionNode& node) {
    for (const auto& ch : node.children) {
        if (!ch.fiber.is_rational() && ch.fiber * ch.fiber == AlgNum(2L)) return true;
        if (has_sqrt2_fiber(*ch.node)) return true;
    }
    return false;
}

void algebraic_recursion(Check& c) {
    RationalFunction f = F("(y^2-2*x^2)^2/((y^2-2*x^2)^2+x^6)");
    LocalVerdict v = is_locally_bounded_at(f, origin);
    c(v.bounded && v.tree, "bounded");
    if (!v.tree) return;
    c(has_sqrt2_fiber(*v.tree), "fiber point with v^2 = 2");
    c(v.tree->max_tower_height() >= 1, "tower height >= 1");
    c(is_interval(value_set(*v.tree), Q(0), Q(1)), "value set [0,1]");
    ScanResult s = arc_family_scan(f, {Q(0), Q(0)});
    c(!s.found_infinite && !s.limits.empty(), "scan finite");
    c(s.min() && *s.min() >= 0 && s.max() && *s.max() <= 1, "scan limits in [0,1]");
    c(s.max() && *s.max() >= Q(99, 100), "scan max >= 0.99");
}

void property_suites(Check& c) {
    std::vector<props::Report> reports = {
        props::union_law(101, 100),           props::sum_of_squares_law(102, 100),
        props::ring_closure(103, 100),        props::arc_order_nonnegative(104, 100),
        props::blowup_invariance(105, 100),   props::scan_decision_agreement(106, 100),
        props::value_set_sampling(107, 100),
    };
    for (const auto& r : reports) {
        c(r.cases >= 100, r.name + ": at least 100 cases (" + std::to_string(r.cases) + ")");
        c(r.violations == 0, r.name + ": " + std::to_string(r.violations) + " violations");
        std::cout << "  " << r.name << ": " << r.cases << " cases, " << r.violations << " violations\n";
    }
}

void higher_dimension(Check& c) {
    RationalFunction seg = segment_function();
    for (const Rational& v : {Q(0), Q(1, 4), Q(1, 2), Q(1)}) {
        auto st = direction_arc(v);
        if (!st) {
            c(false, "direction arc for c = " + format_rational(v));
            continue;
        }
        st->push_back(PuiseuxPoly::constant(AlgNum(v)));
        Arc arc = make_arc(*st);
        c(in_arc_zero_set(seg, arc) && same_point(limit_point(arc), rational_point({Q(0), Q(0), v})),
          "(0,0," + format_rational(v) + ") certified");
    }
    for (const auto& pt : std::vector<std::vector<Rational>>{{Q(0), Q(0), Q(2)}, {Q(1), Q(0), Q(0)}}) {
        ScanResult s = arc_family_scan(seg, pt);
        bool zero = std::find(s.limits.begin(), s.limits.end(), Q(0)) != s.limits.end();
        c(!s.found_infinite && !zero && s.min() && *s.min() >= Q(1, 4), "no zero near the excluded point");
    }

    std::mt19937 rng(2024);
    auto rnd = [&] {
        return Q(std::uniform_int_distribution<long>(-12, 12)(rng), std::uniform_int_distribution<long>(1, 6)(rng));
    };
    struct Set {
        std::vector<Poly> generators;
        std::size_t arity;
        std::function<bool(const std::vector<Rational>&)> member;
    };
    std::vector<Set> sets = {
        {{parse_polynomial("x", 1)}, 1, [](const std::vector<Rational>& p) { return p[0] >= 0; }},
        {{parse_polynomial("1-x^2-y^2", 2)}, 2,
         [](const std::vector<Rational>& p) { return p[0] * p[0] + p[1] * p[1] <= 1; }},
    };
    for (const auto& s : sets) {
        EncodedSet e = encode_closed_sa_set(s.generators);
        int members = 0, others = 0;
        for (int k = 0; k < 40; ++k) {
            std::vector<Rational> x;
            for (std::size_t i = 0; i < s.arity; ++i) x.push_back(rnd() / (s.arity == 1 ? 1 : 6));
            std::vector<Rational> image = e.embed(x);
            std::vector<Rational> back;
            for (std::size_t i : e.projection) back.push_back(image[i]);
            c(back == x, "projection of the embedding is the identity");
            auto arc = membership_arc(e, x);
            if (s.member(x)) {
                ++members;
                c(arc && in_arc_zero_set(e.h, *arc) && same_point(limit_point(*arc), rational_point(image)),
                  "membership certificate");
            } else {
                ++others;
                c(!arc, "no certificate outside the set");
            }
        }
        c(members > 0 && others > 0, "both members and non-members sampled");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"prototypical example x^2/(x^2+y^2)", prototype},
        {"unboundedness with re-evaluated witness", unbounded_witness},
        {"counterexample pair Z(F1^2+F2^2)", counterexample_pair},
        {"Lojasiewicz exponent loja(x, x^2+y^2) = 2", lojasiewicz},
        {"radical membership both ways", radicals},
        {"weak Nullstellensatz witness for <F5, F6>", weak_nullstellensatz_witness},
        {"regulous check x^4/(x^2+y^2)", regulous},
        {"algebraic recursion (y^2-2x^2)^2/((y^2-2x^2)^2+x^6)", algebraic_recursion},
        {"property suites", property_suites},
        {"higher-dimension fixtures and encoder", higher_dimension},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = check.failures.empty();
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << "\n";
        for (const auto& f : check.failures) std::cout << "  failed: " << f << "\n";
        std::cout.flush();
    }
    return failed == 0 ? 0 : 1;
}
