#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "lbr/arcs.hpp"
#include "lbr/io.hpp"

using namespace lbr;

namespace {

RationalFunction F(const std::string& s) { return parse_function(s); }
Arc A(const std::string& s) { return parse_arc(s); }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInvariant;
}

double approx(const AlgNum& a) { return std::stod(to_real_algebraic(a).approx(17)); }

// Oracle: f(x0 + a t^e, y0 + b t^e') sampled at tiny t; the leading behaviour decides order sign.
long double sample(const RationalFunction& f, const Arc& arc, long double t) {
    std::vector<long double> x;
    for (const auto& e : arc.entries()) {
        long double v = 0;
        for (const auto& term : e.terms())
            v += approx(term.coefficient) * std::pow(t, e.exponent(term).get_d());
        x.push_back(v);
    }
    auto ev = [&](const Poly& p) {
        long double s = 0;
        for (const auto& [ex, c] : p.terms()) {
            long double m = c.get_d();
            for (std::size_t i = 0; i < ex.size(); ++i) m *= std::pow(x[i], ex[i]);
            s += m;
        }
        return s;
    };
    return ev(f.num()) / ev(f.den());
}

}  // namespace

TEST_CASE("make_arc validation") {
    Arc a = A("(t, t^2)");
    CHECK(same_point(limit_point(a), rational_point({0, 0})));
    CHECK(kind_of([] { A("(2, 5)"); }) == ErrorKind::ConstantArc);
    CHECK(kind_of([] { A("(1/t, t)"); }) == ErrorKind::UnboundedArc);
    Arc b = A("(t^(1/2), 1 - t)");
    CHECK(b.ramification() == 2);
    CHECK(same_point(limit_point(b), rational_point({0, 1})));
    CHECK(same_point(limit_point(A("(t, 1 + t)")), rational_point({0, 1})));
    CHECK(same_point(limit_point(A("(t^2, t^3)")), rational_point({0, 0})));
    CHECK(same_point(limit_point(A("(1/2 + t, 3)")), rational_point({make_rational(1, 2), 3})));
}

TEST_CASE("compose") {
    ArcLimit l1 = compose(F("x^2/(x^2+y^2)"), A("(t, t)"));
    CHECK(*l1.order == 0);
    CHECK(l1.limit == AlgNum(make_rational(1, 2)));
    ArcLimit l2 = compose(F("x/(x^2+y^2)"), A("(t, t^2)"));
    CHECK(*l2.order == -1);
    CHECK(l2.infinite);
    ArcLimit l3 = compose(F("7"), A("(t, t^3)"));
    CHECK(*l3.order == 0);
    CHECK(l3.limit == AlgNum(7L));
    ArcLimit l4 = compose(F("x - y"), A("(t, t)"));
    CHECK(!l4.order);
    CHECK(kind_of([] { compose(F("1/y"), A("(t, 0)")); }) == ErrorKind::ArcInsideIndeterminacy);
    ArcLimit l5 = compose(F("x^2/(x^2+y^2)"), A("(t^(3/2), t)"));
    CHECK(*l5.order == 1);
}

TEST_CASE("compose with algebraic coefficients") {
    TowerPtr ctx;
    Arc a = parse_arc("(t, root(x^2-2, 1, 2)*t)", ctx);
    ArcLimit l = compose(F("x^2/(x^2+y^2)"), a);
    CHECK(l.limit == AlgNum(make_rational(1, 3)));
}

TEST_CASE("arc zero set membership") {
    CHECK(in_arc_zero_set(F("x^2/(x^2+y^2)"), A("(t^2, t)")));
    CHECK(*compose(F("x^2/(x^2+y^2)"), A("(t^2, t)")).order == 2);
    CHECK(!in_arc_zero_set(F("x^2/(x^2+y^2)"), A("(t, t)")));
    CHECK(in_arc_zero_set(F("0"), A("(t, 1)")));
}

TEST_CASE("compose order is additive and agrees with numeric sampling") {
    std::vector<RationalFunction> gallery = {F("x^2/(x^2+y^2)"), F("y^2/(x^2+y^2)"), F("x/(x^2+y^2)"),
                                             F("x^4/(x^2+y^2)"), F("x*y/(x^2+y^2)"), F("x+y^3"),
                                             F("(x^2+y^4)/(x^2+y^2)")};
    std::mt19937 rng(3);
    std::vector<Rational> coeffs = {1, -1, 2, make_rational(1, 2), -3};
    std::vector<Rational> exps = {1, 2, 3, make_rational(1, 2), make_rational(3, 2), make_rational(2, 3)};
    int checked = 0;
    while (checked < 100) {
        std::vector<PuiseuxPoly> entries;
        for (int i = 0; i < 2; ++i)
            entries.push_back(PuiseuxPoly::monomial(AlgNum(coeffs[rng() % coeffs.size()]), exps[rng() % exps.size()]));
        Arc arc = make_arc(entries);
        const auto& f = gallery[rng() % gallery.size()];
        const auto& g = gallery[rng() % gallery.size()];
        ArcLimit lf = compose(f, arc), lg = compose(g, arc), lfg = compose(f * g, arc);
        if (!lf.order || !lg.order) {
            CHECK(!lfg.order);
            continue;
        }
        REQUIRE(lfg.order);
        CHECK(*lfg.order == *lf.order + *lg.order);
        long double s = sample(f, arc, 1e-60L);
        if (lf.infinite) CHECK(std::abs(s) > 10);
        else CHECK(std::abs(s - approx(lf.limit)) < 1e-2);
        ++checked;
    }
}

TEST_CASE("family scan") {
    ScanBudget small;
    small.max_exponent_numerator = 2;
    small.max_exponent_denominator = 1;
    small.coefficients = {0, 1, -1, 2, -2};
    ScanResult r = arc_family_scan(F("x^2/(x^2+y^2)"), {0, 0}, small);
    for (Rational v : {Rational(0), make_rational(1, 5), make_rational(1, 2), make_rational(4, 5), Rational(1)})
        CHECK(std::find(r.limits.begin(), r.limits.end(), v) != r.limits.end());
    CHECK(!r.found_infinite);
    CHECK(*r.min() == 0);
    CHECK(*r.max() == 1);

    ScanResult poly = arc_family_scan(F("x+y"), {0, 0});
    REQUIRE(poly.limits.size() == 1);
    CHECK(poly.limits[0] == 0);

    ScanResult unb = arc_family_scan(F("x/(x^2+y^2)"), {0, 0});
    CHECK(unb.found_infinite);
    REQUIRE(unb.infinite_example);
    CHECK(compose(F("x/(x^2+y^2)"), *unb.infinite_example).infinite);

    ScanResult skip = arc_family_scan(F("1/y"), {0, 0}, small);
    CHECK(skip.skipped > 0);
}

TEST_CASE("scan fast path agrees with exact composition") {
    RationalFunction f = F("(x^3 - 2*y^2*x + 1/3*y^4)/(x^2 + 3*y^4 + 2*x*y^2)");
    ScanBudget b;
    b.max_exponent_numerator = 3;
    b.max_exponent_denominator = 2;
    ScanResult r = arc_family_scan(f, {0, 0}, b);
    REQUIRE(r.min_example);
    REQUIRE(r.max_example);
    CHECK(compose(f, *r.min_example).limit == AlgNum(*r.min()));
    CHECK(compose(f, *r.max_example).limit == AlgNum(*r.max()));
}
