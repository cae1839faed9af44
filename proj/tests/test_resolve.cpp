#include <cmath>

#include "doctest.h"
#include "lbr/io.hpp"
#include "lbr/resolve.hpp"

using namespace lbr;

namespace {

RationalFunction F(const std::string& s) { return parse_function(s); }
AlgPoly AP(const std::string& s) { return to_alg(parse_polynomial(s)); }
RealAlgebraic R(long p, long q = 1) { return RealAlgebraic(make_rational(p, q)); }
const Point origin = rational_point({0, 0});

bool same(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }

}  // namespace

TEST_CASE("pullback through charts") {
    PulledBack a = pullback(F("x^2/(x^2+y^2)"), ChartKind::A);
    CHECK(a.a_order == 2);
    CHECK(a.b_order == 2);
    CHECK(a.p_tilde == AP("1"));
    CHECK(a.q_tilde == AP("1 + y^2"));

    PulledBack b = pullback(F("1/x"), ChartKind::A);
    CHECK(b.a_order == 0);
    CHECK(b.b_order == 1);

    PulledBack c = pullback(F("(y^2-2*x^2)^2/((y^2-2*x^2)^2+x^6)"), ChartKind::A);
    CHECK(c.a_order == 4);
    CHECK(c.b_order == 4);
    CHECK(c.q_tilde == AP("(y^2-2)^2 + x^2"));

    // Reconstruction at (u, v) = (1, 2): f(1, 2) = u^(a-b) p~/q~.
    RationalFunction f = F("x^3*y/(x^2+y^2)");
    PulledBack d = pullback(f, ChartKind::A);
    AlgNum lhs = evaluate(f, rational_point({1, 2}));
    Point uv = rational_point({1, 2});
    AlgNum rhs = evaluate(d.p_tilde, uv) / evaluate(d.q_tilde, uv);
    CHECK(lhs == rhs);
    PulledBack e = pullback(f, ChartKind::B);
    Point uv2 = rational_point({make_rational(1, 2), 2});  // (x, y) = (1, 2)
    AlgNum vpow = AlgNum(4L);                               // v^(a - b) with a - b = 2
    CHECK(lhs == vpow * evaluate(e.p_tilde, uv2) / evaluate(e.q_tilde, uv2));
}

TEST_CASE("pullback_function") {
    CHECK(pullback_function(F("x^2/(x^2+y^2)"), {ChartKind::A}) == F("1/(1+y^2)"));
    CHECK(pullback_function(F("x"), {ChartKind::A}) == F("x"));
    CHECK(pullback_function(F("x*y/(x^2+y^2)"), {}) == F("x*y/(x^2+y^2)"));
    CHECK(pullback_function(F("x*y/(x^2+y^2)"), {ChartKind::B}) == F("x/(x^2+1)"));
}

TEST_CASE("local boundedness decisions") {
    LocalVerdict v1 = is_locally_bounded_at(F("x^2/(x^2+y^2)"), origin);
    CHECK(v1.bounded);
    REQUIRE(v1.tree);
    CHECK(v1.tree->children.empty());

    RationalFunction g = F("x/(x^2+y^2)");
    LocalVerdict v2 = is_locally_bounded_at(g, origin);
    CHECK(!v2.bounded);
    REQUIRE(v2.witness);
    CHECK(*compose(g, v2.witness->arc).order == -1);

    RationalFunction h = F("(y^2-2*x^2)^2/((y^2-2*x^2)^2+x^6)");
    LocalVerdict v3 = is_locally_bounded_at(h, origin);
    CHECK(v3.bounded);
    REQUIRE(v3.tree);
    CHECK(v3.tree->children.size() == 2);
    CHECK(v3.tree->max_tower_height() >= 1);
    for (const auto& c : v3.tree->children) {
        CHECK(c.fiber * c.fiber == AlgNum(2L));
        CHECK(c.node->children.empty());
    }
}

TEST_CASE("deeper resolutions") {
    // Cusp-like denominators force several blowups.
    RationalFunction f = F("x^2*y/((y^2-x^3)^2 + x^8)");
    LocalVerdict v = is_locally_bounded_at(f, origin);
    CHECK(!v.bounded);
    REQUIRE(v.witness);
    CHECK(compose(f, v.witness->arc).infinite);

    RationalFunction g = F("(y^2-x^3)^2/((y^2-x^3)^2 + x^8)");
    LocalVerdict w = is_locally_bounded_at(g, origin);
    CHECK(w.bounded);
    CHECK(w.tree->height() >= 2);
    ValueInterval vs = value_set(*w.tree);
    CHECK(same(vs.lo, R(0)));
    CHECK(same(vs.hi, R(1)));

    RationalFunction k = F("x^2/(x^2+y^4)");
    LocalVerdict kv = is_locally_bounded_at(k, origin);
    CHECK(kv.bounded);
    ValueInterval kvs = value_set(*kv.tree);
    CHECK(same(kvs.lo, R(0)));
    CHECK(same(kvs.hi, R(1)));

    ResolveOptions shallow;
    shallow.max_depth = 1;
    CHECK_THROWS_AS(is_locally_bounded_at(g, origin, shallow), DepthExceeded);
}

TEST_CASE("global boundedness") {
    GlobalVerdict a = is_locally_bounded(F("x^2/(x^2+y^2)"));
    CHECK(a.bounded);
    REQUIRE(a.indeterminacy.size() == 1);
    CHECK(same_point(a.indeterminacy[0], origin));

    RationalFunction b = F("(x+y)/x");
    GlobalVerdict bv = is_locally_bounded(b);
    CHECK(!bv.bounded);
    REQUIRE(bv.witness);
    CHECK(compose(b, bv.witness->arc).infinite);

    GlobalVerdict c = is_locally_bounded(F("x^3 - y + 1"));
    CHECK(c.bounded);
    CHECK(c.certificates.empty());

    // Curve witness that is also a common zero must be avoided.
    RationalFunction d = F("y/(x*y + y^2 - x)");
    GlobalVerdict dv = is_locally_bounded(d);
    CHECK(!dv.bounded);
    REQUIRE(dv.witness);
    CHECK(compose(d, dv.witness->arc).infinite);

    RationalFunction e = F("x^2/(x^2 + (y-3)^2) + y^4/((x-1)^2 + y^2)");
    GlobalVerdict ev = is_locally_bounded(e);
    CHECK(ev.bounded);
    CHECK(ev.certificates.size() == 2);
}

TEST_CASE("value sets") {
    ValueInterval a = value_set(F("x^2/(x^2+y^2)"), origin);
    CHECK(same(a.lo, R(0)));
    CHECK(same(a.hi, R(1)));
    CHECK(a.lo.is_rational());

    ValueInterval b = value_set(F("x*y/(x^2+y^2)"), origin);
    CHECK(same(b.lo, R(-1, 2)));
    CHECK(same(b.hi, R(1, 2)));

    ValueInterval c = value_set(F("x^4/(x^2+y^2)"), origin);
    CHECK(c.is_point());
    CHECK(same(c.lo, R(0)));

    ValueInterval d = value_set(F("x^2/(x^2+y^2)"), rational_point({1, 1}));
    CHECK(d.is_point());
    CHECK(same(d.lo, R(1, 2)));

    ValueInterval e = value_set(F("(y^2-2*x^2)^2/((y^2-2*x^2)^2+x^6)"), origin);
    CHECK(same(e.lo, R(0)));
    CHECK(same(e.hi, R(1)));

    RationalFunction f5 = F("(x^2+y^4)/(x^2+y^2)"), f6 = F("(x^4+y^2)/(x^2+y^2)");
    ValueInterval s = value_set(f5 * f5 + f6 * f6, origin);
    CHECK(same(s.lo, R(1, 2)));
    CHECK(same(s.hi, R(1)));

    // Irrational endpoints: x*(x+y)/(x^2+y^2) has extrema (1 +- sqrt 2)/2.
    ValueInterval g = value_set(F("x*(x+y)/(x^2+y^2)"), origin);
    CHECK(!g.lo.is_rational());
    RealAlgebraic lo = g.lo;
    lo.refine(40);
    CHECK(std::abs(std::stod(lo.approx(12)) - (1 - std::sqrt(2.0)) / 2) < 1e-9);

    CHECK_THROWS_AS(value_set(F("x/(x^2+y^2)"), origin), Error);
}

TEST_CASE("algebraic centres") {
    TowerPtr ctx;
    Point p = parse_point("(root(x^2-2, 1, 2), 0)", ctx);
    RationalFunction f = F("y^2/((x^2-2)^2 + y^2)");
    LocalVerdict v = is_locally_bounded_at(f, p);
    CHECK(v.bounded);
    ValueInterval vs = value_set(*v.tree);
    CHECK(same(vs.lo, R(0)));
    CHECK(same(vs.hi, R(1)));

    RationalFunction g = F("(x^2-2)/((x^2-2)^2 + y^2)");
    LocalVerdict w = is_locally_bounded_at(g, p);
    CHECK(!w.bounded);
    REQUIRE(w.witness);
    CHECK(compose(g, w.witness->arc).infinite);
}

TEST_CASE("witness after a chart B step is a proper arc") {
    Point origin{AlgNum(0L), AlgNum(0L)};
    for (const char* s : {"2*x*y/(y^4 + x*y^2 + x^2)", "(-4*x^3 + x*y)/(y^4 + x^2)", "-x*y/(y^4 + x*y^2 + x^2)"}) {
        RationalFunction f = F(s);
        LocalVerdict v = is_locally_bounded_at(f, origin);
        CHECK(!v.bounded);
        REQUIRE(v.witness);
        CHECK(compose(f, v.witness->arc).infinite);
    }
}
