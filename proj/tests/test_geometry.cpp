#include "doctest.h"
#include "lbr/geometry.hpp"
#include "lbr/io.hpp"

using namespace lbr;

namespace {

RationalFunction F(const std::string& s) { return parse_function(s); }
const Point origin = rational_point({0, 0});
const RealAlgebraic zero(Rational(0));

bool same(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }

void check_counterexample(const RationalFunction& g, const RationalFunction& f, const Arc& arc) {
    CHECK(in_arc_zero_set(g, arc));
    CHECK(!in_arc_zero_set(f, arc));
}

}  // namespace

TEST_CASE("zero sets") {
    RationalFunction f1 = F("x^2/(x^2+y^2)"), f2 = F("y^2/(x^2+y^2)");
    ZeroSetDescription z1 = zero_set(f1);
    REQUIRE(z1.curve_part);
    CHECK(*z1.curve_part == parse_polynomial("x"));
    REQUIRE(z1.isolated_points.size() == 1);
    CHECK(same_point(z1.isolated_points[0].point, origin));
    CHECK(z1.isolated_points[0].certificate.interval->contains(zero));
    CHECK(z1.contains(rational_point({0, 5})));
    CHECK(!z1.contains(rational_point({1, 0})));

    ZeroSetDescription z2 = zero_set(f1 * f1 + f2 * f2);
    CHECK(z2.empty());
    REQUIRE(z2.excluded_indet_points.size() == 1);
    CHECK(same(z2.excluded_indet_points[0].certificate.interval->lo, RealAlgebraic(make_rational(1, 2))));

    ZeroSetDescription z3 = zero_set(F("x^2+y^2"));
    CHECK(!z3.curve_part);
    REQUIRE(z3.isolated_points.size() == 1);
    CHECK(z3.isolated_points[0].certificate.regular);

    CHECK_THROWS_AS(zero_set(F("x/(x^2+y^2)")), Error);
}

TEST_CASE("ideal zero sets") {
    RationalFunction f1 = F("x^2/(x^2+y^2)"), f2 = F("y^2/(x^2+y^2)");
    CHECK(zero_set_ideal({f1, f2}).empty());
    ZeroSetDescription xy = zero_set_ideal({F("x"), F("y")});
    REQUIRE(xy.isolated_points.size() == 1);
    CHECK(same_point(xy.isolated_points[0].point, origin));
    ZeroSetDescription single = zero_set_ideal({f1});
    ZeroSetDescription direct = zero_set(f1);
    CHECK(*single.curve_part == *direct.curve_part);
    CHECK(single.isolated_points.size() == direct.isolated_points.size());
}

TEST_CASE("contains") {
    RationalFunction f1 = F("x^2/(x^2+y^2)"), f2 = F("y^2/(x^2+y^2)");
    Membership m = contains(f1, origin);
    CHECK(m.member);
    CHECK(same(m.interval->lo, zero));
    CHECK(same(m.interval->hi, RealAlgebraic(Rational(1))));
    CHECK(contains(f2, origin).member);
    Membership r = contains(f1, rational_point({0, 1}));
    CHECK(r.member);
    CHECK(r.regular);
    CHECK(!contains(f1 + F("1"), origin).member);
}

TEST_CASE("zero set inclusion") {
    Inclusion a = zero_set_included(F("x^2+y^2"), F("x"));
    CHECK(a.included);

    Inclusion b = zero_set_included(F("x"), F("x^2+y^2"));
    CHECK(!b.included);
    REQUIRE(b.counterexample);
    check_counterexample(F("x"), F("x^2+y^2"), *b.counterexample);

    RationalFunction f1 = F("x^2/(x^2+y^2)");
    CHECK(zero_set_included(f1, f1).included);

    // Pointwise inclusion holds at the origin, but (t, t) separates them.
    Inclusion c = zero_set_included(F("x^2+y^2"), f1);
    CHECK(!c.included);
    REQUIRE(c.counterexample);
    check_counterexample(F("x^2+y^2"), f1, *c.counterexample);

    Inclusion d = zero_set_included(f1, F("x"));
    CHECK(d.included);
    // Every arc into the origin sends x to 0, but F1 takes the value 1/2 along (t, t).
    Inclusion e = zero_set_included(F("x"), f1);
    CHECK(!e.included);
    check_counterexample(F("x"), f1, *e.counterexample);
    Inclusion g = zero_set_included(F("y"), f1);
    CHECK(!g.included);
    check_counterexample(F("y"), f1, *g.counterexample);

    // Zero along the exceptional direction only inside the resolution.
    RationalFunction h = F("(y - x)^2/(x^2+y^2)");
    Inclusion k = zero_set_included(h, h * f1);
    CHECK(k.included);
    Inclusion k1 = zero_set_included(h, f1 * F("y^2/(x^2+y^2)"));
    CHECK(!k1.included);
    check_counterexample(h, f1 * F("y^2/(x^2+y^2)"), *k1.counterexample);
    Inclusion k2 = zero_set_included(h, F("x*y/(x^2+y^2)"));
    CHECK(!k2.included);
    check_counterexample(h, F("x*y/(x^2+y^2)"), *k2.counterexample);
}

TEST_CASE("Lojasiewicz exponents") {
    LojaResult a = loja_exponent(F("x"), F("x^2+y^2"), 8);
    REQUIRE(a.status == SearchStatus::Found);
    CHECK(a.exponent == 2);
    CHECK(a.certificate->bounded);
    REQUIRE(a.refutation);
    CHECK(!a.refutation->bounded);
    CHECK(compose(F("x/(x^2+y^2)"), a.refutation->witness->arc).infinite);

    LojaResult b = loja_exponent(F("x^2/(x^2+y^2)"), F("x^2/(x^2+y^2)"));
    CHECK(b.exponent == 1);

    LojaResult c = loja_exponent(F("x^2+y^2"), F("x"));
    CHECK(c.status == SearchStatus::PreconditionFailed);
    REQUIRE(c.counterexample);
    check_counterexample(F("x"), F("x^2+y^2"), *c.counterexample);

    LojaResult d = loja_exponent(F("x"), F("x^4+y^2"), 2);
    CHECK(d.status == SearchStatus::Exhausted);
    LojaResult e = loja_exponent(F("x"), F("x^4+y^2"));
    CHECK(e.exponent == 4);
    LojaResult f = loja_exponent(F("y"), F("x^4+y^2"));
    CHECK(f.exponent == 2);
}

TEST_CASE("radical membership") {
    RadicalResult a = radical_member(F("x"), {F("x^2+y^2")});
    REQUIRE(a.status == SearchStatus::Found);
    CHECK(a.exponent == 2);
    REQUIRE(a.h);
    CHECK(*a.h * a.g == F("x^2"));

    RadicalResult b = radical_member(F("x^2+y^2"), {F("x")});
    CHECK(b.status == SearchStatus::PreconditionFailed);
    REQUIRE(b.counterexample);
    check_counterexample(F("x^2"), F("x^2+y^2"), *b.counterexample);

    RationalFunction f1 = F("x^2/(x^2+y^2)");
    RadicalResult c = radical_member(f1, {f1});
    CHECK(c.status == SearchStatus::Found);
    CHECK(c.exponent == 1);

    RadicalResult d = radical_member(F("x"), {F("x^2"), F("y")});
    REQUIRE(d.status == SearchStatus::Found);
    CHECK(*d.h * d.g == pow(F("x"), static_cast<int>(d.exponent)));
}

TEST_CASE("weak Nullstellensatz") {
    RationalFunction f5 = F("(x^2+y^4)/(x^2+y^2)"), f6 = F("(x^4+y^2)/(x^2+y^2)");
    NullstellensatzResult a = weak_nullstellensatz({f5, f6});
    REQUIRE(a.unit);
    REQUIRE(a.coefficients.size() == 2);
    CHECK(a.coefficients[0] == f5 / (f5 * f5 + f6 * f6));
    CHECK(a.coefficients[0] * f5 + a.coefficients[1] * f6 == F("1"));
    for (const auto& c : a.coefficients) CHECK(is_locally_bounded(c).bounded);
    ValueInterval vs = value_set(a.sum_of_squares, origin);
    CHECK(same(vs.lo, RealAlgebraic(make_rational(1, 2))));
    CHECK(same(vs.hi, RealAlgebraic(Rational(1))));

    NullstellensatzResult b = weak_nullstellensatz({F("x"), F("y")});
    CHECK(!b.unit);
    REQUIRE(b.common_zero);
    CHECK(same_point(b.common_zero->point, origin));

    NullstellensatzResult c = weak_nullstellensatz({F("1")});
    CHECK(c.unit);
    CHECK(c.coefficients[0] == F("1"));

    NullstellensatzResult d = weak_nullstellensatz({F("x^2/(x^2+y^2)")});
    CHECK(!d.unit);
}

TEST_CASE("invertibility and regulous points") {
    RationalFunction f1 = F("x^2/(x^2+y^2)"), f2 = F("y^2/(x^2+y^2)");
    InvertibilityResult a = is_invertible(f1 * f1 + f2 * f2);
    CHECK(a.invertible);
    CHECK(*a.inverse * (f1 * f1 + f2 * f2) == F("1"));
    InvertibilityResult b = is_invertible(f1);
    CHECK(!b.invertible);
    CHECK(b.zeros.size() >= 2);
    InvertibilityResult c = is_invertible(F("2"));
    CHECK(c.invertible);
    CHECK(*c.inverse == F("1/2"));

    RegulousResult r1 = is_regulous_at(F("x^4/(x^2+y^2)"), origin);
    CHECK(r1.regulous);
    CHECK(same(r1.interval.lo, zero));
    CHECK(!is_regulous_at(f1, origin).regulous);
    CHECK(is_regulous_at(f1, rational_point({1, 2})).regulous);
}
