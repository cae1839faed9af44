#include <random>

#include "doctest.h"
#include "lbr/constructions.hpp"
#include "lbr/io.hpp"
#include "lbr/resolve.hpp"

using namespace lbr;

namespace {

RationalFunction F(const std::string& s) { return parse_function(s); }
Arc A(const std::string& s) { return parse_arc(s); }
Rational Q(long p, long q = 1) { return make_rational(p, q); }

PuiseuxPoly T(long c, long e) { return PuiseuxPoly::monomial(AlgNum(Rational(c)), Rational(e)); }

bool certified(const RationalFunction& f, const std::vector<PuiseuxPoly>& entries) {
    return in_arc_zero_set(f, make_arc(entries));
}

std::vector<PuiseuxPoly> concat(std::vector<PuiseuxPoly> a, const std::vector<PuiseuxPoly>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("product zero function") {
    CHECK(product_zero_function(parse_function("x", 1), parse_function("x", 1)) == F("x^2+y^2"));
    RationalFunction f1 = gallery_entry("F1").f;
    RationalFunction h = product_zero_function(f1, f1);
    CHECK(h.arity() == 4);
    RationalFunction expect =
        substitute(f1 * f1, {Poly::variable(4, 0), Poly::variable(4, 1)}) +
        substitute(f1 * f1, {Poly::variable(4, 2), Poly::variable(4, 3)});
    CHECK(h == expect);
    // F1 vanishes along (t^2, t) only.
    CHECK(compose(h, A("(t^2, t, t^2, t)")).order > 0);
    CHECK_FALSE(in_arc_zero_set(h, A("(t, t, t^2, t)")));
    CHECK(compose(h, A("(t, t, t^2, t)")).limit == AlgNum(Q(1, 4)));

    RationalFunction one = RationalFunction::constant(1, Q(1));
    RationalFunction h1 = product_zero_function(one, f1);
    for (const char* arc : {"(t, t^2, t)", "(1+t, t, t)", "(t, t, t^2)"})
        CHECK_FALSE(in_arc_zero_set(h1, A(arc)));
}

TEST_CASE("product certificates concatenate") {
    RationalFunction seg = segment_function();
    RationalFunction h = product_zero_function(seg, semiline_function());
    for (long c : {0L, 1L, 3L}) {
        auto g = semiline_block_arc(Q(c));
        REQUIRE(g);
        std::vector<PuiseuxPoly> f = {T(1, 1), T(1, 1), PuiseuxPoly::constant(AlgNum(Q(1, 2)))};
        CHECK(certified(seg, f));
        CHECK(certified(semiline_function(), *g));
        CHECK(certified(h, concat(f, *g)));
    }
}

TEST_CASE("semiline function") {
    RationalFunction s = semiline_function();
    CHECK(s == F("(2*z/(1+z^2) - x^2/(x^2+y^2))^2 + x^2 + y^2"));
    CHECK(compose(s, A("(t, t, 1)")).limit == AlgNum(Q(1, 4)));
    CHECK(in_arc_zero_set(s, A("(t, 0, 1)")));

    ScanResult r = arc_family_scan(s, {Q(0), Q(0), Q(-1)});
    CHECK_FALSE(r.found_infinite);
    REQUIRE(r.min());
    CHECK(*r.min() >= 1);

    for (long y0 : {0L, 1L, 2L, 7L}) {
        auto b = semiline_block_arc(Q(y0));
        REQUIRE(b);
        CHECK(certified(s, *b));
    }
    CHECK_FALSE(semiline_block_arc(Q(-1)));
}

TEST_CASE("semiline closed form along (t, a t, z0)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    RationalFunction s = semiline_function();
    for (int i = 0; i < 50; ++i) {
        Rational a = Q(num(rng), den(rng)), z0 = Q(num(rng), den(rng));
        if (sgn(a) == 0) a = Q(1, 3);
        Arc arc = make_arc({T(1, 1), PuiseuxPoly::monomial(AlgNum(a), Q(1)), PuiseuxPoly::constant(AlgNum(z0))});
        Rational d = 2 * z0 / (1 + z0 * z0) - 1 / (1 + a * a);
        ArcLimit l = compose(s, arc);
        CHECK(l.limit == AlgNum(Rational(d * d)));
    }
}

TEST_CASE("segment function") {
    RationalFunction seg = segment_function();
    CHECK(seg == F("(z - x^2/(x^2+y^2))^2 + x^2 + y^2"));
    CHECK(in_arc_zero_set(seg, A("(t, t, 1/2)")));
    for (Rational c : {Q(0), Q(1, 4), Q(1, 2), Q(1)}) {
        auto st = direction_arc(c);
        REQUIRE(st);
        st->push_back(PuiseuxPoly::constant(AlgNum(c)));
        CHECK(certified(seg, *st));
    }
    CHECK_FALSE(direction_arc(Q(2)));
    CHECK_FALSE(direction_arc(Q(-1, 2)));
}

TEST_CASE("chain and pole family") {
    RationalFunction f = chain_function(Q(3, 2));
    CHECK(f == F("(z - 3/2*x^2/(x^2+y^2))^2 + x^2 + y^2"));
    auto st = direction_arc(Q(2, 3));
    REQUIRE(st);
    st->push_back(PuiseuxPoly::constant(AlgNum(Q(1))));
    CHECK(certified(f, *st));
    ScanResult r = arc_family_scan(f, {Q(0), Q(0), Q(2)});
    CHECK_FALSE(r.found_infinite);
    REQUIRE(r.min());
    CHECK(*r.min() >= Q(1, 4));

    CHECK(pole_family(3) == F("x^2/(x^2+(y-3)^2)"));
    CHECK(is_locally_bounded(pole_family(2)).bounded);
}

TEST_CASE("orthant zero function") {
    RationalFunction o1 = orthant_zero_function(1);
    RationalFunction s = semiline_function();
    CHECK(o1 == s);
    RationalFunction o2 = orthant_zero_function(2);
    CHECK(o2.arity() == 6);
    auto b1 = semiline_block_arc(Q(1)), b2 = semiline_block_arc(Q(2));
    REQUIRE(b1);
    REQUIRE(b2);
    CHECK(certified(o2, concat(*b1, *b2)));

    ScanResult r = arc_family_scan(o1, {Q(0), Q(0), Q(-1)});
    CHECK_FALSE(r.found_infinite);
    REQUIRE(r.min());
    CHECK(*r.min() > 0);
    CHECK_THROWS(orthant_zero_function(0));
}

TEST_CASE("encoder for {x >= 0}") {
    EncodedSet e = encode_closed_sa_set({parse_polynomial("x", 1)});
    CHECK(e.ambient_arity() == 4);
    CHECK(e.h.arity() == 4);
    CHECK(e.embed({Q(1)}) == std::vector<Rational>{Q(1), Q(1), Q(0), Q(0)});
    CHECK(e.projection == std::vector<std::size_t>{0});
    CHECK(e.variable_names() == std::vector<std::string>{"x1", "y1", "s1", "t1"});
    for (long x : {0L, 1L, 5L}) {
        auto arc = membership_arc(e, {Q(x)});
        REQUIRE(arc);
        CHECK(in_arc_zero_set(e.h, *arc));
    }
    CHECK_FALSE(membership_arc(e, {Q(-1)}));
    // Outside the set h stays away from 0 along the block arcs anyway.
    Arc away = make_arc({PuiseuxPoly::constant(AlgNum(Q(-1))), PuiseuxPoly::constant(AlgNum(Q(-1))), T(1, 1), PuiseuxPoly()});
    CHECK_FALSE(in_arc_zero_set(e.h, away));
}

TEST_CASE("encoder for the unit disc") {
    EncodedSet e = encode_closed_sa_set({parse_polynomial("1 - x^2 - y^2", 2)});
    CHECK(e.ambient_arity() == 5);
    CHECK(e.embed({Q(0), Q(0)}) == std::vector<Rational>{Q(0), Q(0), Q(1), Q(0), Q(0)});
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-6, 6);
    int inside = 0;
    for (int i = 0; i < 30; ++i) {
        std::vector<Rational> x = {Q(num(rng), 6), Q(num(rng), 6)};
        std::vector<Rational> img = e.embed(x);
        // Projection recovers the input exactly.
        CHECK(img[e.projection[0]] == x[0]);
        CHECK(img[e.projection[1]] == x[1]);
        bool in = 1 - x[0] * x[0] - x[1] * x[1] >= 0;
        auto arc = membership_arc(e, x);
        CHECK(arc.has_value() == in);
        if (arc) {
            ++inside;
            CHECK(in_arc_zero_set(e.h, *arc));
        }
    }
    CHECK(inside > 0);
    // Symbolic round trip: the projected embedding polynomials are the coordinate functions.
    for (std::size_t i = 0; i < 2; ++i) CHECK(e.embedding[e.projection[i]] == Poly::variable(2, i));
}

TEST_CASE("encoder for the whole space") {
    EncodedSet e = encode_closed_sa_set({parse_polynomial("1", 2)});
    for (long a : {-3L, 0L, 2L}) {
        auto arc = membership_arc(e, {Q(a), Q(1 - a)});
        REQUIRE(arc);
        CHECK(in_arc_zero_set(e.h, *arc));
    }
}

TEST_CASE("gallery") {
    auto g = gallery();
    std::vector<std::string> names;
    for (const auto& e : g) names.push_back(e.name);
    for (const char* n : {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "segment", "semiline", "chain", "fk1"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK(is_locally_bounded(gallery_entry("F1").f).bounded);
    CHECK_FALSE(is_locally_bounded(gallery_entry("F3").f).bounded);
    CHECK_THROWS(gallery_entry("nope"));
}
