#include "lbr/ratfunc.hpp"

#include <algorithm>
#include <numeric>

namespace lbr {

Point rational_point(const std::vector<Rational>& coords) {
    Point p;
    for (const auto& c : coords) p.emplace_back(c);
    return p;
}

bool is_rational_point(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const AlgNum& c) { return c.is_rational(); });
}

std::vector<Rational> to_rationals(const Point& p) {
    std::vector<Rational> out;
    for (const auto& c : p) {
        LBR_ENSURE(c.is_rational(), "point has irrational coordinates");
        out.push_back(c.rational());
    }
    return out;
}

bool same_point(const Point& a, const Point& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_rational() && b[i].is_rational()) {
            if (a[i].rational() != b[i].rational()) return false;
        } else if (compare(to_real_algebraic(a[i]), to_real_algebraic(b[i])) != 0) {
            return false;
        }
    }
    return true;
}

AlgPoly to_alg(const Poly& p) {
    return p.map_coefficients<AlgNum>([](const Rational& c) { return AlgNum(c); });
}

RationalFunction::RationalFunction(const Poly& p) : num_(p), den_(Poly::constant(p.arity(), Rational(1))) {}

RationalFunction RationalFunction::reduce(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
    LBR_ENSURE(p.arity() == q.arity(), "numerator and denominator arity differ");
    if (p.is_zero()) return RationalFunction(p, Poly::constant(q.arity(), Rational(1)));
    Poly g = poly_gcd(p, q);
    Poly n = g.is_constant() ? p : divide_exact(p, g);
    Poly d = g.is_constant() ? q : divide_exact(q, g);
    Poly dn = normalize_associate(d);
    // dn = s * d for a rational s, read off any term.
    const auto& [e, c] = *d.terms().begin();
    Rational s = dn.coefficient(e) / c;
    return RationalFunction(s * n, dn);
}

RationalFunction RationalFunction::constant(std::size_t arity, const Rational& c) {
    return RationalFunction(Poly::constant(arity, c));
}

RationalFunction RationalFunction::variable(std::size_t arity, std::size_t index) {
    return RationalFunction(Poly::variable(arity, index));
}

RationalFunction RationalFunction::with_arity(std::size_t n) const {
    return RationalFunction(num_.with_arity(n), den_.with_arity(n));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction::reduce(a.num_ + b.num_, a.den_);
    return RationalFunction::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
    return RationalFunction::reduce(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction pow(const RationalFunction& f, int e) {
    if (e < 0) {
        if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of the zero function");
        return RationalFunction::reduce(pow(f.den(), static_cast<unsigned>(-e)), pow(f.num(), static_cast<unsigned>(-e)));
    }
    // Powers of a reduced fraction stay reduced.
    return RationalFunction::reduce(pow(f.num(), static_cast<unsigned>(e)), pow(f.den(), static_cast<unsigned>(e)));
}

AlgNum evaluate(const RationalFunction& f, const Point& pt) {
    if (pt.size() != f.arity()) throw Error(ErrorKind::Precondition, "point dimension does not match the function");
    AlgNum d = evaluate<AlgNum>(f.den(), pt);
    if (d.is_zero()) throw Error(ErrorKind::OutsideDomain, "denominator vanishes at the point");
    return evaluate<AlgNum>(f.num(), pt) / d;
}

RationalFunction substitute(const RationalFunction& f, const std::vector<Poly>& maps) {
    if (maps.size() != f.arity()) throw Error(ErrorKind::Precondition, "substitution has the wrong number of entries");
    Poly d = substitute(f.den(), maps);
    if (d.is_zero()) throw Error(ErrorKind::IdenticallyZeroDenominator, "denominator vanishes identically");
    return RationalFunction::reduce(substitute(f.num(), maps), d);
}

namespace {

// Homogenized composition: p(a1/b1, ..., an/bn) * prod bi^deg_i(p).
Poly compose_cleared(const Poly& p, const std::vector<RationalFunction>& maps, const std::vector<unsigned>& degs) {
    std::size_t arity = maps.front().arity();
    Poly out(arity);
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(arity, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            term = term * pow(maps[i].num(), e[i]) * pow(maps[i].den(), degs[i] - e[i]);
        }
        out += term;
    }
    return out;
}

}  // namespace

RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& maps) {
    if (maps.size() != f.arity()) throw Error(ErrorKind::Precondition, "substitution has the wrong number of entries");
    if (maps.empty()) return f;
    std::vector<unsigned> degs(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) degs[i] = std::max(f.num().degree(i), f.den().degree(i));
    Poly d = compose_cleared(f.den(), maps, degs);
    if (d.is_zero()) throw Error(ErrorKind::IdenticallyZeroDenominator, "denominator vanishes identically");
    return RationalFunction::reduce(compose_cleared(f.num(), maps, degs), d);
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorKind::Precondition, "squarefree part of the zero polynomial");
    if (p.is_constant()) return Poly::constant(p.arity(), Rational(1));
    LBR_ENSURE(p.arity() == 2, "squarefree decomposition is implemented for two variables");
    Poly c = content_in(p, 1);
    Poly q = c.is_constant() ? p : divide_exact(p, c);
    Poly out = Poly::constant(2, Rational(1));
    if (!c.is_constant()) {
        UPoly<Rational> cu = squarefree_part(to_upoly(c, 0));
        out = to_mpoly(cu, 2, 0);
    }
    if (q.depends_on(1)) {
        Poly g = poly_gcd(q, derivative(q, 1));
        out = out * (g.is_constant() ? q : divide_exact(q, g));
    }
    return normalize_associate(out);
}

Rational simple_rational(std::size_t index) {
    if (index == 0) return Rational(0);
    std::size_t seen = 1;
    for (long h = 1;; ++h) {
        // Reduced fractions with max(|p|, q) = h: h, 1/h, then the rest.
        std::vector<Rational> level{Rational(h)};
        if (h > 1) level.push_back(make_rational(1, h));
        for (long k = 2; k < h; ++k) {
            if (std::gcd(k, h) != 1) continue;
            level.push_back(make_rational(h, k));
            level.push_back(make_rational(k, h));
        }
        for (const auto& r : level) {
            if (seen == index) return r;
            if (seen + 1 == index) return -r;
            seen += 2;
        }
    }
}

namespace {

UPoly<Rational> univariate_in_x(const Poly& p) { return to_upoly(p, 0); }

// q(x0, y) as a univariate polynomial in y.
UPoly<AlgNum> restrict_x(const Poly& q, const AlgNum& x0) {
    std::vector<AlgNum> c(q.degree(1) + 1, AlgNum(0L));
    std::vector<AlgNum> powers{AlgNum(1L)};
    for (const auto& [e, k] : q.terms()) {
        while (powers.size() <= e[0]) powers.push_back(powers.back() * x0);
        c[e[1]] = c[e[1]] + AlgNum(k) * powers[e[0]];
    }
    return UPoly<AlgNum>(std::move(c));
}

UPoly<Rational> restrict_x_rational(const Poly& q, const Rational& x0) {
    std::vector<Rational> c(q.degree(1) + 1, Rational(0));
    for (const auto& [e, k] : q.terms()) {
        Rational term = k;
        for (unsigned i = 0; i < e[0]; ++i) term *= x0;
        c[e[1]] += term;
    }
    return UPoly<Rational>(std::move(c));
}

AlgNum root_element(const RealRoot<Rational>& r) {
    if (r.exact) return AlgNum(*r.exact);
    std::vector<AlgNum> c;
    for (const auto& k : r.defining.coeffs()) c.emplace_back(k);
    return AlgNum::generator(extend_tower(nullptr, UPoly<AlgNum>(std::move(c)), r.lo, r.hi));
}

struct Cell {
    std::optional<Rational> lo, hi;

    // Distinct rational points of the cell, the simplest first.
    Rational sample(std::size_t k) const {
        if (k == 0) return lo && hi && *lo == *hi ? *lo : simplest_between(lo, hi);
        Rational step(static_cast<long>(k));
        if (lo && hi) return *lo + (*hi - *lo) / Rational(static_cast<long>(k) + 2);
        if (hi) return *hi - step;
        if (lo) return *lo + step;
        return step;
    }
};

// Open cells cut out by the sorted disjoint root intervals. Adjacent intervals that
// touch yield a degenerate cell at their common endpoint, which is not a root.
std::vector<Cell> cells(const std::vector<RealRoot<Rational>>& roots) {
    if (roots.empty()) return {Cell{}};
    std::vector<Cell> out;
    out.push_back({std::nullopt, roots.front().enclosure().lo});
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        out.push_back({roots[i].enclosure().hi, roots[i + 1].enclosure().lo});
    out.push_back({roots.back().enclosure().hi, std::nullopt});
    return out;
}

struct Projection {
    Poly content;  // factor depending on x only
    Poly qs;       // squarefree primitive part in y (constant when q has no y-part)
    Poly disc;
    std::vector<RealRoot<Rational>> disc_roots;
};

Projection project(const Poly& q) {
    Projection pr;
    pr.content = content_in(q, 1);
    Poly q1 = pr.content.is_constant() ? q : divide_exact(q, pr.content);
    if (!q1.depends_on(1)) {
        pr.qs = Poly::constant(2, Rational(1));
        return pr;
    }
    Poly g = poly_gcd(q1, derivative(q1, 1));
    pr.qs = g.is_constant() ? q1 : divide_exact(q1, g);
    unsigned dy = pr.qs.degree(1);
    Poly disc = resultant(pr.qs, derivative(pr.qs, 1), 1) * pr.qs.coefficient_in(1, dy);
    LBR_ENSURE(!disc.is_zero() && !disc.depends_on(1), "discriminant elimination failed");
    pr.disc_roots = isolate_real_roots(univariate_in_x(disc));
    pr.disc = std::move(disc);
    return pr;
}

std::optional<Point> curve_point_from(const Poly& q, const Projection& pr, const Poly& avoid) {
    AlgPoly av = to_alg(avoid);
    if (!pr.content.is_constant()) {
        for (const auto& r : isolate_real_roots(univariate_in_x(pr.content))) {
            AlgNum alpha = root_element(r);
            std::vector<AlgNum> c(avoid.degree(1) + 1, AlgNum(0L));
            for (const auto& [e, k] : av.terms()) {
                AlgNum term = k;
                for (unsigned i = 0; i < e[0]; ++i) term *= alpha;
                c[e[1]] += term;
            }
            UPoly<AlgNum> line(std::move(c));
            if (line.is_zero()) continue;
            return Point{alpha, AlgNum(rational_avoiding(std::vector<UPoly<AlgNum>>{line}))};
        }
    }
    if (pr.qs.is_constant()) return std::nullopt;
    // Common zeros of q and avoid are finitely many, so enough samples per cell succeed.
    std::size_t limit = std::size_t(q.total_degree()) * avoid.total_degree() + 2;
    for (const Cell& cell : cells(pr.disc_roots)) {
        for (std::size_t k = 0; k < limit; ++k) {
            Rational s = cell.sample(k);
            auto fiber = isolate_real_roots(restrict_x_rational(pr.qs, s));
            if (fiber.empty()) break;
            for (const auto& r : fiber) {
                Point p{AlgNum(s), root_element(r)};
                if (!evaluate(av, p).is_zero()) return p;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ZeroAnalysis real_zero_analysis(const Poly& q, const std::optional<Poly>& avoid) {
    if (q.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "zero analysis needs two variables");
    if (q.is_zero()) throw Error(ErrorKind::Precondition, "zero analysis of the zero polynomial");
    ZeroAnalysis out;
    if (q.is_constant()) return out;

    if (avoid && (avoid->arity() != 2 || avoid->is_zero()))
        throw Error(ErrorKind::Precondition, "the polynomial to avoid must be a nonzero plane polynomial");

    Projection pr = project(q);
    auto infinite = [&](Point witness) {
        out.finite = false;
        out.witness = std::move(witness);
        if (avoid) out.curve_point = curve_point_from(q, pr, *avoid);
        return out;
    };
    if (!pr.content.is_constant()) {
        auto roots = isolate_real_roots(univariate_in_x(pr.content));
        if (!roots.empty()) return infinite(Point{root_element(roots.front()), AlgNum(0L)});
    }
    if (pr.qs.is_constant()) return out;
    for (const Cell& cell : cells(pr.disc_roots)) {
        Rational s = cell.sample(0);
        auto fiber = isolate_real_roots(restrict_x_rational(pr.qs, s));
        if (!fiber.empty()) return infinite(Point{AlgNum(s), root_element(fiber.front())});
    }
    // x-coordinates of common zeros of qs, qs_x and qs_y.
    UPoly<Rational> disc = univariate_in_x(pr.disc);
    Poly ex = resultant(pr.qs, derivative(pr.qs, 0), 1) * pr.qs.coefficient_in(1, pr.qs.degree(1));
    if (!ex.is_zero()) disc = gcd(disc, univariate_in_x(ex));
    Poly qx = derivative(pr.qs, 0), qy = derivative(pr.qs, 1);
    if (!qx.is_zero() && qx.depends_on(1)) {
        Poly ey = resultant(qx, qy, 1) * qx.coefficient_in(1, qx.degree(1));
        if (!ey.is_zero()) disc = gcd(disc, univariate_in_x(ey));
    }
    for (const auto& r : isolate_real_roots(disc)) {
        AlgNum alpha = root_element(r);
        UPoly<AlgNum> fiber = restrict_x(pr.qs, alpha);
        LBR_ENSURE(!fiber.is_zero(), "primitive polynomial vanishes on a vertical line");
        for (AlgNum& beta : real_roots(fiber, alpha.tower())) out.points.push_back(Point{alpha, beta});
    }
    return out;
}

std::optional<Point> real_curve_point(const Poly& q, const Poly& avoid) {
    if (q.arity() != 2 || avoid.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "curve points need two variables");
    if (q.is_zero() || avoid.is_zero()) throw Error(ErrorKind::Precondition, "curve point of the zero polynomial");
    if (q.is_constant()) return std::nullopt;
    return curve_point_from(q, project(q), avoid);
}

IndetReport indeterminacy_points(const RationalFunction& f) {
    if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "indeterminacy analysis needs two variables");
    ZeroAnalysis z = real_zero_analysis(f.den());
    IndetReport r;
    if (z.finite)
        r.points = std::move(z.points);
    else
        r.real_curve_witness = std::move(z.witness);
    return r;
}

}  // namespace lbr
