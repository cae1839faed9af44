#include "properties.hpp"

#include <algorithm>

#include "lbr/arcs.hpp"
#include "lbr/constructions.hpp"
#include "lbr/geometry.hpp"
#include "lbr/io.hpp"
#include "lbr/resolve.hpp"

namespace lbr::props {

void Report::fail(const std::string& what) {
    ++violations;
    if (details.size() < 10) details.push_back(what);
}

namespace {

RationalFunction var(std::size_t i) { return RationalFunction::variable(2, i); }
RationalFunction cst(const Rational& c) { return RationalFunction::constant(2, c); }

long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

RationalFunction random_poly(std::mt19937& rng, const RationalFunction& x, const RationalFunction& y, unsigned max_deg,
                             unsigned terms) {
    RationalFunction p = cst(Rational(0));
    for (unsigned k = 0; k < terms; ++k) {
        long i = uniform(rng, 0, max_deg);
        long j = uniform(rng, 0, static_cast<long>(max_deg) - i);
        long c = uniform(rng, -3, 3);
        p = p + cst(Rational(c)) * pow(x, static_cast<int>(i)) * pow(y, static_cast<int>(j));
    }
    return p;
}

std::vector<Point> sample_points(const std::vector<RationalFunction>& fs, const std::vector<ZeroSetDescription>& zs) {
    std::vector<Point> pts = {rational_point({Rational(0), Rational(0)})};
    for (const auto& z : zs) {
        for (const auto& p : z.isolated_points) pts.push_back(p.point);
        for (const auto& p : z.excluded_indet_points) pts.push_back(p.point);
        if (z.curve_sample) pts.push_back(*z.curve_sample);
    }
    for (const auto& f : fs)
        for (const auto& p : indeterminacy_points(f).points) pts.push_back(p);
    std::vector<Point> out;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : out) {
            try {
                dup = dup || same_point(p, q);
            } catch (const Error&) {
            }
        }
        if (!dup) out.push_back(p);
    }
    return out;
}

std::string describe(const RationalFunction& f) { return format_function(f); }

std::vector<std::pair<RationalFunction, RationalFunction>> pairs(std::mt19937& rng, std::size_t random_pairs) {
    std::vector<std::pair<RationalFunction, RationalFunction>> out;
    auto gal = bounded_gallery();
    for (std::size_t i = 0; i < gal.size(); ++i)
        for (std::size_t j = i; j < gal.size(); ++j) out.emplace_back(gal[i], gal[j]);
    auto rnd = random_bounded(rng, 2 * random_pairs);
    for (std::size_t i = 0; i < random_pairs; ++i) out.emplace_back(rnd[2 * i], rnd[2 * i + 1]);
    return out;
}

}  // namespace

std::vector<RationalFunction> gallery_2d() {
    std::vector<RationalFunction> out;
    for (const auto& g : gallery())
        if (g.f.arity() == 2) out.push_back(g.f);
    return out;
}

std::vector<RationalFunction> bounded_gallery() {
    std::vector<RationalFunction> out;
    for (const auto& f : gallery_2d())
        if (is_locally_bounded(f).bounded) out.push_back(f);
    return out;
}

std::vector<RationalFunction> random_bounded(std::mt19937& rng, std::size_t count) {
    std::vector<RationalFunction> out;
    while (out.size() < count) {
        long a = uniform(rng, -1, 1), b = uniform(rng, -1, 1);
        RationalFunction X = var(0) - cst(Rational(a)), Y = var(1) - cst(Rational(b));
        // D quasi-homogeneous of weighted degree d with weights (wx, wy).
        long kind = uniform(rng, 0, 3);
        RationalFunction D = cst(Rational(1));
        long wx = 1, wy = 1, d = 0;
        switch (kind) {
            case 0: D = X * X + Y * Y, wx = 1, wy = 1, d = 2; break;
            case 1: D = X * X + pow(Y, 4), wx = 2, wy = 1, d = 4; break;
            case 2: D = pow(X, 4) + Y * Y, wx = 1, wy = 2, d = 4; break;
            default: break;
        }
        RationalFunction N = cst(Rational(0));
        if (d > 0) {
            unsigned terms = static_cast<unsigned>(uniform(rng, 1, 3));
            for (unsigned k = 0; k < terms; ++k) {
                long i = uniform(rng, 0, 4), j = uniform(rng, 0, 4);
                if (i * wx + j * wy < d) continue;
                N = N + cst(Rational(uniform(rng, -3, 3))) * pow(X, static_cast<int>(i)) * pow(Y, static_cast<int>(j));
            }
        }
        RationalFunction P = random_poly(rng, var(0), var(1), 2, static_cast<unsigned>(uniform(rng, 0, 2)));
        RationalFunction f = d > 0 ? N / D + P : P;
        if (f.is_zero()) continue;
        out.push_back(f);
    }
    return out;
}

std::vector<RationalFunction> random_quotients(std::mt19937& rng, std::size_t count) {
    std::vector<RationalFunction> out;
    while (out.size() < count) {
        RationalFunction x = var(0), y = var(1);
        RationalFunction q;
        switch (uniform(rng, 0, 3)) {
            case 0: q = x * x + y * y; break;
            case 1: q = x * x + pow(y, 4) + cst(Rational(uniform(rng, -1, 1))) * x * y * y; break;
            case 2: q = pow(x - cst(Rational(1)), 2) + pow(y, 2) * cst(Rational(uniform(rng, 1, 3))); break;
            default: q = random_poly(rng, x, y, 4, static_cast<unsigned>(uniform(rng, 1, 4))); break;
        }
        RationalFunction p = random_poly(rng, x, y, 4, static_cast<unsigned>(uniform(rng, 1, 4)));
        if (q.is_zero() || p.is_zero()) continue;
        RationalFunction f = p / q;
        if (f.is_polynomial()) continue;
        out.push_back(f);
    }
    return out;
}

Report union_law(std::uint32_t seed, std::size_t random_pairs) {
    Report r{"union law Z(fg) = Z(f) u Z(g)"};
    std::mt19937 rng(seed);
    for (const auto& [f, g] : pairs(rng, random_pairs)) {
        ++r.cases;
        RationalFunction fg = f * g;
        std::vector<ZeroSetDescription> zs = {zero_set(f), zero_set(g), zero_set(fg)};
        for (const auto& p : sample_points({f, g}, zs)) {
            bool lhs = contains(fg, p).member;
            bool rhs = contains(f, p).member || contains(g, p).member;
            bool described = zs[2].contains(p);
            if (lhs != rhs || described != lhs)
                r.fail(describe(f) + " * " + describe(g) + " at " + format_point(p));
        }
    }
    return r;
}

Report sum_of_squares_law(std::uint32_t seed, std::size_t random_pairs) {
    Report r{"sum of squares law Z(f^2+g^2) in Z(f) n Z(g)"};
    std::mt19937 rng(seed);
    auto ps = pairs(rng, 0);
    // Polynomial partners: equality holds.
    auto gal = bounded_gallery();
    std::vector<std::pair<RationalFunction, RationalFunction>> poly_pairs;
    for (const auto& f : gal) {
        poly_pairs.emplace_back(var(0), f);
        poly_pairs.emplace_back(var(0) * var(0) + var(1) * var(1), f);
        poly_pairs.emplace_back(var(1) - var(0) * var(0), f);
    }
    while (poly_pairs.size() < 3 * gal.size() + random_pairs) {
        RationalFunction p = random_poly(rng, var(0), var(1), 2, static_cast<unsigned>(uniform(rng, 1, 3)));
        if (p.is_zero()) continue;
        poly_pairs.emplace_back(p, gal[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gal.size()) - 1))]);
    }
    auto check = [&](const RationalFunction& f, const RationalFunction& g, bool equality) {
        ++r.cases;
        RationalFunction s = f * f + g * g;
        std::vector<ZeroSetDescription> zs = {zero_set(f), zero_set(g), zero_set(s)};
        for (const auto& p : sample_points({f, g}, zs)) {
            bool lhs = contains(s, p).member;
            bool both = contains(f, p).member && contains(g, p).member;
            if ((lhs && !both) || (equality && lhs != both))
                r.fail("(" + describe(f) + ")^2 + (" + describe(g) + ")^2 at " + format_point(p));
        }
    };
    for (const auto& [f, g] : ps) check(f, g, f.is_polynomial() || g.is_polynomial());
    for (const auto& [f, g] : poly_pairs) check(f, g, true);
    return r;
}

Report ring_closure(std::uint32_t seed, std::size_t random_pairs) {
    Report r{"ring closure of bounded functions under + and *"};
    std::mt19937 rng(seed);
    for (const auto& [f, g] : pairs(rng, random_pairs)) {
        ++r.cases;
        if (!is_locally_bounded(f + g).bounded) r.fail("sum " + describe(f) + " + " + describe(g));
        if (!is_locally_bounded(f * g).bounded) r.fail("product " + describe(f) + " * " + describe(g));
    }
    return r;
}

Report arc_order_nonnegative(std::uint32_t seed, std::size_t random_cases) {
    Report r{"arc order >= 0 for bounded functions over the scan family"};
    std::mt19937 rng(seed);
    auto fs = bounded_gallery();
    auto rnd = random_bounded(rng, random_cases);
    fs.insert(fs.end(), rnd.begin(), rnd.end());
    ScanBudget budget;
    for (const auto& f : fs) {
        ++r.cases;
        GlobalVerdict v = is_locally_bounded(f);
        if (!v.bounded) {
            r.fail("generator produced an unbounded function " + describe(f));
            continue;
        }
        for (const auto& p : v.indeterminacy) {
            if (!is_rational_point(p)) continue;
            ScanResult s = arc_family_scan(f, to_rationals(p), budget);
            if (s.found_infinite) r.fail(describe(f) + " along " + format_arc(*s.infinite_example));
        }
    }
    return r;
}

Report blowup_invariance(std::uint32_t seed, std::size_t random_cases) {
    Report r{"blowup invariance of the boundedness verdict"};
    std::mt19937 rng(seed);
    auto fs = gallery_2d();
    auto rnd = random_quotients(rng, random_cases);
    fs.insert(fs.end(), rnd.begin(), rnd.end());
    for (const auto& f : fs) {
        ++r.cases;
        bool direct = is_locally_bounded(f).bounded;
        bool a = is_locally_bounded(pullback_function(f, {ChartKind::A})).bounded;
        bool b = is_locally_bounded(pullback_function(f, {ChartKind::B})).bounded;
        if (direct != (a && b))
            r.fail(describe(f) + ": direct " + std::to_string(direct) + ", charts " + std::to_string(a) +
                   std::to_string(b));
    }
    return r;
}

Report scan_decision_agreement(std::uint32_t seed, std::size_t random_cases) {
    Report r{"scan refutations never contradict bounded verdicts"};
    std::mt19937 rng(seed);
    auto fs = gallery_2d();
    auto rnd = random_quotients(rng, random_cases);
    fs.insert(fs.end(), rnd.begin(), rnd.end());
    ScanBudget budget;
    for (const auto& f : fs) {
        ++r.cases;
        GlobalVerdict v = is_locally_bounded(f);
        if (!v.bounded) {
            if (!v.witness) {
                r.fail("unbounded without witness: " + describe(f));
            } else {
                ArcLimit l = compose(f, v.witness->arc);
                if (!l.infinite) r.fail("witness does not diverge: " + describe(f));
            }
            continue;
        }
        for (const auto& p : v.indeterminacy) {
            if (!is_rational_point(p)) continue;
            ScanResult s = arc_family_scan(f, to_rationals(p), budget);
            if (s.found_infinite) r.fail("scan refutes bounded " + describe(f));
        }
    }
    return r;
}

Report value_set_sampling(std::uint32_t seed, std::size_t random_cases) {
    Report r{"scan limits lie in the value set"};
    std::mt19937 rng(seed);
    auto gal = bounded_gallery();
    auto fs = gal;
    auto rnd = random_bounded(rng, random_cases);
    fs.insert(fs.end(), rnd.begin(), rnd.end());
    ScanBudget budget;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        const auto& f = fs[k];
        ++r.cases;
        for (const auto& p : indeterminacy_points(f).points) {
            if (!is_rational_point(p)) continue;
            ValueInterval v = value_set(f, p);
            ScanResult s = arc_family_scan(f, to_rationals(p), budget);
            for (const auto& l : s.limits)
                if (!v.contains(RealAlgebraic(l))) r.fail(describe(f) + " limit " + format_rational(l));
            if (k < gal.size() && s.min() && s.max()) {
                // Gallery endpoints are reached by the sampled family.
                RealAlgebraic lo = v.lo, hi = v.hi;
                lo.refine(40);
                hi.refine(40);
                if (*s.min() - lo.hi > Rational(1, 20) || hi.lo - *s.max() > Rational(1, 20))
                    r.fail(describe(f) + " sampled extremes far from the value set endpoints");
            }
        }
    }
    return r;
}

}  // namespace lbr::props
