#include "lbr/geometry.hpp"

#include "chart_util.hpp"

namespace lbr {

using namespace detail;

namespace {

void require_bounded(const RationalFunction& f, const ResolveOptions& options, GlobalVerdict* out = nullptr) {
    if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "zero sets are computed in the plane");
    GlobalVerdict v = is_locally_bounded(f, options);
    if (!v.bounded) throw Error(ErrorKind::NotLocallyBounded, "function is not locally bounded");
    if (out) *out = std::move(v);
}

RationalFunction sum_of_squares(const std::vector<RationalFunction>& gens) {
    if (gens.empty()) throw Error(ErrorKind::Precondition, "an ideal needs at least one generator");
    RationalFunction g = RationalFunction::constant(gens.front().arity(), Rational(0));
    for (const auto& f : gens) {
        if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "ideals are handled in the plane");
        g = g + f * f;
    }
    return g;
}

Membership membership_at_indet(const RationalFunction& f, const Point& pt, const ResolveOptions& options) {
    Membership m;
    m.interval = value_set(f, pt, options);
    m.member = m.interval->contains(RealAlgebraic(Rational(0)));
    return m;
}

bool listed(const std::vector<ZeroPoint>& pts, const Point& p) {
    for (const auto& z : pts)
        if (same_point(z.point, p)) return true;
    return false;
}

}  // namespace

bool ZeroSetDescription::contains(const Point& pt) const {
    if (listed(isolated_points, pt)) return true;
    if (listed(excluded_indet_points, pt)) return false;
    return curve_part && evaluate(to_alg(*curve_part), pt).is_zero();
}

ZeroSetDescription zero_set(const RationalFunction& f, const ResolveOptions& options) {
    GlobalVerdict v;
    require_bounded(f, options, &v);
    ZeroSetDescription z;
    for (const auto& c : v.certificates) {
        Membership m;
        m.interval = value_set(*c.tree);
        m.member = m.interval->contains(RealAlgebraic(Rational(0)));
        (m.member ? z.isolated_points : z.excluded_indet_points).push_back({c.point, m});
    }
    if (f.is_zero()) {
        z.curve_part = Poly::constant(2, Rational(0));
        z.curve_sample = rational_point({0, 0});
        return z;
    }
    Poly n = squarefree_part(f.num());
    if (n.is_constant()) return z;
    ZeroAnalysis a = real_zero_analysis(n, f.den());
    if (!a.finite) {
        z.curve_part = n;
        z.curve_sample = a.curve_point;
        if (!z.curve_sample) z.curve_sample = a.witness;
        return z;
    }
    AlgPoly den = to_alg(f.den());
    for (const auto& p : a.points) {
        if (evaluate(den, p).is_zero()) continue;
        Membership m;
        m.member = true;
        m.regular = true;
        z.isolated_points.push_back({p, m});
    }
    return z;
}

ZeroSetDescription zero_set_ideal(const std::vector<RationalFunction>& generators, const ResolveOptions& options) {
    for (const auto& g : generators) require_bounded(g, options);
    return zero_set(sum_of_squares(generators), options);
}

Membership contains(const RationalFunction& f, const Point& pt, const ResolveOptions& options) {
    if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "zero sets are computed in the plane");
    if (pt.size() != 2) throw Error(ErrorKind::Precondition, "point must have two coordinates");
    AlgNum d = evaluate(to_alg(f.den()), pt);
    if (!d.is_zero()) {
        Membership m;
        m.regular = true;
        m.value = evaluate(to_alg(f.num()), pt) / d;
        m.member = m.value.is_zero();
        return m;
    }
    return membership_at_indet(f, pt, options);
}

namespace {

// Simultaneous blowup walk of g and f below one point. It looks for a point of the
// resolved space where g vanishes and f does not; both functions must be bounded.
class JointWalk {
public:
    JointWalk(const RationalFunction& g, const RationalFunction& f, const ResolveOptions& options)
        : g_(g), f_(f), options_(options) {}

    std::optional<Arc> at(const Point& pt) {
        TowerPtr tower = deepest_tower(pt);
        AlgPoly Pg = shift(to_alg(g_.num()), pt), Qg = shift(to_alg(g_.den()), pt);
        AlgPoly Pf = shift(to_alg(f_.num()), pt), Qf = shift(to_alg(f_.den()), pt);
        for (const AlgPoly* p : {&Pg, &Qg, &Pf, &Qf}) tower = tower_of(*p, tower);
        return walk(Pg, Qg, Pf, Qf, translation_map(pt), tower, 0);
    }

private:
    std::optional<Arc> check(Arc arc) {
        if (!in_arc_zero_set(g_, arc)) return std::nullopt;
        if (in_arc_zero_set(f_, arc)) return std::nullopt;
        return arc;
    }

    std::optional<Arc> line(const std::vector<AlgPoly>& M, const AlgNum& a, const AlgNum& b) {
        try {
            return check(map_line_arc(M, a, b));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ConstantArc && e.kind() != ErrorKind::ArcInsideIndeterminacy) throw;
            return std::nullopt;
        }
    }

    std::optional<Arc> walk(const AlgPoly& Pg, const AlgPoly& Qg, const AlgPoly& Pf, const AlgPoly& Qf,
                            const std::vector<AlgPoly>& M, const TowerPtr& tower, unsigned depth) {
        AlgNum qg0 = Qg.constant_term(), qf0 = Qf.constant_term();
        if (!qg0.is_zero() && !qf0.is_zero()) {
            if (!Pg.constant_term().is_zero() || Pf.constant_term().is_zero()) return std::nullopt;
            for (std::size_t i = 0; i < 16; ++i)
                if (auto arc = line(M, AlgNum(1L), AlgNum(simple_rational(i)))) return arc;
            if (auto arc = line(M, AlgNum(0L), AlgNum(1L))) return arc;
            invariant_failure("no arc realizes a regular counterexample point");
        }
        if (depth >= options_.max_depth) throw DepthExceeded(options_.max_depth);
        PulledBack Ag = pullback(Pg, Qg, ChartKind::A), Bg = pullback(Pg, Qg, ChartKind::B);
        PulledBack Af = pullback(Pf, Qf, ChartKind::A), Bf = pullback(Pf, Qf, ChartKind::B);
        if (Ag.a_order < Ag.b_order || Af.a_order < Af.b_order)
            throw Error(ErrorKind::NotLocallyBounded, "function is not locally bounded");
        bool g_vanishes = Ag.a_order > Ag.b_order, f_vanishes = Af.a_order > Af.b_order;
        UPoly<AlgNum> qg = restrict_to_axis(Ag.q_tilde, 0), qf = restrict_to_axis(Af.q_tilde, 0);
        UPoly<AlgNum> pf = restrict_to_axis(Af.p_tilde, 0), pg = restrict_to_axis(Ag.p_tilde, 0);

        if (g_vanishes && !f_vanishes) {
            AlgNum v0(rational_avoiding(std::vector<UPoly<AlgNum>>{qg, qf, pf, UPoly<AlgNum>::monomial(1, AlgNum(1L))}));
            auto arc = line(M, AlgNum(1L), v0);
            LBR_ENSURE(arc, "fiber counterexample failed to validate");
            return arc;
        }
        if (!g_vanishes && !f_vanishes) {
            for (const AlgNum& z : real_roots(pg, tower)) {
                if (evaluate(qg, z).is_zero() || evaluate(qf, z).is_zero()) continue;
                if (evaluate(pf, z).is_zero()) continue;
                auto arc = line(M, AlgNum(1L), z);
                LBR_ENSURE(arc, "fiber counterexample failed to validate");
                return arc;
            }
        }
        AlgNum qgb = coefficient_of(Bg.q_tilde, {0, 0}), qfb = coefficient_of(Bf.q_tilde, {0, 0});
        if (!qgb.is_zero() && !qfb.is_zero()) {
            bool gz = g_vanishes || coefficient_of(Bg.p_tilde, {0, 0}).is_zero();
            bool fz = f_vanishes || coefficient_of(Bf.p_tilde, {0, 0}).is_zero();
            if (gz && !fz) {
                auto arc = line(M, AlgNum(0L), AlgNum(1L));
                LBR_ENSURE(arc, "vertical counterexample failed to validate");
                return arc;
            }
        }

        unsigned eg = Ag.a_order - Ag.b_order, ef = Af.a_order - Af.b_order;
        for (const AlgNum& beta : real_roots(qg * qf, tower)) {
            std::vector<AlgNum> c{AlgNum(0L), beta};
            AlgPoly Pg1 = shift(AlgPoly(exceptional_power(0, eg) * Ag.p_tilde), c), Qg1 = shift(Ag.q_tilde, c);
            AlgPoly Pf1 = shift(AlgPoly(exceptional_power(0, ef) * Af.p_tilde), c), Qf1 = shift(Af.q_tilde, c);
            TowerPtr t1 = beta.is_rational() ? tower : beta.tower();
            if (auto arc = walk(Pg1, Qg1, Pf1, Qf1, chart_a_child_map(M, beta), t1, depth + 1)) return arc;
        }
        if (qgb.is_zero() || qfb.is_zero()) {
            AlgPoly Pg1 = exceptional_power(1, eg) * Bg.p_tilde, Pf1 = exceptional_power(1, ef) * Bf.p_tilde;
            if (auto arc = walk(Pg1, Bg.q_tilde, Pf1, Bf.q_tilde, chart_b_child_map(M), tower, depth + 1)) return arc;
        }
        return std::nullopt;
    }

    const RationalFunction& g_;
    const RationalFunction& f_;
    ResolveOptions options_;
};

void add_points(std::vector<Point>& out, const std::vector<Point>& pts) {
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : out) {
            try {
                dup = dup || same_point(p, q);
            } catch (const Error& e) {
                // Points in unrelated towers are compared through their rational images.
                if (e.kind() != ErrorKind::IncompatibleTowers) throw;
                dup = dup || (compare(to_real_algebraic(p[0]), to_real_algebraic(q[0])) == 0 &&
                              compare(to_real_algebraic(p[1]), to_real_algebraic(q[1])) == 0);
            }
        }
        if (!dup) out.push_back(p);
    }
}

std::vector<Point> finite_zeros(const Poly& p) {
    if (p.is_constant()) return {};
    ZeroAnalysis a = real_zero_analysis(p);
    LBR_ENSURE(a.finite, "expected a finite real zero set");
    return a.points;
}

}  // namespace

Inclusion zero_set_included(const RationalFunction& g, const RationalFunction& f, const ResolveOptions& options) {
    GlobalVerdict vg, vf;
    require_bounded(g, options, &vg);
    require_bounded(f, options, &vf);
    Inclusion r;
    if (g.is_zero()) {
        // Every arc lies in the zero set of g.
        if (f.is_zero()) {
            r.included = true;
            return r;
        }
        AlgPoly fd = to_alg(f.den()), fn = to_alg(f.num());
        Point p;
        for (std::size_t i = 0; p.empty(); ++i) {
            Point q = rational_point({simple_rational(i % 7), simple_rational(i / 7)});
            if (!evaluate(fd, q).is_zero() && !evaluate(fn, q).is_zero()) p = q;
        }
        r.counterexample = map_line_arc(translation_map(p), AlgNum(1L), AlgNum(0L));
        return r;
    }
    if (f.is_zero()) {
        r.included = true;
        return r;
    }
    Poly a = squarefree_part(g.num());
    Poly a1 = a.is_constant() ? a : divide_exact(a, poly_gcd(a, f.num()));
    Poly common_den = a1.is_constant() ? a1 : poly_gcd(a1, f.den());
    Poly a2 = a1.is_constant() ? a1 : divide_exact(a1, common_den);
    if (!a2.is_constant()) {
        Poly avoid = f.num() * g.den() * f.den();
        if (auto p = real_curve_point(a2, avoid)) {
            std::vector<AlgPoly> M = translation_map(*p);
            for (std::size_t i = 0; i < 16 && !r.counterexample; ++i) {
                Arc arc = map_line_arc(M, AlgNum(1L), AlgNum(simple_rational(i)));
                if (in_arc_zero_set(g, arc) && !in_arc_zero_set(f, arc)) r.counterexample = arc;
            }
            LBR_ENSURE(r.counterexample, "curve counterexample failed to validate");
            return r;
        }
    }
    std::vector<Point> candidates;
    add_points(candidates, finite_zeros(a2));
    add_points(candidates, finite_zeros(common_den));
    add_points(candidates, vg.indeterminacy);
    AlgPoly gn = to_alg(g.num());
    for (const auto& p : vf.indeterminacy)
        if (evaluate(gn, p).is_zero()) add_points(candidates, {p});

    JointWalk walk(g, f, options);
    for (const auto& p : candidates) {
        if (auto arc = walk.at(p)) {
            r.counterexample = std::move(arc);
            return r;
        }
    }
    r.included = true;
    return r;
}

LojaResult loja_exponent(const RationalFunction& f, const RationalFunction& g, unsigned n_max,
                         const ResolveOptions& options) {
    if (g.is_zero()) throw Error(ErrorKind::Precondition, "the divisor must be nonzero");
    LojaResult r;
    Inclusion inc = zero_set_included(g, f, options);
    if (!inc.included) {
        r.status = SearchStatus::PreconditionFailed;
        r.counterexample = std::move(inc.counterexample);
        return r;
    }
    std::optional<GlobalVerdict> previous;
    RationalFunction power = RationalFunction::constant(2, Rational(1));
    for (unsigned n = 1; n <= n_max; ++n) {
        power = power * f;
        GlobalVerdict v = is_locally_bounded(power / g, options);
        if (v.bounded) {
            r.status = SearchStatus::Found;
            r.exponent = n;
            r.certificate = std::move(v);
            r.refutation = std::move(previous);
            return r;
        }
        LBR_ENSURE(v.witness, "unbounded verdict without witness");
        previous = std::move(v);
    }
    r.status = SearchStatus::Exhausted;
    r.exponent = n_max;
    return r;
}

RadicalResult radical_member(const RationalFunction& f, const std::vector<RationalFunction>& generators,
                             unsigned n_max, const ResolveOptions& options) {
    RadicalResult r;
    for (const auto& gi : generators) require_bounded(gi, options);
    // A principal ideal keeps its generator; otherwise <g1, ..., gk> and <sum gi^2> have
    // the same radical.
    r.g = generators.size() == 1 ? generators.front() : sum_of_squares(generators);
    if (r.g.is_zero()) {
        // The zero ideal: only the zero function is a member.
        require_bounded(f, options);
        if (f.is_zero()) {
            r.status = SearchStatus::Found;
            r.exponent = 1;
            r.h = RationalFunction::constant(2, Rational(0));
        } else {
            r.status = SearchStatus::PreconditionFailed;
            r.counterexample = zero_set_included(r.g, f, options).counterexample;
        }
        return r;
    }
    LojaResult l = loja_exponent(f, r.g, n_max, options);
    r.status = l.status;
    r.exponent = l.exponent;
    r.counterexample = l.counterexample;
    if (l.status == SearchStatus::Found) {
        RationalFunction h = pow(f, static_cast<int>(l.exponent)) / r.g;
        LBR_ENSURE(h * r.g == pow(f, static_cast<int>(l.exponent)), "radical identity failed");
        r.h = h;
    }
    r.search = std::move(l);
    return r;
}

NullstellensatzResult weak_nullstellensatz(const std::vector<RationalFunction>& generators,
                                           const ResolveOptions& options) {
    NullstellensatzResult r;
    for (const auto& gi : generators) require_bounded(gi, options);
    r.sum_of_squares = sum_of_squares(generators);
    ZeroSetDescription z = zero_set(r.sum_of_squares, options);
    if (!z.empty()) {
        if (!z.isolated_points.empty()) {
            r.common_zero = z.isolated_points.front();
        } else {
            ZeroPoint zp;
            zp.point = *z.curve_sample;
            zp.certificate = contains(r.sum_of_squares, zp.point, options);
            r.common_zero = zp;
        }
        return r;
    }
    RationalFunction total = RationalFunction::constant(2, Rational(0));
    for (const auto& fi : generators) {
        RationalFunction a = fi / r.sum_of_squares;
        require_bounded(a, options);
        total = total + a * fi;
        r.coefficients.push_back(a);
    }
    LBR_ENSURE(total == RationalFunction::constant(2, Rational(1)), "Nullstellensatz identity failed");
    r.unit = true;
    return r;
}

InvertibilityResult is_invertible(const RationalFunction& f, const ResolveOptions& options) {
    InvertibilityResult r;
    ZeroSetDescription z = zero_set(f, options);
    if (!z.empty()) {
        if (z.curve_sample) {
            ZeroPoint zp;
            zp.point = *z.curve_sample;
            zp.certificate = contains(f, zp.point, options);
            r.zeros.push_back(zp);
        }
        for (const auto& p : z.isolated_points) r.zeros.push_back(p);
        return r;
    }
    RationalFunction inv = RationalFunction::reduce(f.den(), f.num());
    require_bounded(inv, options);
    LBR_ENSURE(inv * f == RationalFunction::constant(2, Rational(1)), "inverse identity failed");
    r.invertible = true;
    r.inverse = inv;
    return r;
}

RegulousResult is_regulous_at(const RationalFunction& f, const Point& pt, const ResolveOptions& options) {
    RegulousResult r;
    r.interval = value_set(f, pt, options);
    r.regulous = r.interval.is_point();
    return r;
}

}  // namespace lbr
