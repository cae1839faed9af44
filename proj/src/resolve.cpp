#include "lbr/resolve.hpp"

#include <algorithm>

#include "chart_util.hpp"

namespace lbr {

const char* to_string(ChartKind kind) { return kind == ChartKind::A ? "A" : "B"; }

PulledBack pullback(const AlgPoly& p, const AlgPoly& q, ChartKind chart) {
    LBR_ENSURE(p.arity() == 2 && q.arity() == 2, "pullback needs two variables");
    LBR_ENSURE(!q.is_zero(), "pullback of a zero denominator");
    auto transform = [chart](const AlgPoly& f, unsigned& order) {
        AlgPoly out(2);
        if (f.is_zero()) {
            order = 0;
            return out;
        }
        order = f.order();
        for (const auto& [e, c] : f.terms()) {
            unsigned d = e[0] + e[1] - order;
            Exponents ne = chart == ChartKind::A ? Exponents{d, e[1]} : Exponents{e[0], d};
            out.add_term(ne, c);
        }
        return out;
    };
    PulledBack r;
    r.p_tilde = transform(p, r.a_order);
    r.q_tilde = transform(q, r.b_order);
    return r;
}

PulledBack pullback(const RationalFunction& f, ChartKind chart) {
    if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "blowups are implemented in the plane");
    return pullback(to_alg(f.num()), to_alg(f.den()), chart);
}

RationalFunction pullback_function(const RationalFunction& f, const std::vector<ChartKind>& path) {
    if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "blowups are implemented in the plane");
    RationalFunction g = f;
    for (ChartKind c : path) g = substitute(g, detail::chart_map<Rational>(c));
    return g;
}

std::size_t ResolutionNode::size() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.node->size();
    return n;
}

unsigned ResolutionNode::height() const {
    unsigned h = 0;
    for (const auto& c : children) h = std::max(h, 1 + c.node->height());
    return h;
}

unsigned ResolutionNode::max_tower_height() const {
    unsigned h = 0;
    for (const auto& c : children) h = std::max({h, c.fiber.height(), c.node->max_tower_height()});
    return h;
}

namespace {

using namespace detail;

class Engine {
public:
    Engine(const RationalFunction& f, const ResolveOptions& options) : f_(f), options_(options) {}

    std::optional<Witness> witness;

    std::unique_ptr<ResolutionNode> build(const AlgPoly& P, const AlgPoly& Q, const std::vector<AlgPoly>& M,
                                          const TowerPtr& tower, unsigned depth) {
        auto node = std::make_unique<ResolutionNode>();
        node->depth = depth;
        for (const auto& m : M) node->center.push_back(m.constant_term());
        AlgNum q0 = Q.constant_term();
        if (!q0.is_zero()) {
            node->regular = true;
            node->value = P.constant_term() / q0;
            return node;
        }
        if (depth >= options_.max_depth) throw DepthExceeded(options_.max_depth);
        node->chart_a = pullback(P, Q, ChartKind::A);
        node->chart_b = pullback(P, Q, ChartKind::B);
        const PulledBack& A = node->chart_a;
        const PulledBack& B = node->chart_b;
        if (A.a_order < A.b_order) {
            make_witness(A, M);
            return nullptr;
        }
        unsigned excess = A.a_order - A.b_order;

        UPoly<AlgNum> fiber = restrict_to_axis(A.q_tilde, 0);
        LBR_ENSURE(!fiber.is_zero(), "pulled-back denominator divisible by the exceptional coordinate");
        for (const AlgNum& beta : real_roots(fiber, tower)) {
            AlgPoly P1 = shift(AlgPoly(exceptional_power(0, excess) * A.p_tilde), std::vector<AlgNum>{AlgNum(0L), beta});
            AlgPoly Q1 = shift(A.q_tilde, std::vector<AlgNum>{AlgNum(0L), beta});
            std::vector<AlgPoly> M1 = chart_a_child_map(M, beta);
            TowerPtr t1 = beta.is_rational() ? tower : beta.tower();
            auto child = build(P1, Q1, M1, t1, depth + 1);
            if (!child) return nullptr;
            node->children.push_back({ChartKind::A, beta, std::move(child)});
        }
        if (coefficient_of(B.q_tilde, {0, 0}).is_zero()) {
            AlgPoly P1 = exceptional_power(1, excess) * B.p_tilde;
            std::vector<AlgPoly> M1 = chart_b_child_map(M);
            auto child = build(P1, B.q_tilde, M1, tower, depth + 1);
            if (!child) return nullptr;
            node->children.push_back({ChartKind::B, AlgNum(0L), std::move(child)});
        }
        return node;
    }

private:
    // Arc (u, v) = (t, v0) in chart A, i.e. local (t, v0 t), mapped to original coordinates.
    void make_witness(const PulledBack& A, const std::vector<AlgPoly>& M) {
        std::vector<UPoly<AlgNum>> avoid{restrict_to_axis(A.q_tilde, 0), UPoly<AlgNum>::monomial(1, AlgNum(1L))};
        UPoly<AlgNum> pf = restrict_to_axis(A.p_tilde, 0);
        if (!pf.is_zero()) avoid.push_back(pf);
        AlgNum v0(rational_avoiding(avoid));
        Arc arc = map_line_arc(M, AlgNum(1L), v0);
        ArcLimit limit = compose(f_, arc);
        LBR_ENSURE(limit.infinite, "witness arc does not have negative order");
        witness = Witness{std::move(arc), std::move(limit)};
    }

    const RationalFunction& f_;
    ResolveOptions options_;
};

}  // namespace

LocalVerdict is_locally_bounded_at(const RationalFunction& f, const Point& pt, const ResolveOptions& options) {
    if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "local boundedness is decided in the plane");
    if (pt.size() != 2) throw Error(ErrorKind::Precondition, "point must have two coordinates");
    TowerPtr tower = deepest_tower(pt);
    AlgPoly P = shift(to_alg(f.num()), pt);
    AlgPoly Q = shift(to_alg(f.den()), pt);
    std::vector<AlgPoly> M = translation_map(pt);
    Engine engine(f, options);
    auto tree = engine.build(P, Q, M, tower_of(Q, tower_of(P, tower)), 0);
    LocalVerdict v;
    if (tree) {
        v.bounded = true;
        v.tree = std::move(tree);
    } else {
        v.witness = std::move(engine.witness);
    }
    return v;
}

namespace {

std::optional<Witness> transversal_witness(const RationalFunction& f, const Point& w) {
    static const long directions[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}};
    for (const auto& d : directions) {
        std::vector<PuiseuxPoly> entries;
        for (int i = 0; i < 2; ++i) {
            PuiseuxPoly e = PuiseuxPoly::constant(w[i]);
            if (d[i] != 0) e = e + PuiseuxPoly::monomial(AlgNum(d[i]), Rational(1));
            entries.push_back(e);
        }
        Arc arc = make_arc(std::move(entries));
        try {
            ArcLimit l = compose(f, arc);
            if (l.infinite) return Witness{std::move(arc), std::move(l)};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ArcInsideIndeterminacy) throw;
        }
    }
    return std::nullopt;
}

}  // namespace

GlobalVerdict is_locally_bounded(const RationalFunction& f, const ResolveOptions& options) {
    if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "local boundedness is decided in the plane");
    GlobalVerdict g;
    IndetReport report = indeterminacy_points(f);
    if (report.real_curve_witness) {
        g.curve_witness = report.real_curve_witness;
        std::optional<Point> w = real_curve_point(f.den(), f.num());
        if (w) {
            g.curve_witness = w;
            g.witness = transversal_witness(f, *w);
        }
        if (!g.witness) {
            LocalVerdict lv = is_locally_bounded_at(f, *g.curve_witness, options);
            LBR_ENSURE(!lv.bounded, "function bounded near a curve of poles");
            g.witness = std::move(lv.witness);
        }
        return g;
    }
    g.indeterminacy = report.points;
    for (const auto& p : report.points) {
        LocalVerdict lv = is_locally_bounded_at(f, p, options);
        if (!lv.bounded) {
            g.witness = std::move(lv.witness);
            return g;
        }
        g.certificates.push_back({p, lv.tree});
    }
    g.bounded = true;
    return g;
}

namespace {

using namespace detail;

struct Extremes {
    std::optional<RealAlgebraic> lo, hi;

    void add(const RealAlgebraic& r) {
        if (!lo || compare(r, *lo) < 0) lo = r;
        if (!hi || compare(r, *hi) > 0) hi = r;
    }
    void add(const AlgNum& a) { add(to_real_algebraic(a)); }
};

void collect(const ResolutionNode& node, Extremes& ex) {
    if (node.regular) {
        ex.add(node.value);
        return;
    }
    const PulledBack& A = node.chart_a;
    const PulledBack& B = node.chart_b;
    UPoly<AlgNum> qq = restrict_to_axis(A.q_tilde, 0);
    if (A.a_order > A.b_order) {
        ex.add(AlgNum(0L));
    } else {
        UPoly<AlgNum> pp = restrict_to_axis(A.p_tilde, 0);
        AlgNum v0(rational_avoiding(std::vector<UPoly<AlgNum>>{qq}));
        ex.add(evaluate(pp, v0) / evaluate(qq, v0));
        UPoly<AlgNum> crit = derivative(pp) * qq - pp * derivative(qq);
        if (!crit.is_zero()) {
            TowerPtr t = tower_of(A.q_tilde, tower_of(A.p_tilde, nullptr));
            for (const AlgNum& g : real_roots(crit, t)) {
                AlgNum d = evaluate(qq, g);
                if (!d.is_zero()) ex.add(evaluate(pp, g) / d);
            }
        }
        AlgNum qb = coefficient_of(B.q_tilde, {0, 0});
        if (!qb.is_zero()) ex.add(coefficient_of(B.p_tilde, {0, 0}) / qb);
    }
    for (const auto& c : node.children) collect(*c.node, ex);
}

}  // namespace

ValueInterval value_set(const ResolutionNode& tree) {
    Extremes ex;
    collect(tree, ex);
    LBR_ENSURE(ex.lo && ex.hi, "empty value set");
    return {*ex.lo, *ex.hi, true, true};
}

ValueInterval value_set(const RationalFunction& f, const Point& pt, const ResolveOptions& options) {
    if (f.arity() != 2) throw Error(ErrorKind::UnsupportedDimension, "value sets are computed in the plane");
    if (pt.size() != 2) throw Error(ErrorKind::Precondition, "point must have two coordinates");
    AlgNum d = evaluate(to_alg(f.den()), pt);
    if (!d.is_zero()) {
        RealAlgebraic v = to_real_algebraic(evaluate(to_alg(f.num()), pt) / d);
        return {v, v, true, true};
    }
    LocalVerdict lv = is_locally_bounded_at(f, pt, options);
    if (!lv.bounded) throw Error(ErrorKind::NotLocallyBounded, "function is not locally bounded at the point");
    return value_set(*lv.tree);
}

}  // namespace lbr
