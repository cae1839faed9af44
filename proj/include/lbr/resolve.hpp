#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "lbr/arcs.hpp"
#include "lbr/ratfunc.hpp"

namespace lbr {

/// Chart A: x = u, y = u*v (exceptional line u = 0, fiber coordinate v).
/// Chart B: x = u*v, y = v (exceptional line v = 0, fiber coordinate u).
enum class ChartKind { A, B };

const char* to_string(ChartKind kind);

/// f o chart = e^(a_order - b_order) * p_tilde / q_tilde with e the exceptional coordinate.
struct PulledBack {
    unsigned a_order = 0;
    unsigned b_order = 0;
    AlgPoly p_tilde;
    AlgPoly q_tilde;
};

/// Pullback of p/q (arity 2, centre already at the origin) through one chart.
PulledBack pullback(const AlgPoly& p, const AlgPoly& q, ChartKind chart);
PulledBack pullback(const RationalFunction& f, ChartKind chart);

/// Reduced composition of f with the chart maps applied in order (each at the origin).
RationalFunction pullback_function(const RationalFunction& f, const std::vector<ChartKind>& path);

struct ResolutionNode;

struct FiberChild {
    ChartKind chart;
    /// Fiber coordinate of the blown-up point on the exceptional line.
    AlgNum fiber;
    std::unique_ptr<ResolutionNode> node;
};

/// One blowup of the recursion. Regular nodes (q(centre) != 0) have no charts.
struct ResolutionNode {
    /// Centre in original coordinates.
    Point center;
    unsigned depth = 0;
    bool regular = false;
    /// Value at a regular centre.
    AlgNum value;
    PulledBack chart_a;
    PulledBack chart_b;
    std::vector<FiberChild> children;

    std::size_t size() const;
    unsigned height() const;
    /// Largest tower height among fiber coordinates in the subtree.
    unsigned max_tower_height() const;
};

struct ResolveOptions {
    unsigned max_depth = 64;
};

struct Witness {
    Arc arc;
    ArcLimit limit;
};

struct LocalVerdict {
    bool bounded = false;
    std::shared_ptr<const ResolutionNode> tree;
    std::optional<Witness> witness;
};

/// Decides local boundedness of f (arity 2) at pt. Unbounded verdicts carry a witness
/// arc in original coordinates whose composition with f has negative order.
LocalVerdict is_locally_bounded_at(const RationalFunction& f, const Point& pt, const ResolveOptions& options = {});

struct PointCertificate {
    Point point;
    std::shared_ptr<const ResolutionNode> tree;
};

struct GlobalVerdict {
    bool bounded = false;
    std::vector<Point> indeterminacy;
    std::vector<PointCertificate> certificates;
    std::optional<Witness> witness;
    /// A point of a one-dimensional real zero set of the denominator, when one exists.
    std::optional<Point> curve_witness;
};

GlobalVerdict is_locally_bounded(const RationalFunction& f, const ResolveOptions& options = {});

struct ValueInterval {
    RealAlgebraic lo;
    RealAlgebraic hi;
    bool lo_attained = true;
    bool hi_attained = true;

    bool is_point() const { return compare(lo, hi) == 0; }
    bool contains(const RealAlgebraic& x) const { return compare(lo, x) <= 0 && compare(x, hi) <= 0; }
};

/// Set of limits of f along arcs converging to pt. Throws NotLocallyBounded when f is
/// unbounded at pt; regular points give the singleton {f(pt)}.
ValueInterval value_set(const RationalFunction& f, const Point& pt, const ResolveOptions& options = {});
/// Value set read off an existing certificate.
ValueInterval value_set(const ResolutionNode& tree);

}  // namespace lbr
