#pragma once

#include <optional>
#include <vector>

#include "lbr/algebraic.hpp"
#include "lbr/mpoly.hpp"

namespace lbr {

using Poly = MPoly<Rational>;
using AlgPoly = MPoly<AlgNum>;
/// A point of R^n with real algebraic coordinates; later coordinates may live in
/// extensions of the towers of earlier ones.
using Point = std::vector<AlgNum>;

Point rational_point(const std::vector<Rational>& coords);
bool is_rational_point(const Point& p);
std::vector<Rational> to_rationals(const Point& p);
bool same_point(const Point& a, const Point& b);

AlgPoly to_alg(const Poly& p);

/// Reduced fraction num/den over Q with den primitive integral and positive leading
/// coefficient (graded lexicographic order).
class RationalFunction {
public:
    RationalFunction() : RationalFunction(Poly::constant(1, Rational(0))) {}
    explicit RationalFunction(const Poly& p);
    /// Reduces p/q; throws ZeroDenominator when q = 0.
    static RationalFunction reduce(const Poly& p, const Poly& q);
    static RationalFunction constant(std::size_t arity, const Rational& c);
    static RationalFunction variable(std::size_t arity, std::size_t index);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    std::size_t arity() const { return num_.arity(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Same function with additional (unused) variables appended.
    RationalFunction with_arity(std::size_t n) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

RationalFunction pow(const RationalFunction& f, int e);

/// num(pt)/den(pt); throws OutsideDomain when den(pt) = 0.
AlgNum evaluate(const RationalFunction& f, const Point& pt);

/// Reduced composition f(maps[0], ..., maps[n-1]); throws IdenticallyZeroDenominator.
RationalFunction substitute(const RationalFunction& f, const std::vector<Poly>& maps);
RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& maps);

/// Product of the distinct irreducible factors of a nonzero polynomial in two variables.
Poly squarefree_part(const Poly& p);

struct ZeroAnalysis {
    bool finite = true;
    /// All real zeros when finite.
    std::vector<Point> points;
    /// A real zero on a one-dimensional component when not finite.
    std::optional<Point> witness;
    /// When not finite and a polynomial to avoid was given: the result of real_curve_point.
    std::optional<Point> curve_point;
};

/// Decides whether the real zero set of q (arity 2) is finite and lists it if so.
/// With `avoid`, an infinite zero set also gets a curve point as in real_curve_point.
ZeroAnalysis real_zero_analysis(const Poly& q, const std::optional<Poly>& avoid = std::nullopt);

/// A real zero of q (arity 2) on a one-dimensional component of its real zero set at
/// which `avoid` does not vanish; nullopt when there is none. `avoid` should be coprime
/// to q, so that only finitely many curve points are excluded.
std::optional<Point> real_curve_point(const Poly& q, const Poly& avoid);

struct IndetReport {
    std::vector<Point> points;
    std::optional<Point> real_curve_witness;
};

IndetReport indeterminacy_points(const RationalFunction& f);

/// Candidate rationals 0, 1, -1, 2, -2, 1/2, -1/2, 3, ... in order of simplicity.
Rational simple_rational(std::size_t index);

/// The first simple rational at which no polynomial in `avoid` vanishes; every
/// polynomial must be nonzero.
template <class K>
Rational rational_avoiding(const std::vector<UPoly<K>>& avoid) {
    for (std::size_t i = 0;; ++i) {
        Rational c = simple_rational(i);
        bool ok = true;
        for (const auto& p : avoid) {
            LBR_ENSURE(!p.is_zero(), "cannot avoid the roots of the zero polynomial");
            if (FieldTraits<K>::is_zero(evaluate<K>(p, K(c)))) {
                ok = false;
                break;
            }
        }
        if (ok) return c;
    }
}

}  // namespace lbr
