#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lbr/roots.hpp"
#include "lbr/upoly.hpp"

namespace lbr {

class TowerNode;
using TowerPtr = std::shared_ptr<const TowerNode>;

/// Element of a real algebraic extension tower Q(a1)(a2)...(ah). The element is a
/// polynomial in the top generator whose coefficients live lower in the same tower.
/// Rationals have no tower. Elements whose representation collapses to a single
/// coefficient are stored at the lower level, so equal rationals compare structurally.
class AlgNum {
public:
    AlgNum() = default;
    AlgNum(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    AlgNum(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)

    /// The top generator of the tower.
    static AlgNum generator(const TowerPtr& tower);
    /// Builds sum c[i] * g^i for the top generator g of tower, reduced.
    static AlgNum from_coefficients(const TowerPtr& tower, std::vector<AlgNum> c);

    const TowerPtr& tower() const { return tower_; }
    unsigned height() const;
    bool is_rational() const { return !tower_; }
    const Rational& rational() const { return q_; }
    const std::vector<AlgNum>& coefficients() const { return c_; }
    /// Structurally zero (no arithmetic needed).
    bool is_trivially_zero() const { return !tower_ && sgn(q_) == 0; }

    bool is_zero() const;
    int sign() const;
    AlgNum inverse() const;
    /// Closed interval containing the value, computed with generator intervals of
    /// width at most 2^-bits.
    Interval enclosure(unsigned bits) const;

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
    AlgNum operator-() const;
    AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
    AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
    AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }

    friend bool operator==(const AlgNum& a, const AlgNum& b) { return (a - b).is_zero(); }
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }
    friend bool operator<(const AlgNum& a, const AlgNum& b) { return (a - b).sign() < 0; }
    friend bool operator>(const AlgNum& a, const AlgNum& b) { return b < a; }
    friend bool operator<=(const AlgNum& a, const AlgNum& b) { return !(b < a); }
    friend bool operator>=(const AlgNum& a, const AlgNum& b) { return !(a < b); }

private:
    TowerPtr tower_;
    Rational q_;
    std::vector<AlgNum> c_;
};

template <>
struct FieldTraits<AlgNum> {
    static AlgNum zero() { return AlgNum(0L); }
    static AlgNum one() { return AlgNum(1L); }
    static bool is_zero(const AlgNum& x) { return x.is_zero(); }
    static int sign(const AlgNum& x) { return x.sign(); }
    static AlgNum inverse(const AlgNum& x) { return x.inverse(); }
    static bool is_rational(const AlgNum& x) { return x.is_rational(); }
    static Rational to_rational(const AlgNum& x) { return x.rational(); }

    /// Monic associate; integral primitive when every coefficient is rational.
    template <class P>
    static P normalize(const P& p) {
        bool rational = true;
        for (const auto& [e, c] : p.terms()) rational = rational && c.is_rational();
        if (rational) {
            auto q = p.template map_coefficients<Rational>([](const AlgNum& c) { return c.rational(); });
            q = FieldTraits<Rational>::normalize(q);
            return q.template map_coefficients<AlgNum>([](const Rational& c) { return AlgNum(c); });
        }
        return p.leading_coefficient().inverse() * p;
    }
};

/// One level of a tower: a real root of a squarefree monic polynomial over the parent
/// field, isolated by an open interval (or pinned to an exact rational).
class TowerNode {
public:
    TowerNode(TowerPtr parent, UPoly<AlgNum> defining, Rational lo, Rational hi);

    const TowerPtr& parent() const { return parent_; }
    unsigned height() const { return height_; }
    const UPoly<AlgNum>& defining() const { return defining_; }
    unsigned degree() const { return static_cast<unsigned>(defining_.degree()); }

    /// Isolating interval refined to width at most 2^-bits.
    Interval interval(unsigned bits) const;
    /// Isolating interval as currently refined.
    Interval interval() const;
    /// True when g (a divisor of the defining polynomial over the parent field)
    /// vanishes at this node's root.
    bool is_root_of(const UPoly<AlgNum>& g) const;

private:
    TowerPtr parent_;
    unsigned height_;
    UPoly<AlgNum> defining_;
    mutable std::mutex mutex_;
    mutable Rational lo_;
    mutable Rational hi_;
    mutable bool exact_ = false;
    mutable int sign_lo_ = 0;
};

/// Tower of `a`, or of `b`, whichever is deeper; throws IncompatibleTowers when
/// neither is an ancestor of the other.
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);
bool is_ancestor(const TowerPtr& ancestor, const TowerPtr& t);

/// Tower with a new root of p adjoined; p must be squarefree with coefficients in
/// `parent`, and (lo, hi) must isolate the root.
TowerPtr extend_tower(const TowerPtr& parent, const UPoly<AlgNum>& p, const Rational& lo, const Rational& hi);

/// Distinct real roots of p in increasing order, as elements of extensions of
/// `context` (which must contain every coefficient of p).
std::vector<AlgNum> real_roots(const UPoly<AlgNum>& p, const TowerPtr& context);
std::vector<AlgNum> real_roots(const UPoly<AlgNum>& p);

/// Real algebraic number over Q given by a squarefree integral polynomial and an
/// isolating interval, or an exact rational.
struct RealAlgebraic {
    UPoly<Rational> poly;
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;

    RealAlgebraic() : RealAlgebraic(Rational(0)) {}
    explicit RealAlgebraic(const Rational& r);
    RealAlgebraic(UPoly<Rational> p, Rational l, Rational h);

    bool is_rational() const { return exact.has_value(); }
    void refine(unsigned bits);
    /// Decimal approximation truncated to `digits` fractional digits (advisory).
    std::string approx(int digits = 20) const;
};

RealAlgebraic to_real_algebraic(const AlgNum& a);
AlgNum to_alg_num(const RealAlgebraic& r);
int compare(const RealAlgebraic& a, const RealAlgebraic& b);

/// Squarefree integral polynomial over Q vanishing at a (the squarefree part of its norm).
UPoly<Rational> rational_annihilator(const AlgNum& a);

/// All tower elements' towers must be ancestor-compatible; returns the deepest.
TowerPtr deepest_tower(const std::vector<AlgNum>& values);

std::string to_string(const AlgNum& a);

}  // namespace lbr
