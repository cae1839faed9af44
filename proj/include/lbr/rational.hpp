#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lbr {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

/// Decimal rendering with `digits` fractional digits, truncated toward zero.
std::string to_decimal(const Rational& r, int digits = 20);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// The rational with the smallest denominator (then smallest magnitude) in the
/// open interval (lo, hi). A missing bound means infinity on that side.
Rational simplest_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi);

/// Exact square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

/// Closed interval with rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    explicit Interval(const Rational& point) : lo(point), hi(point) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    /// Sign of every point of the interval, or 0 when it straddles zero.
    int sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& c, const Interval& a);
Interval pow(const Interval& a, unsigned e);

}  // namespace lbr
