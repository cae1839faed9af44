#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lbr/ratfunc.hpp"

namespace lbr {

struct PuiseuxTerm {
    long numerator;  // exponent = numerator / ramification
    AlgNum coefficient;
};

/// Finite Puiseux polynomial sum c_k t^(k/n) with strictly increasing exponents and
/// no zero coefficients; the ramification n is kept minimal.
class PuiseuxPoly {
public:
    PuiseuxPoly() = default;
    PuiseuxPoly(unsigned ramification, std::vector<PuiseuxTerm> terms);
    static PuiseuxPoly constant(const AlgNum& c);
    /// c * t^e.
    static PuiseuxPoly monomial(const AlgNum& c, const Rational& e);
    /// Polynomial in t (ramification 1), coefficients from the constant term up.
    static PuiseuxPoly from_upoly(const UPoly<AlgNum>& p);

    unsigned ramification() const { return ramification_; }
    const std::vector<PuiseuxTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational exponent(const PuiseuxTerm& t) const { return make_rational(t.numerator, ramification_); }
    /// Lowest exponent; nullopt for the zero polynomial.
    std::optional<Rational> order() const;
    AlgNum constant_term() const;

    friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);

    /// Coefficients as a polynomial in s with t = s^n (n a multiple of the ramification).
    UPoly<AlgNum> in_root_variable(unsigned n) const;

private:
    unsigned ramification_ = 1;
    std::vector<PuiseuxTerm> terms_;
};

/// Validated arc: nonconstant, all entries with nonnegative exponents.
class Arc {
public:
    const std::vector<PuiseuxPoly>& entries() const { return entries_; }
    std::size_t dimension() const { return entries_.size(); }
    unsigned ramification() const;

private:
    friend Arc make_arc(std::vector<PuiseuxPoly> entries);
    std::vector<PuiseuxPoly> entries_;
};

/// Throws ConstantArc or UnboundedArc.
Arc make_arc(std::vector<PuiseuxPoly> entries);
Point limit_point(const Arc& arc);

struct ArcLimit {
    /// nullopt means +infinity (the function vanishes identically along the arc).
    std::optional<Rational> order;
    bool infinite = false;
    /// Limit value when finite.
    AlgNum limit;
    std::optional<AlgNum> leading_coefficient;
};

/// Exact order and limit of f along the arc; throws ArcInsideIndeterminacy.
ArcLimit compose(const RationalFunction& f, const Arc& arc);
bool in_arc_zero_set(const RationalFunction& f, const Arc& arc);

struct ScanBudget {
    unsigned max_exponent_numerator = 6;
    unsigned max_exponent_denominator = 3;
    std::vector<Rational> coefficients = {Rational(0),  Rational(1),    Rational(-1),
                                          Rational(2),  Rational(-2),   make_rational(1, 2),
                                          make_rational(-1, 2), Rational(3), Rational(-3)};

    /// Distinct positive exponents p/q with p and q within the bounds, sorted.
    std::vector<Rational> exponents() const;
};

struct ScanResult {
    /// Distinct finite limits, sorted.
    std::vector<Rational> limits;
    bool found_infinite = false;
    std::size_t evaluated = 0;
    /// Arcs lying inside the denominator's zero set.
    std::size_t skipped = 0;
    std::optional<Arc> infinite_example;
    std::optional<Arc> min_example;
    std::optional<Arc> max_example;
    std::optional<Rational> min() const;
    std::optional<Rational> max() const;
};

/// Evaluates f along pt + (c_1 t^e_1, ..., c_n t^e_n) over the budget's coefficients and
/// exponents; pt must be rational.
ScanResult arc_family_scan(const RationalFunction& f, const std::vector<Rational>& pt, const ScanBudget& budget = {});

}  // namespace lbr
