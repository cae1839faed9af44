#pragma once

#include <string>
#include <vector>

#include "lbr/arcs.hpp"
#include "lbr/ratfunc.hpp"

namespace lbr {

/// Variable names used for printing: x, y, z for arity up to 3, else x1..xn.
std::vector<std::string> default_variable_names(std::size_t arity);

/// Parses a rational function in x, y, z or x1..xn; arity 0 infers it (at least 2 for
/// the x, y, z style). Error offsets are 1-based character positions.
RationalFunction parse_function(const std::string& text, std::size_t arity = 0);
Poly parse_polynomial(const std::string& text, std::size_t arity = 0);

/// Parses "(a, b, ...)" with rational expressions or root(poly, lo, hi) entries.
/// Algebraic entries extend `context` (updated to the deepest tower used).
Point parse_point(const std::string& text, TowerPtr& context);
Point parse_point(const std::string& text);

/// Parses "(e1, ..., en)" with Puiseux polynomials in t; validated by make_arc.
Arc parse_arc(const std::string& text, TowerPtr& context);
Arc parse_arc(const std::string& text);

std::string format_rational(const Rational& r);
std::string format_poly(const Poly& p, const std::vector<std::string>& names);
std::string format_poly(const Poly& p);
std::string format_function(const RationalFunction& f, const std::vector<std::string>& names);
std::string format_function(const RationalFunction& f);
/// Rational, or root(poly, lo, hi) in parseable form.
std::string format_real_algebraic(const RealAlgebraic& r);
std::string format_alg(const AlgNum& a);
std::string format_alg_poly(const AlgPoly& p, const std::vector<std::string>& names);
std::string format_upoly(const UPoly<Rational>& p, const std::string& var);
std::string format_point(const Point& p);
std::string format_arc(const Arc& a);

}  // namespace lbr
