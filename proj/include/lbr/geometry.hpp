#pragma once

#include <optional>
#include <vector>

#include "lbr/resolve.hpp"

namespace lbr {

/// Why a point belongs to a zero set: the function is regular there with value 0, or
/// 0 lies in its value set at an indeterminacy point.
struct Membership {
    bool member = false;
    bool regular = false;
    /// Value at a regular point.
    AlgNum value;
    /// Value set at an indeterminacy point.
    std::optional<ValueInterval> interval;
};

struct ZeroPoint {
    Point point;
    Membership certificate;
};

struct ZeroSetDescription {
    /// Squarefree part of the numerator when its real zero set is one-dimensional.
    std::optional<Poly> curve_part;
    /// A real point of the curve part, as a sample.
    std::optional<Point> curve_sample;
    /// Isolated regular zeros and indeterminacy points whose value set contains 0.
    std::vector<ZeroPoint> isolated_points;
    /// Indeterminacy points whose value set misses 0.
    std::vector<ZeroPoint> excluded_indet_points;

    bool empty() const { return !curve_part && isolated_points.empty(); }
    /// Membership of an arbitrary point, read off the description.
    bool contains(const Point& pt) const;
};

/// Throws NotLocallyBounded unless f is certified bounded.
ZeroSetDescription zero_set(const RationalFunction& f, const ResolveOptions& options = {});
ZeroSetDescription zero_set_ideal(const std::vector<RationalFunction>& generators, const ResolveOptions& options = {});

Membership contains(const RationalFunction& f, const Point& pt, const ResolveOptions& options = {});

struct Inclusion {
    bool included = false;
    /// Arc along which g tends to 0 but f does not.
    std::optional<Arc> counterexample;
};

/// Decides whether every arc along which g tends to 0 also sends f to 0.
Inclusion zero_set_included(const RationalFunction& g, const RationalFunction& f, const ResolveOptions& options = {});

enum class SearchStatus { Found, PreconditionFailed, Exhausted };

struct LojaResult {
    SearchStatus status = SearchStatus::Exhausted;
    unsigned exponent = 0;
    /// Certificate for f^N / g.
    std::optional<GlobalVerdict> certificate;
    /// Unbounded verdict for f^(N-1) / g when N > 1.
    std::optional<GlobalVerdict> refutation;
    std::optional<Arc> counterexample;
};

/// Least N <= n_max with f^N / g locally bounded, after checking zero-set inclusion.
LojaResult loja_exponent(const RationalFunction& f, const RationalFunction& g, unsigned n_max = 16,
                         const ResolveOptions& options = {});

struct RadicalResult {
    SearchStatus status = SearchStatus::Exhausted;
    unsigned exponent = 0;
    /// f^N = h * g with g the generator of a principal ideal, else the sum of squares.
    std::optional<RationalFunction> h;
    RationalFunction g;
    std::optional<Arc> counterexample;
    std::optional<LojaResult> search;
};

RadicalResult radical_member(const RationalFunction& f, const std::vector<RationalFunction>& generators,
                             unsigned n_max = 16, const ResolveOptions& options = {});

struct NullstellensatzResult {
    bool unit = false;
    /// a_i with sum a_i f_i = 1.
    std::vector<RationalFunction> coefficients;
    std::optional<ZeroPoint> common_zero;
    RationalFunction sum_of_squares;
};

NullstellensatzResult weak_nullstellensatz(const std::vector<RationalFunction>& generators,
                                           const ResolveOptions& options = {});

struct InvertibilityResult {
    bool invertible = false;
    std::optional<RationalFunction> inverse;
    std::vector<ZeroPoint> zeros;
};

InvertibilityResult is_invertible(const RationalFunction& f, const ResolveOptions& options = {});

struct RegulousResult {
    bool regulous = false;
    ValueInterval interval;
};

RegulousResult is_regulous_at(const RationalFunction& f, const Point& pt, const ResolveOptions& options = {});

}  // namespace lbr
