#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lbr/arcs.hpp"
#include "lbr/ratfunc.hpp"

namespace lbr {

/// h(x, y) = f(x)^2 + g(y) on disjoint variable blocks, arity m + k.
RationalFunction product_zero_function(const RationalFunction& f, const RationalFunction& g);

/// (z - x^2/(x^2+y^2))^2 + x^2 + y^2; zero set {(0, 0, c) : 0 <= c <= 1}.
RationalFunction segment_function();
/// (2z/(1+z^2) - x^2/(x^2+y^2))^2 + x^2 + y^2; zero set {(0, 0, z) : z >= 0}.
RationalFunction semiline_function();
/// (z - alpha x^2/(x^2+y^2))^2 + x^2 + y^2; zero set {(0, 0, c) : 0 <= c <= alpha}.
RationalFunction chain_function(const Rational& alpha);
/// x^2/(x^2 + (y - k)^2).
RationalFunction pole_family(long k);

/// Sum of the nonnegative semiline blocks over (s_i, t_i, y_i), i = 1..k, in that variable order.
/// Its zero set is {s = t = 0, y_i >= 0 for all i}.
RationalFunction orthant_zero_function(unsigned k);

/// Entries (s, t) of an arc with s^2/(s^2+t^2) -> c, for 0 <= c <= 1; nullopt otherwise.
std::optional<std::vector<PuiseuxPoly>> direction_arc(const Rational& c);
/// Arc entries (s, t, y0) sending the semiline function to 0; nullopt when y0 < 0.
std::optional<std::vector<PuiseuxPoly>> semiline_block_arc(const Rational& y0);

struct EncodedSet {
    std::size_t input_arity = 0;
    std::vector<Poly> generators;
    /// Variables: inputs, then y_1..y_k, then (s_i, t_i) pairs.
    RationalFunction h;
    /// x -> (x, p_1(x), ..., p_k(x), 0, ..., 0), one polynomial per ambient coordinate.
    std::vector<Poly> embedding;
    std::vector<std::size_t> projection;

    std::size_t ambient_arity() const { return input_arity + 3 * generators.size(); }
    std::vector<std::string> variable_names() const;
    std::vector<Rational> embed(const std::vector<Rational>& x) const;
};

/// Encodes {x : p_i(x) >= 0} as the zero set of h projected to the first n coordinates.
EncodedSet encode_closed_sa_set(const std::vector<Poly>& generators);

/// Arc through embed(x) along which h tends to 0, built block by block; nullopt when
/// some p_i(x) < 0.
std::optional<Arc> membership_arc(const EncodedSet& set, const std::vector<Rational>& x);

struct GalleryEntry {
    std::string name;
    std::string description;
    RationalFunction f;
};

std::vector<GalleryEntry> gallery();
/// Throws Precondition for an unknown name.
const GalleryEntry& gallery_entry(const std::string& name);

}  // namespace lbr
