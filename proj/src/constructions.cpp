#include "lbr/constructions.hpp"

#include "lbr/io.hpp"

namespace lbr {

namespace {

// f with its variables moved to positions offset.. of an arity-n function.
RationalFunction embed_variables(const RationalFunction& f, std::size_t n, std::size_t offset) {
    std::vector<Poly> maps;
    for (std::size_t i = 0; i < f.arity(); ++i) maps.push_back(Poly::variable(n, offset + i));
    return substitute(f, maps);
}

RationalFunction var(std::size_t n, std::size_t i) { return RationalFunction::variable(n, i); }

// (c(z) - x^2/(x^2+y^2))^2 + x^2 + y^2 on variables (x, y, z) at the given positions.
RationalFunction block(std::size_t n, std::size_t ix, std::size_t iy, const RationalFunction& c) {
    RationalFunction x = var(n, ix), y = var(n, iy);
    RationalFunction r = c - x * x / (x * x + y * y);
    return r * r + x * x + y * y;
}

RationalFunction semiline_value(std::size_t n, std::size_t iz) {
    RationalFunction z = var(n, iz);
    return RationalFunction::constant(n, Rational(2)) * z / (RationalFunction::constant(n, Rational(1)) + z * z);
}

}  // namespace

RationalFunction product_zero_function(const RationalFunction& f, const RationalFunction& g) {
    std::size_t n = f.arity() + g.arity();
    RationalFunction a = embed_variables(f, n, 0), b = embed_variables(g, n, f.arity());
    return a * a + b * b;
}

RationalFunction segment_function() { return block(3, 0, 1, var(3, 2)); }

RationalFunction semiline_function() { return block(3, 0, 1, semiline_value(3, 2)); }

RationalFunction chain_function(const Rational& alpha) {
    if (sgn(alpha) <= 0) throw Error(ErrorKind::Precondition, "the chain parameter must be positive");
    RationalFunction a = RationalFunction::constant(3, alpha);
    RationalFunction x = var(3, 0), y = var(3, 1), z = var(3, 2);
    RationalFunction r = z - a * x * x / (x * x + y * y);
    return r * r + x * x + y * y;
}

RationalFunction pole_family(long k) {
    RationalFunction x = var(2, 0), y = var(2, 1) - RationalFunction::constant(2, Rational(k));
    return x * x / (x * x + y * y);
}

RationalFunction orthant_zero_function(unsigned k) {
    if (k == 0) throw Error(ErrorKind::Precondition, "the orthant needs at least one block");
    std::size_t n = 3 * k;
    RationalFunction h = RationalFunction::constant(n, Rational(0));
    for (unsigned i = 0; i < k; ++i) {
        h = h + block(n, 3 * i, 3 * i + 1, semiline_value(n, 3 * i + 2));
    }
    return h;
}

std::optional<std::vector<PuiseuxPoly>> direction_arc(const Rational& c) {
    if (sgn(c) < 0 || c > 1) return std::nullopt;
    PuiseuxPoly t = PuiseuxPoly::monomial(AlgNum(1L), Rational(1));
    if (sgn(c) == 0) return std::vector<PuiseuxPoly>{PuiseuxPoly(), t};
    if (c == 1) return std::vector<PuiseuxPoly>{t, PuiseuxPoly()};
    // 1/(1 + a^2) = c along (t, a t).
    Rational a2 = (1 - c) / c;
    AlgNum a;
    if (auto r = rational_sqrt(a2)) {
        a = AlgNum(*r);
    } else {
        auto roots = real_roots(UPoly<AlgNum>(std::vector<AlgNum>{AlgNum(-a2), AlgNum(0L), AlgNum(1L)}));
        a = roots.back();
    }
    return std::vector<PuiseuxPoly>{t, PuiseuxPoly::monomial(a, Rational(1))};
}

std::optional<std::vector<PuiseuxPoly>> semiline_block_arc(const Rational& y0) {
    if (sgn(y0) < 0) return std::nullopt;
    auto st = direction_arc(2 * y0 / (1 + y0 * y0));
    if (!st) return std::nullopt;
    st->push_back(PuiseuxPoly::constant(AlgNum(y0)));
    return st;
}

std::vector<std::string> EncodedSet::variable_names() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < input_arity; ++i) names.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("y" + std::to_string(i + 1));
    for (std::size_t i = 0; i < generators.size(); ++i) {
        names.push_back("s" + std::to_string(i + 1));
        names.push_back("t" + std::to_string(i + 1));
    }
    return names;
}

std::vector<Rational> EncodedSet::embed(const std::vector<Rational>& x) const {
    if (x.size() != input_arity) throw Error(ErrorKind::Precondition, "point has the wrong dimension");
    std::vector<Rational> out;
    for (const auto& p : embedding) out.push_back(evaluate(p, x));
    return out;
}

EncodedSet encode_closed_sa_set(const std::vector<Poly>& generators) {
    if (generators.empty()) throw Error(ErrorKind::Precondition, "at least one generator is required");
    EncodedSet e;
    e.input_arity = generators.front().arity();
    for (const auto& p : generators)
        if (p.arity() != e.input_arity) throw Error(ErrorKind::Precondition, "generators must share their arity");
    e.generators = generators;
    std::size_t n = e.input_arity, k = generators.size(), N = e.ambient_arity();

    RationalFunction h1 = RationalFunction::constant(N, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        RationalFunction d = embed_variables(RationalFunction(generators[i]), N, 0) - var(N, n + i);
        h1 = h1 + d * d;
    }
    RationalFunction h2 = RationalFunction::constant(N, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t s = n + k + 2 * i;
        h2 = h2 + block(N, s, s + 1, semiline_value(N, n + i));
    }
    e.h = h1 * h1 + h2 * h2;

    for (std::size_t i = 0; i < n; ++i) e.embedding.push_back(Poly::variable(n, i));
    for (const auto& p : generators) e.embedding.push_back(p);
    for (std::size_t i = 0; i < 2 * k; ++i) e.embedding.push_back(Poly(n));
    for (std::size_t i = 0; i < n; ++i) e.projection.push_back(i);
    return e;
}

std::optional<Arc> membership_arc(const EncodedSet& set, const std::vector<Rational>& x) {
    std::vector<Rational> image = set.embed(x);
    std::size_t n = set.input_arity, k = set.generators.size();
    std::vector<PuiseuxPoly> entries;
    for (std::size_t i = 0; i < n + k; ++i) entries.push_back(PuiseuxPoly::constant(AlgNum(image[i])));
    for (std::size_t i = 0; i < k; ++i) {
        auto b = semiline_block_arc(image[n + i]);
        if (!b) return std::nullopt;
        entries.push_back((*b)[0]);
        entries.push_back((*b)[1]);
    }
    return make_arc(std::move(entries));
}

std::vector<GalleryEntry> gallery() {
    std::vector<GalleryEntry> g = {
        {"F1", "x^2/(x^2+y^2): bounded, value set [0,1] at the origin", parse_function("x^2/(x^2+y^2)")},
        {"F2", "y^2/(x^2+y^2): partner of F1 with Z(F1^2+F2^2) empty", parse_function("y^2/(x^2+y^2)")},
        {"F3", "x/(x^2+y^2): unbounded at the origin", parse_function("x/(x^2+y^2)")},
        {"F4", "x^4/(x^2+y^2): regulous, value 0 at the origin", parse_function("x^4/(x^2+y^2)")},
        {"F5", "(x^2+y^4)/(x^2+y^2)", parse_function("(x^2+y^4)/(x^2+y^2)")},
        {"F6", "(x^4+y^2)/(x^2+y^2)", parse_function("(x^4+y^2)/(x^2+y^2)")},
        {"F7", "x*y/(x^2+y^2): value set [-1/2,1/2] at the origin", parse_function("x*y/(x^2+y^2)")},
        {"segment", "zero set is the segment {(0,0,c) : 0 <= c <= 1}", segment_function()},
        {"semiline", "zero set is the half-axis {(0,0,z) : z >= 0}", semiline_function()},
        {"chain", "chain member with alpha = 3/2: zero set {(0,0,c) : 0 <= c <= 3/2}",
         chain_function(make_rational(3, 2))},
    };
    for (long k = 1; k <= 3; ++k)
        g.push_back({"fk" + std::to_string(k), "x^2/(x^2+(y-" + std::to_string(k) + ")^2)", pole_family(k)});
    return g;
}

const GalleryEntry& gallery_entry(const std::string& name) {
    static const std::vector<GalleryEntry> entries = gallery();
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw Error(ErrorKind::Precondition, "unknown gallery entry '" + name + "'");
}

}  // namespace lbr
