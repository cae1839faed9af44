#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <type_traits>
#include <utility>
#include <vector>

#include "lbr/errors.hpp"
#include "lbr/field.hpp"

namespace lbr {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded lexicographic order with x1 > x2 > ... > xn.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Sparse multivariate polynomial over the field K. Zero coefficients are never stored.
template <class K>
class MPoly {
public:
    using Traits = FieldTraits<K>;
    using TermMap = std::map<Exponents, K, GrlexLess>;

    MPoly() = default;
    explicit MPoly(std::size_t arity) : arity_(arity) {}

    static MPoly constant(std::size_t arity, const K& c) {
        MPoly p(arity);
        p.add_term(Exponents(arity, 0), c);
        return p;
    }
    static MPoly variable(std::size_t arity, std::size_t index) {
        MPoly p(arity);
        Exponents e(arity, 0);
        e.at(index) = 1;
        p.add_term(e, Traits::one());
        return p;
    }
    static MPoly monomial(Exponents e, const K& c) {
        MPoly p(e.size());
        p.add_term(std::move(e), c);
        return p;
    }

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && lbr::total_degree(terms_.begin()->first) == 0);
    }
    K constant_term() const {
        auto it = terms_.find(Exponents(arity_, 0));
        return it == terms_.end() ? Traits::zero() : it->second;
    }
    K coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Traits::zero() : it->second;
    }
    const Exponents& leading_exponents() const { return terms_.rbegin()->first; }
    const K& leading_coefficient() const { return terms_.rbegin()->second; }

    unsigned total_degree() const { return terms_.empty() ? 0 : lbr::total_degree(terms_.rbegin()->first); }
    /// Lowest total degree of a term (the order at the origin); 0 for the zero polynomial.
    unsigned order() const {
        unsigned best = ~0u;
        for (const auto& [e, c] : terms_) best = std::min(best, lbr::total_degree(e));
        return terms_.empty() ? 0 : best;
    }
    unsigned degree(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    bool depends_on(std::size_t var) const { return degree(var) > 0; }
    std::vector<bool> variables_used() const {
        std::vector<bool> used(arity_, false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < arity_; ++i)
                if (e[i] > 0) used[i] = true;
        return used;
    }

    void add_term(Exponents e, const K& c) {
        LBR_ENSURE(e.size() == arity_, "exponent length mismatch");
        if (Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            K sum = it->second + c;
            if (Traits::is_zero(sum))
                terms_.erase(it);
            else
                it->second = std::move(sum);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly operator-() const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_arity(b);
        MPoly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                K c = ca * cb;
                r.add_term(std::move(e), c);
            }
        }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend MPoly operator*(const K& s, const MPoly& a) {
        MPoly r(a.arity_);
        if (Traits::is_zero(s)) return r;
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
        return (a - b).is_zero();
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Polynomial with exponent vectors padded with zeros (or truncated; the dropped
    /// variables must not occur).
    MPoly with_arity(std::size_t n) const {
        MPoly r(n);
        for (const auto& [e, c] : terms_) {
            Exponents f(n, 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i < n)
                    f[i] = e[i];
                else
                    LBR_ENSURE(e[i] == 0, "truncating a used variable");
            }
            r.add_term(std::move(f), c);
        }
        return r;
    }

    /// Coefficient of var^k, as a polynomial of the same arity not involving var.
    MPoly coefficient_in(std::size_t var, unsigned k) const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != k) continue;
            Exponents f(e);
            f[var] = 0;
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Multiplies by var^k.
    MPoly shifted_up(std::size_t var, unsigned k) const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            Exponents f(e);
            f[var] += k;
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    template <class V, class F>
    MPoly<V> map_coefficients(F&& fn) const {
        MPoly<V> r(arity_);
        for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

private:
    void check_arity(const MPoly& o) const { LBR_ENSURE(arity_ == o.arity_, "polynomial arity mismatch"); }

    std::size_t arity_ = 0;
    TermMap terms_;
};

template <class K>
MPoly<K> pow(const MPoly<K>& p, unsigned e) {
    MPoly<K> result = MPoly<K>::constant(p.arity(), FieldTraits<K>::one());
    MPoly<K> base = p;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

template <class K>
MPoly<K> derivative(const MPoly<K>& p, std::size_t var) {
    MPoly<K> r(p.arity());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponents f(e);
        f[var] -= 1;
        K k = c * K(static_cast<long>(e[var]));
        r.add_term(std::move(f), k);
    }
    return r;
}

/// Evaluates p at a point whose coordinates live in V (K must convert to V).
template <class V, class K>
V evaluate(const MPoly<K>& p, const std::vector<V>& point) {
    LBR_ENSURE(point.size() == p.arity(), "evaluation point has wrong dimension");
    std::vector<std::vector<V>> powers(point.size());
    auto power = [&](std::size_t i, unsigned k) -> const V& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(V(FieldTraits<V>::one()));
        while (cache.size() <= k) cache.push_back(cache.back() * point[i]);
        return cache[k];
    };
    V sum = FieldTraits<V>::zero();
    for (const auto& [e, c] : p.terms()) {
        V term = V(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        sum = sum + term;
    }
    return sum;
}

/// Composition p(maps[0], ..., maps[n-1]).
template <class V, class K>
MPoly<V> substitute(const MPoly<K>& p, const std::vector<MPoly<V>>& maps) {
    LBR_ENSURE(maps.size() == p.arity(), "substitution map has wrong length");
    LBR_ENSURE(!maps.empty() || p.arity() == 0, "empty substitution");
    std::size_t out_arity = maps.empty() ? 0 : maps.front().arity();
    std::vector<std::vector<MPoly<V>>> powers(maps.size());
    auto power = [&](std::size_t i, unsigned k) -> const MPoly<V>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MPoly<V>::constant(out_arity, FieldTraits<V>::one()));
        while (cache.size() <= k) cache.push_back(cache.back() * maps[i]);
        return cache[k];
    };
    MPoly<V> sum(out_arity);
    for (const auto& [e, c] : p.terms()) {
        MPoly<V> term = MPoly<V>::constant(out_arity, V(c));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        sum += term;
    }
    return sum;
}

/// p(x + center).
template <class V, class K>
MPoly<V> shift(const MPoly<K>& p, const std::vector<V>& center) {
    LBR_ENSURE(center.size() == p.arity(), "shift center has wrong dimension");
    std::vector<MPoly<V>> maps;
    maps.reserve(center.size());
    for (std::size_t i = 0; i < center.size(); ++i)
        maps.push_back(MPoly<V>::variable(p.arity(), i) + MPoly<V>::constant(p.arity(), center[i]));
    return substitute(p, maps);
}

/// Exact quotient a / b; throws InternalInvariant when b does not divide a.
template <class K>
MPoly<K> divide_exact(const MPoly<K>& a, const MPoly<K>& b) {
    LBR_ENSURE(!b.is_zero(), "exact division by zero polynomial");
    LBR_ENSURE(a.arity() == b.arity(), "arity mismatch in division");
    MPoly<K> quotient(a.arity());
    MPoly<K> rem = a;
    const Exponents& lb = b.leading_exponents();
    K inv_lc = FieldTraits<K>::inverse(b.leading_coefficient());
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_exponents();
        Exponents q(lr.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            LBR_ENSURE(lr[i] >= lb[i], "polynomial division is not exact");
            q[i] = lr[i] - lb[i];
        }
        K c = rem.leading_coefficient() * inv_lc;
        MPoly<K> t = MPoly<K>::monomial(q, c);
        quotient += t;
        rem -= t * b;
    }
    return quotient;
}

/// Exact quotient if b divides a, otherwise nothing.
template <class K>
std::pair<bool, MPoly<K>> try_divide(const MPoly<K>& a, const MPoly<K>& b) {
    MPoly<K> quotient(a.arity());
    MPoly<K> rem = a;
    const Exponents& lb = b.leading_exponents();
    K inv_lc = FieldTraits<K>::inverse(b.leading_coefficient());
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_exponents();
        Exponents q(lr.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (lr[i] < lb[i]) return {false, MPoly<K>(a.arity())};
            q[i] = lr[i] - lb[i];
        }
        K c = rem.leading_coefficient() * inv_lc;
        MPoly<K> t = MPoly<K>::monomial(q, c);
        quotient += t;
        rem -= t * b;
    }
    return {true, quotient};
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b with respect to var.
template <class K>
MPoly<K> pseudo_remainder(const MPoly<K>& a, const MPoly<K>& b, std::size_t var) {
    unsigned db = b.degree(var);
    unsigned da = a.degree(var);
    if (a.is_zero() || da < db) return a;
    MPoly<K> lcb = b.coefficient_in(var, db);
    MPoly<K> r = a;
    unsigned steps = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        unsigned dr = r.degree(var);
        MPoly<K> lcr = r.coefficient_in(var, dr);
        r = lcb * r - (lcr * b).shifted_up(var, dr - db);
        ++steps;
    }
    unsigned want = da - db + 1;
    if (steps < want) r = pow(lcb, want - steps) * r;
    return r;
}

/// Scales p to its canonical associate (primitive integral with positive leading
/// coefficient over the rationals, monic over algebraic towers).
template <class K>
MPoly<K> normalize_associate(const MPoly<K>& p) {
    if (p.is_zero()) return p;
    return FieldTraits<K>::normalize(p);
}

template <class K>
MPoly<K> poly_gcd(const MPoly<K>& a, const MPoly<K>& b);

/// Content of p viewed as a polynomial in var (gcd of its coefficients).
template <class K>
MPoly<K> content_in(const MPoly<K>& p, std::size_t var) {
    MPoly<K> g(p.arity());
    unsigned d = p.degree(var);
    for (unsigned k = 0; k <= d; ++k) {
        MPoly<K> c = p.coefficient_in(var, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? normalize_associate(c) : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

template <class K>
MPoly<K> primitive_part_in(const MPoly<K>& p, std::size_t var) {
    if (p.is_zero()) return p;
    MPoly<K> c = content_in(p, var);
    if (c.is_constant()) return p;
    return divide_exact(p, c);
}

namespace detail {

// True only when gcd(a, b) is certainly constant: for every shared variable the images
// under a substitution keeping both leading coefficients alive are coprime.
bool coprime_by_evaluation(const MPoly<Rational>& a, const MPoly<Rational>& b);

template <class K>
std::ptrdiff_t main_variable(const MPoly<K>& a, const MPoly<K>& b) {
    auto ua = a.variables_used();
    auto ub = b.variables_used();
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(a.arity()) - 1; i >= 0; --i)
        if (ua[static_cast<std::size_t>(i)] || ub[static_cast<std::size_t>(i)]) return i;
    return -1;
}

}  // namespace detail

/// Greatest common divisor in its canonical associate form; gcd(0, 0) = 0.
template <class K>
MPoly<K> poly_gcd(const MPoly<K>& a, const MPoly<K>& b) {
    LBR_ENSURE(a.arity() == b.arity(), "gcd arity mismatch");
    const std::size_t n = a.arity();
    if (a.is_zero()) return normalize_associate(b);
    if (b.is_zero()) return normalize_associate(a);
    if (a.is_constant() || b.is_constant()) return MPoly<K>::constant(n, FieldTraits<K>::one());
    {
        auto ua = a.variables_used(), ub = b.variables_used();
        bool shared = false;
        for (std::size_t i = 0; i < n; ++i) shared = shared || (ua[i] && ub[i]);
        if (!shared) return MPoly<K>::constant(n, FieldTraits<K>::one());
    }
    if constexpr (std::is_same_v<K, Rational>) {
        if (detail::coprime_by_evaluation(a, b)) return MPoly<K>::constant(n, FieldTraits<K>::one());
    }
    auto var = static_cast<std::size_t>(detail::main_variable(a, b));
    if (!a.depends_on(var)) return poly_gcd(a, content_in(b, var));
    if (!b.depends_on(var)) return poly_gcd(content_in(a, var), b);

    MPoly<K> ca = content_in(a, var), cb = content_in(b, var);
    MPoly<K> c = poly_gcd(ca, cb);
    MPoly<K> r0 = ca.is_constant() ? a : divide_exact(a, ca);
    MPoly<K> r1 = cb.is_constant() ? b : divide_exact(b, cb);
    if (r0.degree(var) < r1.degree(var)) std::swap(r0, r1);
    while (true) {
        MPoly<K> r = pseudo_remainder(r0, r1, var);
        if (r.is_zero()) break;
        if (r.degree(var) == 0) {
            r1 = MPoly<K>::constant(n, FieldTraits<K>::one());
            break;
        }
        r0 = std::move(r1);
        r1 = normalize_associate(primitive_part_in(r, var));
    }
    MPoly<K> g = primitive_part_in(r1, var);
    return normalize_associate(g * c);
}

namespace detail {
/// Resultant of two bivariate polynomials of positive degree in var, by evaluation of the
/// other variable and interpolation.
MPoly<Rational> bivariate_resultant(const MPoly<Rational>& a, const MPoly<Rational>& b, std::size_t var);
}  // namespace detail

/// Resultant with respect to var, by the subresultant algorithm.
template <class K>
MPoly<K> resultant(const MPoly<K>& a_in, const MPoly<K>& b_in, std::size_t var) {
    const std::size_t n = a_in.arity();
    const MPoly<K> one = MPoly<K>::constant(n, FieldTraits<K>::one());
    if (a_in.is_zero() || b_in.is_zero()) return MPoly<K>(n);
    MPoly<K> a = a_in, b = b_in;
    unsigned da = a.degree(var), db = b.degree(var);
    if (da == 0 && db == 0) return one;
    if (db == 0) return pow(b, da);
    if (da == 0) return pow(a, db);
    if constexpr (std::is_same_v<K, Rational>) {
        if (n == 2) return detail::bivariate_resultant(a, b, var);
    }
    K s = FieldTraits<K>::one();
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
    }
    MPoly<K> g = one, h = one;
    while (true) {
        da = a.degree(var);
        db = b.degree(var);
        unsigned delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
        MPoly<K> r = pseudo_remainder(a, b, var);
        if (r.is_zero()) return MPoly<K>(n);
        a = b;
        b = divide_exact(r, g * pow(h, delta));
        g = a.coefficient_in(var, a.degree(var));
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = divide_exact(pow(g, delta), pow(h, delta - 1));
        if (b.degree(var) == 0) break;
    }
    unsigned d = a.degree(var);
    MPoly<K> lb = b;  // degree zero in var
    MPoly<K> res = d == 1 ? lb : divide_exact(pow(lb, d), pow(h, d - 1));
    return s * res;
}

}  // namespace lbr
