#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lbr/errors.hpp"
#include "lbr/field.hpp"
#include "lbr/mpoly.hpp"

namespace lbr {

/// Dense univariate polynomial, coefficients stored from the constant term up.
template <class K>
class UPoly {
public:
    using Traits = FieldTraits<K>;

    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }
    static UPoly x() { return UPoly(std::vector<K>{Traits::zero(), Traits::one()}); }
    static UPoly monomial(unsigned d, const K& k) {
        std::vector<K> c(d + 1, Traits::zero());
        c[d] = k;
        return UPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const K& lc() const { return c_.back(); }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Traits::zero(); }
    const std::vector<K>& coeffs() const { return c_; }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), Traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UPoly(std::move(r));
    }
    UPoly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const auto& k : c_) r.push_back(-k);
        UPoly p;
        p.c_ = std::move(r);
        return p;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, Traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const K& s, const UPoly& a) {
        std::vector<K> r;
        r.reserve(a.c_.size());
        for (const auto& k : a.c_) r.push_back(s * k);
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
UPoly<K> pow(const UPoly<K>& p, unsigned e) {
    UPoly<K> r = UPoly<K>::constant(FieldTraits<K>::one());
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

template <class K>
UPoly<K> derivative(const UPoly<K>& p) {
    if (p.degree() <= 0) return UPoly<K>();
    std::vector<K> r;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) r.push_back(K(static_cast<long>(i)) * p.coeffs()[i]);
    return UPoly<K>(std::move(r));
}

template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    int db = b.degree();
    if (a.degree() < db) return {UPoly<K>(), a};
    K inv = FieldTraits<K>::inverse(b.lc());
    std::vector<K> r = a.coeffs();
    std::vector<K> q(static_cast<std::size_t>(a.degree() - db + 1), FieldTraits<K>::zero());
    for (int i = a.degree(); i >= db; --i) {
        K c = r[static_cast<std::size_t>(i)] * inv;
        if (FieldTraits<K>::is_zero(c)) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(i - db + j);
            r[idx] = r[idx] - c * b.coeffs()[static_cast<std::size_t>(j)];
        }
        r[static_cast<std::size_t>(i)] = FieldTraits<K>::zero();
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly<K>(std::move(q)), UPoly<K>(std::move(r))};
}

template <class K>
UPoly<K> rem(const UPoly<K>& a, const UPoly<K>& b) {
    return divrem(a, b).second;
}

template <class K>
UPoly<K> div_exact(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divrem(a, b);
    LBR_ENSURE(r.is_zero(), "univariate division is not exact");
    return q;
}

template <class K>
UPoly<K> monic(const UPoly<K>& p) {
    if (p.is_zero()) return p;
    return FieldTraits<K>::inverse(p.lc()) * p;
}

namespace detail {
/// Monic gcd over Q by a primitive remainder sequence on integer coefficients.
UPoly<Rational> rational_gcd(const UPoly<Rational>& a, const UPoly<Rational>& b);
}  // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    if constexpr (std::is_same_v<K, Rational>) {
        return detail::rational_gcd(a, b);
    }
    while (!b.is_zero()) {
        UPoly<K> r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class K>
struct XGcd {
    UPoly<K> g;
    UPoly<K> s;
    UPoly<K> t;
};

/// g = s*a + t*b with g the monic gcd.
template <class K>
XGcd<K> xgcd(const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0 = UPoly<K>::constant(FieldTraits<K>::one()), s1;
    UPoly<K> t0, t1 = UPoly<K>::constant(FieldTraits<K>::one());
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UPoly<K> s2 = s0 - q * s1;
        UPoly<K> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = FieldTraits<K>::inverse(r0.lc());
    return {inv * r0, inv * s0, inv * t0};
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
    if (p.is_zero()) throw Error(ErrorKind::Precondition, "squarefree part of the zero polynomial");
    if (p.degree() <= 0) return UPoly<K>::constant(FieldTraits<K>::one());
    UPoly<K> g = gcd(p, derivative(p));
    return monic(div_exact(p, g));
}

template <class V, class K>
V evaluate(const UPoly<K>& p, const V& x) {
    V acc = FieldTraits<V>::zero();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + V(*it);
    return acc;
}

/// p(x + c).
template <class K>
UPoly<K> taylor_shift(const UPoly<K>& p, const K& c) {
    UPoly<K> acc;
    UPoly<K> lin(std::vector<K>{c, FieldTraits<K>::one()});
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + UPoly<K>::constant(*it);
    return acc;
}

/// p(a*x).
template <class K>
UPoly<K> scale_variable(const UPoly<K>& p, const K& a) {
    std::vector<K> r = p.coeffs();
    K f = FieldTraits<K>::one();
    for (auto& k : r) {
        k = k * f;
        f = f * a;
    }
    return UPoly<K>(std::move(r));
}

/// x^deg * p(1/x).
template <class K>
UPoly<K> reverse(const UPoly<K>& p) {
    std::vector<K> r(p.coeffs().rbegin(), p.coeffs().rend());
    return UPoly<K>(std::move(r));
}

/// Integral primitive associate with positive leading coefficient.
inline UPoly<Rational> primitive_integral(const UPoly<Rational>& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(p.lc()) < 0) scale = -scale;
    return scale * p;
}

/// Univariate view of a polynomial that only involves variable `var`.
template <class K>
UPoly<K> to_upoly(const MPoly<K>& p, std::size_t var) {
    std::vector<K> c(p.degree(var) + 1, FieldTraits<K>::zero());
    for (const auto& [e, k] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            LBR_ENSURE(i == var || e[i] == 0, "polynomial is not univariate in the requested variable");
        c[e[var]] = k;
    }
    return UPoly<K>(std::move(c));
}

template <class K>
MPoly<K> to_mpoly(const UPoly<K>& p, std::size_t arity, std::size_t var) {
    MPoly<K> r(arity);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        Exponents e(arity, 0);
        e[var] = static_cast<unsigned>(i);
        r.add_term(std::move(e), p.coeffs()[i]);
    }
    return r;
}

}  // namespace lbr
