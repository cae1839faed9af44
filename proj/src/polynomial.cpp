#include <algorithm>

#include "lbr/mpoly.hpp"
#include "lbr/roots.hpp"
#include "lbr/upoly.hpp"

namespace lbr::detail {

namespace {

// Image of p in var after substituting the other variables by the values in point.
UPoly<Rational> univariate_image(const MPoly<Rational>& p, std::size_t var, const std::vector<Rational>& point) {
    std::vector<Rational> c(p.degree(var) + 1, Rational(0));
    for (const auto& [e, k] : p.terms()) {
        Rational m = k;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) {
                Rational v;
                mpz_pow_ui(v.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
                m *= v;
            }
        c[e[var]] += m;
    }
    return UPoly<Rational>(std::move(c));
}

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0) return;
    if (p.back() < 0) g = -g;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly integer_primitive(const UPoly<Rational>& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    for (const auto& c : p.coeffs()) z.push_back(mpz_class(c * l));
    make_primitive(z);
    return z;
}

// A primitive multiple of the pseudo-remainder of a by b.
void primitive_remainder(ZPoly& a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() > db) {
        mpz_class la = a.back();
        mpz_class g = gcd(la, lb);
        mpz_class fa = lb / g, fb = la / g;
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= fa;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= fb * b[i];
        trim(a);
        make_primitive(a);
    }
}

void positive_primitive(ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

UPoly<Rational> to_rational_poly(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& k : z) c.emplace_back(k);
    return UPoly<Rational>(std::move(c));
}

Rational univariate_resultant(UPoly<Rational> a, UPoly<Rational> b) {
    Rational acc(1);
    while (true) {
        if (a.is_zero() || b.is_zero()) return Rational(0);
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            Rational p(1);
            for (int i = 0; i < da; ++i) p *= b.lc();
            return acc * p;
        }
        UPoly<Rational> r = rem(a, b);
        if (r.is_zero()) return Rational(0);
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        for (int i = 0; i < da - r.degree(); ++i) acc *= b.lc();
        a = std::move(b);
        b = std::move(r);
    }
}

// Polynomial through (xs[i], ys[i]) by Newton divided differences.
UPoly<Rational> interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
    const std::size_t m = xs.size();
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    UPoly<Rational> acc = UPoly<Rational>::constant(ys[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        acc = acc * UPoly<Rational>(std::vector<Rational>{-xs[i], Rational(1)});
        acc = acc + UPoly<Rational>::constant(ys[i]);
    }
    return acc;
}

}  // namespace

MPoly<Rational> bivariate_resultant(const MPoly<Rational>& a, const MPoly<Rational>& b, std::size_t var) {
    const std::size_t other = 1 - var;
    const unsigned da = a.degree(var), db = b.degree(var);
    const std::size_t bound = std::size_t(da) * b.degree(other) + std::size_t(db) * a.degree(other);
    MPoly<Rational> la = a.coefficient_in(var, da), lb = b.coefficient_in(var, db);
    std::vector<Rational> xs, ys;
    std::vector<Rational> point(2);
    for (long k = 0; xs.size() <= bound; ++k) {
        Rational x0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
        point[other] = x0;
        if (evaluate(la, point) == 0 || evaluate(lb, point) == 0) continue;
        xs.push_back(x0);
        ys.push_back(univariate_resultant(univariate_image(a, var, point), univariate_image(b, var, point)));
    }
    UPoly<Rational> r = interpolate(xs, ys);
    MPoly<Rational> out(2);
    MPoly<Rational> x = MPoly<Rational>::variable(2, other), power = MPoly<Rational>::constant(2, Rational(1));
    for (int i = 0; i <= r.degree(); ++i) {
        if (r.coeff(i) != 0) out = out + MPoly<Rational>::constant(2, r.coeff(i)) * power;
        power = power * x;
    }
    return out;
}

int rational_sign_at(const UPoly<Rational>& p, const Rational& x) {
    if (p.is_zero()) return 0;
    const auto& c = p.coeffs();
    bool integral = std::all_of(c.begin(), c.end(), [](const Rational& k) { return k.get_den() == 1; });
    if (!integral) return sgn(evaluate<Rational>(p, x));
    const mpz_class& n = x.get_num();
    const mpz_class& d = x.get_den();
    // Denominator-cleared Horner: d^deg p(n/d).
    mpz_class acc = c.back().get_num(), dp = d;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc *= n;
        if (c[i] != 0) acc += c[i].get_num() * dp;
        if (i > 0) dp *= d;
    }
    return sgn(acc);
}

std::vector<UPoly<Rational>> rational_sturm_sequence(const UPoly<Rational>& p) {
    std::vector<ZPoly> seq;
    auto scaled = [](const UPoly<Rational>& u) {
        mpz_class l = 1;
        for (const auto& c : u.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        ZPoly z;
        for (const auto& c : u.coeffs()) z.push_back(mpz_class(c * l));
        positive_primitive(z);
        return z;
    };
    seq.push_back(scaled(p));
    seq.push_back(scaled(derivative(p)));
    while (!seq.back().empty() && seq.back().size() > 1) {
        ZPoly a = seq[seq.size() - 2];
        const ZPoly& b = seq.back();
        const std::size_t db = b.size() - 1;
        const mpz_class& lb = b.back();
        while (a.size() > db) {
            mpz_class la = a.back();
            mpz_class g = gcd(la, lb);
            mpz_class fa = abs(lb) / g, fb = la / g;
            if (sgn(lb) < 0) fb = -fb;
            std::size_t shift = a.size() - 1 - db;
            for (auto& c : a) c *= fa;
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= fb * b[i];
            trim(a);
            positive_primitive(a);
        }
        if (a.empty()) break;
        for (auto& c : a) c = -c;
        seq.push_back(std::move(a));
    }
    if (seq.back().empty()) seq.pop_back();
    std::vector<UPoly<Rational>> out;
    for (const auto& z : seq) out.push_back(to_rational_poly(z));
    return out;
}

UPoly<Rational> rational_gcd(const UPoly<Rational>& a_in, const UPoly<Rational>& b_in) {
    if (a_in.is_zero() && b_in.is_zero()) return UPoly<Rational>();
    if (a_in.is_zero()) return monic(b_in);
    if (b_in.is_zero()) return monic(a_in);
    ZPoly a = integer_primitive(a_in), b = integer_primitive(b_in);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return UPoly<Rational>::constant(Rational(1));
        primitive_remainder(a, b);
        std::swap(a, b);
    }
    return monic(to_rational_poly(a));
}

bool coprime_by_evaluation(const MPoly<Rational>& a, const MPoly<Rational>& b) {
    auto ua = a.variables_used(), ub = b.variables_used();
    const std::size_t n = a.arity();
    for (std::size_t v = 0; v < n; ++v) {
        if (!ua[v] || !ub[v]) continue;
        bool ok = false;
        for (long attempt = 0; attempt < 3 && !ok; ++attempt) {
            std::vector<Rational> point(n);
            for (std::size_t i = 0; i < n; ++i) point[i] = Rational(static_cast<long>(2 + 3 * i + 7 * attempt));
            UPoly<Rational> ia = univariate_image(a, v, point), ib = univariate_image(b, v, point);
            if (ia.degree() != static_cast<int>(a.degree(v)) || ib.degree() != static_cast<int>(b.degree(v))) continue;
            ok = gcd(ia, ib).degree() == 0;
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace lbr::detail
