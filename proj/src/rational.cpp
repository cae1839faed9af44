#include "lbr/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace lbr {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_decimal(const Rational& r, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer scaled = r.get_num() * scale;
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.get_den().get_mpz_t());
    bool negative = sgn(r) < 0;
    if (negative) q = -q;
    std::string s = q.get_str(10);
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
    if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
    return negative ? "-" + out : out;
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

namespace {

// Simplest rational in (lo, hi) for 0 <= lo < hi, or in (lo, inf) when hi is absent.
Rational simplest_nonnegative(const Rational& lo, const std::optional<Rational>& hi) {
    Integer next = floor(lo) + 1;
    if (!hi || Rational(next) < *hi) {
        // An integer fits; the smallest one above lo is simplest unless lo < 0 < hi.
        return Rational(next);
    }
    // lo and hi lie in [n, n + 1] with n = floor(lo).
    Integer n = floor(lo);
    Rational a = lo - Rational(n);
    Rational b = *hi - Rational(n);
    // Recurse on the reciprocal interval (1/b, 1/a).
    std::optional<Rational> upper;
    if (sgn(a) > 0) upper = 1 / a;
    Rational inner = simplest_nonnegative(1 / b, upper);
    return Rational(n) + 1 / inner;
}

}  // namespace

Rational simplest_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("simplest_between: empty interval");
    bool below_zero = !lo || sgn(*lo) < 0;
    bool above_zero = !hi || sgn(*hi) > 0;
    if (below_zero && above_zero) return Rational(0);
    if (!below_zero) return simplest_nonnegative(*lo, hi);
    // Interval lies in (-inf, 0]: mirror it.
    std::optional<Rational> mlo;
    if (lo) mlo = -*lo;
    Rational r = simplest_nonnegative(-*hi, mlo);
    return -r;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) {
        return std::nullopt;
    }
    Integer n = sqrt(r.get_num());
    Integer d = sqrt(r.get_den());
    Rational out(n, d);
    out.canonicalize();
    return out;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    if (a.lo == a.hi) return a.lo * b;
    if (b.lo == b.hi) return b.lo * a;
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min({p1, p2, p3, p4});
    Rational hi = std::max({p1, p2, p3, p4});
    return {lo, hi};
}

Interval operator*(const Rational& c, const Interval& a) {
    if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

Interval pow(const Interval& a, unsigned e) {
    if (e == 0) return Interval(Rational(1));
    if (a.lo == a.hi) {
        Rational p(1);
        for (unsigned i = 0; i < e; ++i) p *= a.lo;
        return Interval(p);
    }
    Rational lp(1), hp(1);
    for (unsigned i = 0; i < e; ++i) {
        lp *= a.lo;
        hp *= a.hi;
    }
    if (e % 2 == 1) return {lp, hp};
    if (sgn(a.lo) >= 0) return {lp, hp};
    if (sgn(a.hi) <= 0) return {hp, lp};
    return {Rational(0), std::max(lp, hp)};
}

}  // namespace lbr
