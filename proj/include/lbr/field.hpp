#pragma once

#include "lbr/errors.hpp"
#include "lbr/rational.hpp"

namespace lbr {

/// Exact field operations used by the polynomial templates. Specialized for
/// Rational here and for AlgNum in algebraic.hpp.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static int sign(const Rational& x) { return sgn(x); }
    static Rational inverse(const Rational& x) {
        if (sgn(x) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        return 1 / x;
    }
    static bool is_rational(const Rational&) { return true; }
    static Rational to_rational(const Rational& x) { return x; }

    /// Integral primitive associate with positive leading coefficient.
    template <class P>
    static P normalize(const P& p) {
        Integer den_lcm = 1, num_gcd = 0;
        for (const auto& [e, c] : p.terms()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (sgn(p.leading_coefficient()) < 0) scale = -scale;
        return scale * p;
    }
};

}  // namespace lbr
