#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lbr/upoly.hpp"

namespace lbr {

/// A real root of a squarefree polynomial: either an exact rational, or the unique
/// root in the open interval (lo, hi) whose endpoints are not roots.
template <class K>
struct RealRoot {
    UPoly<K> defining;
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;

    bool is_exact() const { return exact.has_value(); }
    Interval enclosure() const { return exact ? Interval(*exact) : Interval(lo, hi); }
};

namespace detail {
int rational_sign_at(const UPoly<Rational>& p, const Rational& x);
/// Sturm sequence up to positive factors, with integer coefficients.
std::vector<UPoly<Rational>> rational_sturm_sequence(const UPoly<Rational>& p);
}  // namespace detail

template <class K>
int sign_at(const UPoly<K>& p, const Rational& x) {
    if constexpr (std::is_same_v<K, Rational>) {
        return detail::rational_sign_at(p, x);
    } else {
        return FieldTraits<K>::sign(evaluate<K>(p, K(x)));
    }
}

template <class K>
std::vector<UPoly<K>> sturm_sequence(const UPoly<K>& p) {
    if constexpr (std::is_same_v<K, Rational>) return detail::rational_sturm_sequence(p);
    std::vector<UPoly<K>> seq{p, derivative(p)};
    while (!seq.back().is_zero()) {
        UPoly<K> r = rem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

namespace detail {

inline int count_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

/// Sign variations of a Sturm sequence at x; nullopt with `at_plus` selects +inf or -inf.
template <class K>
int sturm_variations(const std::vector<UPoly<K>>& seq, const std::optional<Rational>& x, bool at_plus = true) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) {
        if (x) {
            signs.push_back(sign_at(p, *x));
        } else {
            int s = FieldTraits<K>::sign(p.lc());
            if (!at_plus && p.degree() % 2 == 1) s = -s;
            signs.push_back(s);
        }
    }
    return detail::count_changes(signs);
}

/// Shrinks an isolating interval to width at most 2^-bits (or finds the root exactly).
template <class K>
void refine(RealRoot<K>& root, unsigned bits) {
    if (root.exact) return;
    Rational target(1);
    target /= Rational(Integer(1) << bits);
    int slo = sign_at(root.defining, root.lo);
    while (root.hi - root.lo > target) {
        Rational mid = (root.lo + root.hi) / 2;
        int s = sign_at(root.defining, mid);
        if (s == 0) {
            root.exact = mid;
            root.lo = root.hi = mid;
            return;
        }
        if (s == slo)
            root.lo = mid;
        else
            root.hi = mid;
    }
}

namespace detail {

template <class K>
void finish_root(RealRoot<K>& root, unsigned bits) {
    refine(root, bits);
    if (root.exact) return;
    Rational r = simplest_between(root.lo, root.hi);
    if (sign_at(root.defining, r) == 0) {
        root.exact = r;
        root.lo = root.hi = r;
    }
}

}  // namespace detail

/// Isolates the distinct real roots of p in increasing order.
template <class K>
std::vector<RealRoot<K>> isolate_real_roots(const UPoly<K>& p, unsigned bits = 40) {
    if (p.is_zero()) throw Error(ErrorKind::Precondition, "root isolation of the zero polynomial");
    std::vector<RealRoot<K>> out;
    if (p.degree() <= 0) return out;
    UPoly<K> q = squarefree_part(p);
    if (q.degree() == 1) {
        K r = -q.coeff(0) * FieldTraits<K>::inverse(q.lc());
        if (FieldTraits<K>::is_rational(r)) {
            Rational v = FieldTraits<K>::to_rational(r);
            out.push_back({q, v, v, v});
            return out;
        }
    }
    auto seq = sturm_sequence(q);
    int total = sturm_variations(seq, std::nullopt, false) - sturm_variations(seq, std::nullopt, true);
    if (total == 0) return out;
    auto count = [&](const Rational& a, const Rational& b) {
        return sturm_variations(seq, a) - sturm_variations(seq, b);
    };
    // Same roots and signs as q up to a positive factor.
    const UPoly<K>& q0 = seq.front();
    Rational bound(1);
    while (sign_at(q0, bound) == 0 || sign_at(q0, Rational(-bound)) == 0 || count(-bound, bound) != total)
        bound *= 2;

    struct Task {
        Rational lo, hi;
        int n;
    };
    std::vector<Task> stack{{-bound, bound, total}};
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        if (t.n < 0) {
            out.push_back({q, t.lo, t.lo, t.lo});
            continue;
        }
        if (t.n == 0) continue;
        if (t.n == 1) {
            RealRoot<K> root{q, t.lo, t.hi, std::nullopt};
            detail::finish_root(root, bits);
            out.push_back(std::move(root));
            continue;
        }
        Rational mid = (t.lo + t.hi) / 2;
        if (sign_at(q0, mid) != 0) {
            int left = count(t.lo, mid);
            // Pushed right first so the left half is processed first.
            stack.push_back({mid, t.hi, t.n - left});
            stack.push_back({t.lo, mid, left});
            continue;
        }
        Rational delta = (t.hi - t.lo) / 4;
        while (sign_at(q0, Rational(mid - delta)) == 0 || sign_at(q0, Rational(mid + delta)) == 0 ||
               count(mid - delta, mid + delta) != 1)
            delta /= 2;
        int left = count(t.lo, mid - delta);
        stack.push_back({mid + delta, t.hi, t.n - left - 1});
        stack.push_back({mid, mid, -1});  // marks the exact root at mid
        stack.push_back({t.lo, mid - delta, left});
    }
    return out;
}

}  // namespace lbr
