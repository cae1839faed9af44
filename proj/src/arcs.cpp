#include "lbr/arcs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lbr {

PuiseuxPoly::PuiseuxPoly(unsigned ramification, std::vector<PuiseuxTerm> terms) {
    LBR_ENSURE(ramification > 0, "ramification must be positive");
    std::map<long, AlgNum> acc;
    for (auto& t : terms) acc[t.numerator] = acc[t.numerator] + t.coefficient;
    long g = static_cast<long>(ramification);
    for (const auto& [k, c] : acc) {
        if (c.is_zero()) continue;
        terms_.push_back({k, c});
        g = std::gcd(g, k);
    }
    if (g == 0) g = 1;
    g = std::abs(g);
    ramification_ = ramification / static_cast<unsigned>(g);
    for (auto& t : terms_) t.numerator /= g;
    if (terms_.empty()) ramification_ = 1;
}

PuiseuxPoly PuiseuxPoly::constant(const AlgNum& c) { return PuiseuxPoly(1, {{0, c}}); }

PuiseuxPoly PuiseuxPoly::monomial(const AlgNum& c, const Rational& e) {
    return PuiseuxPoly(static_cast<unsigned>(e.get_den().get_ui()), {{e.get_num().get_si(), c}});
}

PuiseuxPoly PuiseuxPoly::from_upoly(const UPoly<AlgNum>& p) {
    std::vector<PuiseuxTerm> terms;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) terms.push_back({static_cast<long>(i), p.coeffs()[i]});
    return PuiseuxPoly(1, std::move(terms));
}

bool PuiseuxPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().numerator == 0);
}

std::optional<Rational> PuiseuxPoly::order() const {
    if (terms_.empty()) return std::nullopt;
    return exponent(terms_.front());
}

AlgNum PuiseuxPoly::constant_term() const {
    for (const auto& t : terms_)
        if (t.numerator == 0) return t.coefficient;
    return AlgNum(0L);
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    unsigned n = std::lcm(a.ramification_, b.ramification_);
    std::vector<PuiseuxTerm> terms;
    for (const auto& t : a.terms_) terms.push_back({t.numerator * static_cast<long>(n / a.ramification_), t.coefficient});
    for (const auto& t : b.terms_) terms.push_back({t.numerator * static_cast<long>(n / b.ramification_), t.coefficient});
    return PuiseuxPoly(n, std::move(terms));
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    unsigned n = std::lcm(a.ramification_, b.ramification_);
    std::vector<PuiseuxTerm> terms;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            terms.push_back({s.numerator * static_cast<long>(n / a.ramification_) +
                                 t.numerator * static_cast<long>(n / b.ramification_),
                             s.coefficient * t.coefficient});
    return PuiseuxPoly(n, std::move(terms));
}

UPoly<AlgNum> PuiseuxPoly::in_root_variable(unsigned n) const {
    LBR_ENSURE(n % ramification_ == 0, "root variable incompatible with the ramification");
    if (terms_.empty()) return UPoly<AlgNum>();
    long scale = static_cast<long>(n / ramification_);
    LBR_ENSURE(terms_.front().numerator >= 0, "negative exponent in a bounded arc");
    std::vector<AlgNum> c(static_cast<std::size_t>(terms_.back().numerator * scale) + 1, AlgNum(0L));
    for (const auto& t : terms_) c[static_cast<std::size_t>(t.numerator * scale)] = t.coefficient;
    return UPoly<AlgNum>(std::move(c));
}

unsigned Arc::ramification() const {
    unsigned n = 1;
    for (const auto& e : entries_) n = std::lcm(n, e.ramification());
    return n;
}

Arc make_arc(std::vector<PuiseuxPoly> entries) {
    if (entries.empty()) throw Error(ErrorKind::Precondition, "an arc needs at least one entry");
    bool all_constant = true;
    for (const auto& e : entries) {
        if (!e.is_zero() && sgn(*e.order()) < 0) throw Error(ErrorKind::UnboundedArc, "arc entry has a negative exponent");
        all_constant = all_constant && e.is_constant();
    }
    if (all_constant) throw Error(ErrorKind::ConstantArc, "constant arcs are excluded");
    Arc a;
    a.entries_ = std::move(entries);
    return a;
}

Point limit_point(const Arc& arc) {
    Point p;
    for (const auto& e : arc.entries()) p.push_back(e.constant_term());
    return p;
}

namespace {

UPoly<AlgNum> compose_poly(const Poly& p, const std::vector<UPoly<AlgNum>>& entries) {
    std::vector<std::vector<UPoly<AlgNum>>> powers(entries.size());
    auto power = [&](std::size_t i, unsigned k) -> const UPoly<AlgNum>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(UPoly<AlgNum>::constant(AlgNum(1L)));
        while (cache.size() <= k) cache.push_back(cache.back() * entries[i]);
        return cache[k];
    };
    UPoly<AlgNum> sum;
    for (const auto& [e, c] : p.terms()) {
        UPoly<AlgNum> term = UPoly<AlgNum>::constant(AlgNum(c));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        sum = sum + term;
    }
    return sum;
}

std::size_t lowest_index(const UPoly<AlgNum>& p) {
    std::size_t i = 0;
    while (p.coeffs()[i].is_zero()) ++i;
    return i;
}

}  // namespace

ArcLimit compose(const RationalFunction& f, const Arc& arc) {
    if (arc.dimension() != f.arity()) throw Error(ErrorKind::Precondition, "arc dimension does not match the function");
    unsigned n = arc.ramification();
    std::vector<UPoly<AlgNum>> entries;
    for (const auto& e : arc.entries()) entries.push_back(e.in_root_variable(n));
    UPoly<AlgNum> den = compose_poly(f.den(), entries);
    if (den.is_zero()) throw Error(ErrorKind::ArcInsideIndeterminacy, "arc lies inside the denominator's zero set");
    UPoly<AlgNum> num = compose_poly(f.num(), entries);
    ArcLimit r;
    if (num.is_zero()) {
        r.limit = AlgNum(0L);
        return r;
    }
    std::size_t on = lowest_index(num), od = lowest_index(den);
    r.order = make_rational(static_cast<long>(on) - static_cast<long>(od), static_cast<long>(n));
    r.leading_coefficient = num.coeffs()[on] / den.coeffs()[od];
    if (sgn(*r.order) < 0)
        r.infinite = true;
    else if (sgn(*r.order) == 0)
        r.limit = *r.leading_coefficient;
    else
        r.limit = AlgNum(0L);
    return r;
}

bool in_arc_zero_set(const RationalFunction& f, const Arc& arc) {
    ArcLimit l = compose(f, arc);
    return !l.order || sgn(*l.order) > 0;
}

std::vector<Rational> ScanBudget::exponents() const {
    std::set<Rational> s;
    for (unsigned q = 1; q <= max_exponent_denominator; ++q)
        for (unsigned p = 1; p <= max_exponent_numerator; ++p) s.insert(make_rational(p, q));
    return {s.begin(), s.end()};
}

std::optional<Rational> ScanResult::min() const {
    if (limits.empty()) return std::nullopt;
    return limits.front();
}

std::optional<Rational> ScanResult::max() const {
    if (limits.empty()) return std::nullopt;
    return limits.back();
}

namespace {

using i128 = __int128;

struct IntTerm {
    std::vector<unsigned> exps;
    unsigned degree;
    i128 coeff;
};

// Integral copy of p (p = terms / scale); false when coefficients do not fit.
bool integral_terms(const Poly& p, std::vector<IntTerm>& out, Integer& scale) {
    scale = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : p.terms()) {
        Integer v = c.get_num() * (scale / c.get_den());
        if (!v.fits_slong_p()) return false;
        out.push_back({e, total_degree(e), static_cast<i128>(v.get_si())});
    }
    return true;
}

struct Choice {
    long coeff;     // scaled coefficient a = c * L
    long exponent;  // scaled exponent E = e * Q
    std::size_t coeff_index;
    std::size_t exp_index;
};

struct Lowest {
    bool zero = true;
    long exponent = 0;
    i128 value = 0;
    bool overflow = false;
};

class FastEval {
public:
    FastEval(std::vector<IntTerm> terms, long lcoef, std::size_t n) : terms_(std::move(terms)), n_(n) {
        max_degree_ = 0;
        for (const auto& t : terms_) max_degree_ = std::max(max_degree_, t.degree);
        lpow_.push_back(1);
        for (unsigned k = 1; k <= max_degree_; ++k) lpow_.push_back(lpow_.back() * lcoef);
    }
    unsigned max_degree() const { return max_degree_; }

    Lowest lowest(const std::vector<Choice>& choice) {
        pairs_.clear();
        for (const auto& t : terms_) {
            i128 v = t.coeff;
            long e = 0;
            bool dead = false;
            for (std::size_t i = 0; i < n_ && !dead; ++i) {
                unsigned k = t.exps[i];
                if (k == 0) continue;
                if (choice[i].coeff == 0) {
                    dead = true;
                    break;
                }
                for (unsigned j = 0; j < k; ++j)
                    if (__builtin_mul_overflow(v, static_cast<i128>(choice[i].coeff), &v)) return {true, 0, 0, true};
                e += static_cast<long>(k) * choice[i].exponent;
            }
            if (dead) continue;
            if (__builtin_mul_overflow(v, lpow_[max_degree_ - t.degree], &v)) return {true, 0, 0, true};
            pairs_.emplace_back(e, v);
        }
        if (pairs_.empty()) return {};
        long emin = pairs_.front().first;
        for (const auto& pr : pairs_) emin = std::min(emin, pr.first);
        i128 first = 0;
        for (const auto& pr : pairs_)
            if (pr.first == emin && __builtin_add_overflow(first, pr.second, &first)) return {true, 0, 0, true};
        if (first != 0) return {false, emin, first, false};
        std::sort(pairs_.begin(), pairs_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t i = 0;
        while (i < pairs_.size()) {
            long e = pairs_[i].first;
            i128 sum = 0;
            for (; i < pairs_.size() && pairs_[i].first == e; ++i)
                if (__builtin_add_overflow(sum, pairs_[i].second, &sum)) return {true, 0, 0, true};
            if (sum != 0) return {false, e, sum, false};
        }
        return {};
    }

private:
    std::vector<IntTerm> terms_;
    std::size_t n_;
    unsigned max_degree_;
    std::vector<i128> lpow_;
    std::vector<std::pair<long, i128>> pairs_;
};

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::pair<i128, i128> reduced_key(i128 u, i128 d) {
    i128 g = gcd128(u, d);
    u /= g;
    d /= g;
    if (d < 0) {
        u = -u;
        d = -d;
    }
    return {u, d};
}

Integer to_integer(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

Arc build_arc(const std::vector<Rational>& pt, const std::vector<Choice>& choice, const ScanBudget& budget,
              const std::vector<Rational>& exps) {
    std::vector<PuiseuxPoly> entries;
    for (std::size_t i = 0; i < pt.size(); ++i) {
        PuiseuxPoly e = PuiseuxPoly::constant(AlgNum(pt[i]));
        const Rational& c = budget.coefficients[choice[i].coeff_index];
        if (sgn(c) != 0) e = e + PuiseuxPoly::monomial(AlgNum(c), exps[choice[i].exp_index]);
        entries.push_back(e);
    }
    return make_arc(std::move(entries));
}

}  // namespace

ScanResult arc_family_scan(const RationalFunction& f, const std::vector<Rational>& pt, const ScanBudget& budget) {
    const std::size_t n = f.arity();
    if (pt.size() != n) throw Error(ErrorKind::Precondition, "scan point dimension does not match the function");
    std::vector<Rational> exps = budget.exponents();
    Integer lden = 1, qden = 1;
    for (const auto& c : budget.coefficients) mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& e : exps) mpz_lcm(qden.get_mpz_t(), qden.get_mpz_t(), e.get_den_mpz_t());

    std::vector<Choice> options;
    for (std::size_t ci = 0; ci < budget.coefficients.size(); ++ci) {
        const Rational& c = budget.coefficients[ci];
        long a = Integer(c.get_num() * (lden / c.get_den())).get_si();
        if (sgn(c) == 0) {
            options.push_back({0, 0, ci, 0});
            continue;
        }
        for (std::size_t ei = 0; ei < exps.size(); ++ei)
            options.push_back({a, Integer(exps[ei].get_num() * (qden / exps[ei].get_den())).get_si(), ci, ei});
    }

    std::vector<Rational> shift_pt = pt;
    Poly num = shift(f.num(), shift_pt);
    Poly den = shift(f.den(), shift_pt);
    std::vector<IntTerm> nt, dt;
    Integer nscale, dscale;
    bool fast = integral_terms(num, nt, nscale) && integral_terms(den, dt, dscale);
    std::optional<FastEval> fnum, fden;
    if (fast) {
        fnum.emplace(std::move(nt), lden.get_si(), n);
        fden.emplace(std::move(dt), lden.get_si(), n);
    }

    ScanResult result;
    std::set<Rational> limits;
    std::optional<std::vector<Choice>> inf_choice, min_choice, max_choice;
    std::optional<Rational> lo, hi;
    std::vector<std::size_t> idx(n, 0);
    std::vector<Choice> choice(n);
    // Leading ratios already recorded; a repeat cannot change the limits or the extremes.
    std::set<std::pair<i128, i128>> seen;
    while (true) {
        bool nonconstant = false;
        for (std::size_t i = 0; i < n; ++i) {
            choice[i] = options[idx[i]];
            nonconstant = nonconstant || choice[i].coeff != 0;
        }
        if (nonconstant) {
            std::optional<bool> infinite;
            std::optional<Rational> value;
            bool skipped = false;
            bool done = false;
            bool repeat = false;
            if (fast) {
                Lowest d = fden->lowest(choice);
                Lowest u = d.overflow ? Lowest{} : fnum->lowest(choice);
                if (!d.overflow && !u.overflow) {
                    done = true;
                    if (d.zero) {
                        skipped = true;
                    } else if (u.zero || u.exponent > d.exponent) {
                        value = Rational(0);
                    } else if (u.exponent < d.exponent) {
                        infinite = true;
                    } else if (seen.count(reduced_key(u.value, d.value))) {
                        repeat = true;
                    } else {
                        seen.insert(reduced_key(u.value, d.value));
                        // lc = (u / (nscale L^dn)) / (d / (dscale L^dd))
                        Rational v(to_integer(u.value) * dscale, to_integer(d.value) * nscale);
                        v.canonicalize();
                        long shiftdeg = static_cast<long>(fden->max_degree()) - static_cast<long>(fnum->max_degree());
                        Rational l = lden;
                        for (long k = 0; k < std::abs(shiftdeg); ++k) v = shiftdeg > 0 ? Rational(v * l) : Rational(v / l);
                        value = v;
                    }
                }
            }
            if (!done) {
                Arc arc = build_arc(pt, choice, budget, exps);
                try {
                    ArcLimit l = compose(f, arc);
                    if (l.infinite)
                        infinite = true;
                    else
                        value = l.limit.rational();
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::ArcInsideIndeterminacy) throw;
                    skipped = true;
                }
            }
            if (skipped) {
                ++result.skipped;
            } else if (repeat) {
                ++result.evaluated;
            } else {
                ++result.evaluated;
                if (infinite) {
                    if (!result.found_infinite) inf_choice = choice;
                    result.found_infinite = true;
                } else {
                    limits.insert(*value);
                    if (!lo || *value < *lo) {
                        lo = *value;
                        min_choice = choice;
                    }
                    if (!hi || *value > *hi) {
                        hi = *value;
                        max_choice = choice;
                    }
                }
            }
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] == options.size()) idx[k++] = 0;
        if (k == n) break;
    }
    result.limits.assign(limits.begin(), limits.end());
    if (inf_choice) result.infinite_example = build_arc(pt, *inf_choice, budget, exps);
    if (min_choice) result.min_example = build_arc(pt, *min_choice, budget, exps);
    if (max_choice) result.max_example = build_arc(pt, *max_choice, budget, exps);
    return result;
}

}  // namespace lbr
