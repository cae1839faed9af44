#include "lbr/algebraic.hpp"

#include <algorithm>
#include <utility>

namespace lbr {

namespace {

Rational pow2(unsigned bits) { return Rational(Integer(1) << bits); }

// Outward rounding to the grid 2^-k keeps enclosure endpoints small.
Interval round_out(const Interval& iv, unsigned k) {
    if (iv.lo == iv.hi && iv.lo.get_den() == 1) return iv;
    Rational scale = pow2(k);
    Rational lo(floor(iv.lo * scale), Integer(1) << k);
    Rational hi(ceil(iv.hi * scale), Integer(1) << k);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

AlgNum make_element(const TowerPtr& tower, std::vector<AlgNum> c) {
    while (!c.empty() && c.back().is_trivially_zero()) c.pop_back();
    if (c.empty()) return AlgNum(0L);
    if (c.size() == 1) return c.front();
    return AlgNum::from_coefficients(tower, std::move(c));
}

}  // namespace

unsigned AlgNum::height() const { return tower_ ? tower_->height() : 0; }

AlgNum AlgNum::generator(const TowerPtr& tower) {
    LBR_ENSURE(tower != nullptr, "generator of the empty tower");
    return from_coefficients(tower, {AlgNum(0L), AlgNum(1L)});
}

AlgNum AlgNum::from_coefficients(const TowerPtr& tower, std::vector<AlgNum> c) {
    const auto& m = tower->defining().coeffs();
    const std::size_t d = m.size() - 1;
    for (std::size_t i = c.size(); i-- > d;) {
        if (c[i].is_trivially_zero()) continue;
        AlgNum lead = c[i];
        for (std::size_t j = 0; j < d; ++j) c[i - d + j] = c[i - d + j] - lead * m[j];
        c[i] = AlgNum(0L);
    }
    while (!c.empty() && c.back().is_trivially_zero()) c.pop_back();
    if (c.empty()) return AlgNum(0L);
    if (c.size() == 1) return c.front();
    AlgNum r;
    r.tower_ = tower;
    r.c_ = std::move(c);
    return r;
}

bool is_ancestor(const TowerPtr& ancestor, const TowerPtr& t) {
    if (!ancestor) return true;
    const TowerNode* node = t.get();
    while (node && node->height() > ancestor->height()) node = node->parent().get();
    return node == ancestor.get();
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
    if (is_ancestor(a, b)) return b;
    if (is_ancestor(b, a)) return a;
    throw Error(ErrorKind::IncompatibleTowers, "operands live in unrelated extension towers");
}

TowerPtr deepest_tower(const std::vector<AlgNum>& values) {
    TowerPtr t;
    for (const auto& v : values) t = common_tower(t, v.tower());
    return t;
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
    if (a.is_trivially_zero()) return b;
    if (b.is_trivially_zero()) return a;
    if (!a.tower_ && !b.tower_) return AlgNum(Rational(a.q_ + b.q_));
    unsigned ha = a.height(), hb = b.height();
    if (ha == hb) {
        if (a.tower_ != b.tower_)
            throw Error(ErrorKind::IncompatibleTowers, "operands live in unrelated extension towers");
        std::vector<AlgNum> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] = a.c_[i];
            if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
        }
        return make_element(a.tower_, std::move(c));
    }
    const AlgNum& deep = ha > hb ? a : b;
    const AlgNum& shallow = ha > hb ? b : a;
    if (!is_ancestor(shallow.tower_, deep.tower_))
        throw Error(ErrorKind::IncompatibleTowers, "operands live in unrelated extension towers");
    std::vector<AlgNum> c = deep.c_;
    c[0] = c[0] + shallow;
    return make_element(deep.tower_, std::move(c));
}

AlgNum AlgNum::operator-() const {
    if (!tower_) return AlgNum(Rational(-q_));
    AlgNum r;
    r.tower_ = tower_;
    r.c_.reserve(c_.size());
    for (const auto& k : c_) r.c_.push_back(-k);
    return r;
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    if (a.is_trivially_zero() || b.is_trivially_zero()) return AlgNum(0L);
    if (!a.tower_ && !b.tower_) return AlgNum(Rational(a.q_ * b.q_));
    unsigned ha = a.height(), hb = b.height();
    if (ha == hb) {
        if (a.tower_ != b.tower_)
            throw Error(ErrorKind::IncompatibleTowers, "operands live in unrelated extension towers");
        std::vector<AlgNum> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_trivially_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return AlgNum::from_coefficients(a.tower_, std::move(c));
    }
    const AlgNum& deep = ha > hb ? a : b;
    const AlgNum& shallow = ha > hb ? b : a;
    if (!is_ancestor(shallow.tower_, deep.tower_))
        throw Error(ErrorKind::IncompatibleTowers, "operands live in unrelated extension towers");
    std::vector<AlgNum> c;
    c.reserve(deep.c_.size());
    for (const auto& k : deep.c_) c.push_back(k * shallow);
    return make_element(deep.tower_, std::move(c));
}

Interval AlgNum::enclosure(unsigned bits) const {
    if (!tower_) return Interval(q_);
    Interval x = tower_->interval(bits);
    Interval acc = c_.back().enclosure(bits);
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = round_out(acc * x + c_[i].enclosure(bits), bits + 8);
    return acc;
}

bool AlgNum::is_zero() const {
    if (!tower_) return sgn(q_) == 0;
    if (enclosure(0).sign() != 0) return false;
    UPoly<AlgNum> r(c_);
    if (r.is_zero()) return true;
    if (r.degree() == 0) return false;
    UPoly<AlgNum> g = gcd(r, tower_->defining());
    if (g.degree() <= 0) return false;
    return tower_->is_root_of(g);
}

int AlgNum::sign() const {
    if (!tower_) return sgn(q_);
    int s = enclosure(0).sign();
    if (s != 0) return s;
    if (is_zero()) return 0;
    for (unsigned bits = 32;; bits *= 2) {
        s = enclosure(bits).sign();
        if (s != 0) return s;
        LBR_ENSURE(bits < (1u << 20), "sign refinement did not converge");
    }
}

AlgNum AlgNum::inverse() const {
    if (!tower_) {
        if (sgn(q_) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        return AlgNum(Rational(1 / q_));
    }
    UPoly<AlgNum> r(c_);
    if (r.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const UPoly<AlgNum>& m = tower_->defining();
    XGcd<AlgNum> x = xgcd(r, m);
    if (x.g.degree() > 0) {
        if (tower_->is_root_of(x.g)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        x = xgcd(r, div_exact(m, x.g));
        LBR_ENSURE(x.g.degree() == 0, "cofactor inverse failed");
    }
    return from_coefficients(tower_, x.s.coeffs());
}

TowerNode::TowerNode(TowerPtr parent, UPoly<AlgNum> defining, Rational lo, Rational hi)
    : parent_(std::move(parent)),
      height_(parent_ ? parent_->height() + 1 : 1),
      defining_(monic(defining)),
      lo_(std::move(lo)),
      hi_(std::move(hi)) {
    LBR_ENSURE(defining_.degree() >= 1, "tower level needs a nonconstant defining polynomial");
    for (const auto& c : defining_.coeffs())
        LBR_ENSURE(is_ancestor(c.tower(), parent_), "defining polynomial is not over the parent tower");
    LBR_ENSURE(lo_ <= hi_, "isolating interval is reversed");
    if (lo_ == hi_) {
        LBR_ENSURE(evaluate<AlgNum>(defining_, AlgNum(lo_)).is_zero(), "exact tower root is not a root");
        exact_ = true;
        return;
    }
    sign_lo_ = evaluate<AlgNum>(defining_, AlgNum(lo_)).sign();
    int sign_hi = evaluate<AlgNum>(defining_, AlgNum(hi_)).sign();
    LBR_ENSURE(sign_lo_ != 0 && sign_hi == -sign_lo_, "interval does not isolate a simple root");
}

Interval TowerNode::interval() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return {lo_, hi_};
}

Interval TowerNode::interval(unsigned bits) const {
    std::lock_guard<std::mutex> lock(mutex_);
    Rational target = 1 / pow2(bits);
    while (!exact_ && hi_ - lo_ > target) {
        Rational mid = (lo_ + hi_) / 2;
        int s = evaluate<AlgNum>(defining_, AlgNum(mid)).sign();
        if (s == 0) {
            lo_ = hi_ = mid;
            exact_ = true;
        } else if (s == sign_lo_) {
            lo_ = mid;
        } else {
            hi_ = mid;
        }
    }
    return {lo_, hi_};
}

bool TowerNode::is_root_of(const UPoly<AlgNum>& g) const {
    Interval iv = interval();
    if (iv.lo == iv.hi) return evaluate<AlgNum>(g, AlgNum(iv.lo)).is_zero();
    int s1 = evaluate<AlgNum>(g, AlgNum(iv.lo)).sign();
    int s2 = evaluate<AlgNum>(g, AlgNum(iv.hi)).sign();
    LBR_ENSURE(s1 != 0 && s2 != 0, "divisor of the defining polynomial vanishes at an interval endpoint");
    return s1 != s2;
}

TowerPtr extend_tower(const TowerPtr& parent, const UPoly<AlgNum>& p, const Rational& lo, const Rational& hi) {
    return std::make_shared<const TowerNode>(parent, p, lo, hi);
}

namespace {

UPoly<AlgNum> lift(const UPoly<Rational>& p) {
    std::vector<AlgNum> c;
    for (const auto& k : p.coeffs()) c.emplace_back(k);
    return UPoly<AlgNum>(std::move(c));
}

}  // namespace

std::vector<AlgNum> real_roots(const UPoly<AlgNum>& p, const TowerPtr& context) {
    if (p.is_zero()) throw Error(ErrorKind::Precondition, "real roots of the zero polynomial");
    bool rational = true;
    for (const auto& c : p.coeffs()) {
        LBR_ENSURE(is_ancestor(c.tower(), context), "polynomial coefficients outside the context tower");
        rational = rational && c.is_rational();
    }
    std::vector<AlgNum> out;
    if (rational) {
        std::vector<Rational> c;
        for (const auto& k : p.coeffs()) c.push_back(k.rational());
        for (auto& root : isolate_real_roots(UPoly<Rational>(std::move(c)))) {
            if (root.exact)
                out.emplace_back(*root.exact);
            else
                out.push_back(AlgNum::generator(extend_tower(context, lift(root.defining), root.lo, root.hi)));
        }
        return out;
    }
    UPoly<AlgNum> q = squarefree_part(p);
    if (q.degree() <= 0) return out;
    if (q.degree() == 1) {
        out.push_back(-q.coeff(0) / q.lc());
        return out;
    }
    for (auto& root : isolate_real_roots(q)) {
        if (root.exact)
            out.emplace_back(*root.exact);
        else
            out.push_back(AlgNum::generator(extend_tower(context, root.defining, root.lo, root.hi)));
    }
    return out;
}

std::vector<AlgNum> real_roots(const UPoly<AlgNum>& p) { return real_roots(p, deepest_tower(p.coeffs())); }

RealAlgebraic::RealAlgebraic(const Rational& r) : poly(std::vector<Rational>{-r, Rational(1)}), lo(r), hi(r), exact(r) {
    poly = primitive_integral(poly);
}

RealAlgebraic::RealAlgebraic(UPoly<Rational> p, Rational l, Rational h)
    : poly(std::move(p)), lo(std::move(l)), hi(std::move(h)) {
    if (lo == hi) exact = lo;
}

void RealAlgebraic::refine(unsigned bits) {
    if (exact) return;
    RealRoot<Rational> r{poly, lo, hi, std::nullopt};
    lbr::refine(r, bits);
    lo = r.lo;
    hi = r.hi;
    exact = r.exact;
}

std::string RealAlgebraic::approx(int digits) const {
    if (exact) return to_decimal(*exact, digits);
    RealAlgebraic copy = *this;
    copy.refine(static_cast<unsigned>(digits) * 4 + 8);
    if (copy.exact) return to_decimal(*copy.exact, digits);
    return to_decimal(copy.lo, digits);
}

namespace {

MPoly<Rational> flatten(const AlgNum& a, std::size_t arity) {
    if (a.is_rational()) return MPoly<Rational>::constant(arity, a.rational());
    MPoly<Rational> r(arity);
    std::size_t var = a.height() - 1;
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        r += flatten(a.coefficients()[i], arity).shifted_up(var, static_cast<unsigned>(i));
    return r;
}

MPoly<Rational> flatten_defining(const TowerNode& node, std::size_t arity) {
    MPoly<Rational> r(arity);
    std::size_t var = node.height() - 1;
    const auto& c = node.defining().coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) r += flatten(c[i], arity).shifted_up(var, static_cast<unsigned>(i));
    return r;
}

}  // namespace

UPoly<Rational> rational_annihilator(const AlgNum& a) {
    if (a.is_rational()) return primitive_integral(UPoly<Rational>(std::vector<Rational>{-a.rational(), Rational(1)}));
    const std::size_t h = a.height();
    const std::size_t arity = h + 1;
    MPoly<Rational> r = MPoly<Rational>::variable(arity, h) - flatten(a, arity);
    for (const TowerNode* node = a.tower().get(); node; node = node->parent().get()) {
        std::size_t var = node->height() - 1;
        if (!r.depends_on(var)) continue;
        r = resultant(r, flatten_defining(*node, arity), var);
    }
    return primitive_integral(squarefree_part(to_upoly(r, h)));
}

RealAlgebraic to_real_algebraic(const AlgNum& a) {
    if (a.is_rational()) return RealAlgebraic(a.rational());
    UPoly<Rational> n = rational_annihilator(a);
    auto roots = isolate_real_roots(n);
    LBR_ENSURE(!roots.empty(), "annihilator has no real root");
    for (unsigned bits = 16;; bits *= 2) {
        Interval e = a.enclosure(bits);
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            refine(roots[i], bits);
            Interval ri = roots[i].enclosure();
            if (ri.hi >= e.lo && ri.lo <= e.hi) hits.push_back(i);
        }
        LBR_ENSURE(!hits.empty(), "element value lost while locating its annihilator root");
        if (hits.size() == 1) {
            const auto& r = roots[hits.front()];
            if (r.exact) return RealAlgebraic(*r.exact);
            return RealAlgebraic(primitive_integral(r.defining), r.lo, r.hi);
        }
        LBR_ENSURE(bits < (1u << 20), "root location did not converge");
    }
}

AlgNum to_alg_num(const RealAlgebraic& r) {
    if (r.exact) return AlgNum(*r.exact);
    return AlgNum::generator(extend_tower(nullptr, lift(r.poly), r.lo, r.hi));
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.exact && b.exact) return cmp(*a.exact, *b.exact);
    RealAlgebraic x = a, y = b;
    for (unsigned bits = 8; bits <= 64; bits *= 2) {
        if (x.hi < y.lo) return -1;
        if (y.hi < x.lo) return 1;
        x.refine(bits);
        y.refine(bits);
    }
    if (x.hi < y.lo) return -1;
    if (y.hi < x.lo) return 1;
    AlgNum ax = to_alg_num(x);
    AlgNum ay = y.exact ? AlgNum(*y.exact) : AlgNum::generator(extend_tower(ax.tower(), lift(y.poly), y.lo, y.hi));
    return (ax - ay).sign();
}

std::string to_string(const AlgNum& a) {
    if (a.is_rational()) return to_string(a.rational());
    return "~" + to_decimal(a.enclosure(64).midpoint(), 12);
}

}  // namespace lbr
