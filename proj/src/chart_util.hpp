#pragma once

#include "lbr/arcs.hpp"
#include "lbr/resolve.hpp"

namespace lbr::detail {

template <class K>
std::vector<MPoly<K>> chart_map(ChartKind chart) {
    MPoly<K> u = MPoly<K>::variable(2, 0), v = MPoly<K>::variable(2, 1);
    if (chart == ChartKind::A) return {u, u * v};
    return {u * v, v};
}

// Restriction of f(u, v) to the line `var` = 0, as a polynomial in the other variable.
inline UPoly<AlgNum> restrict_to_axis(const AlgPoly& f, std::size_t var) {
    std::size_t other = 1 - var;
    std::vector<AlgNum> c(f.degree(other) + 1, AlgNum(0L));
    for (const auto& [e, k] : f.terms())
        if (e[var] == 0) c[e[other]] = k;
    return UPoly<AlgNum>(std::move(c));
}

inline AlgNum coefficient_of(const AlgPoly& f, const Exponents& e) {
    for (const auto& [ex, c] : f.terms())
        if (ex == e) return c;
    return AlgNum(0L);
}

inline AlgPoly exceptional_power(std::size_t var, unsigned k) {
    Exponents e{0, 0};
    e[var] = k;
    return AlgPoly::monomial(e, AlgNum(1L));
}

inline TowerPtr tower_of(const AlgPoly& p, TowerPtr t) {
    for (const auto& [e, c] : p.terms()) t = common_tower(t, c.tower());
    return t;
}

// M composed with local coordinates translated by (0, beta) on chart A.
inline std::vector<AlgPoly> chart_a_child_map(const std::vector<AlgPoly>& M, const AlgNum& beta) {
    AlgPoly X = AlgPoly::variable(2, 0), Y = AlgPoly::variable(2, 1);
    std::vector<AlgPoly> out;
    for (const auto& m : M) out.push_back(substitute(m, std::vector<AlgPoly>{X, X * (Y + AlgPoly::constant(2, beta))}));
    return out;
}

inline std::vector<AlgPoly> chart_b_child_map(const std::vector<AlgPoly>& M) {
    std::vector<AlgPoly> out;
    for (const auto& m : M) out.push_back(substitute(m, chart_map<AlgNum>(ChartKind::B)));
    return out;
}

// Image under M of the local arc (a t, b t); throws ConstantArc when degenerate.
inline Arc map_line_arc(const std::vector<AlgPoly>& M, const AlgNum& a, const AlgNum& b) {
    std::vector<PuiseuxPoly> entries;
    for (const auto& m : M) {
        std::vector<AlgNum> c;
        for (const auto& [e, k] : m.terms()) {
            unsigned d = e[0] + e[1];
            if (c.size() <= d) c.resize(d + 1, AlgNum(0L));
            AlgNum term = k;
            for (unsigned i = 0; i < e[0]; ++i) term *= a;
            for (unsigned i = 0; i < e[1]; ++i) term *= b;
            c[d] += term;
        }
        entries.push_back(PuiseuxPoly::from_upoly(UPoly<AlgNum>(std::move(c))));
    }
    return make_arc(std::move(entries));
}

inline std::vector<AlgPoly> translation_map(const Point& pt) {
    return {AlgPoly::variable(2, 0) + AlgPoly::constant(2, pt[0]), AlgPoly::variable(2, 1) + AlgPoly::constant(2, pt[1])};
}

}  // namespace lbr::detail
