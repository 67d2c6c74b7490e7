#ifndef HYPERJAC_CANTOR_HPP
#define HYPERJAC_CANTOR_HPP

#include <vector>

#include "hyperjac/divisor.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/poly.hpp"

namespace hyperjac {

// Classical composition/reduction on Mumford pairs. This file is the oracle:
// it shares no logic with the interpolation-based reducers, only the raw
// polynomial primitives.

// Semi-reduced composition handling all gcd cases, doubling included.
template <class K>
MumfordDivisor<K> cantor_compose(const MumfordDivisor<K>& a, const MumfordDivisor<K>& b) {
    if (a.curve() != b.curve()) raise(errc::curve_mismatch, "composition across curves");
    const Curve<K>& c = a.curve();

    auto [d0, e1, e2] = poly_xgcd(a.u(), b.u());
    auto [d, c1, c2] = poly_xgcd(d0, a.v() + b.v());
    Poly<K> s1 = c1 * e1;
    Poly<K> s2 = c1 * e2;
    // d = s1*U1 + s2*U2 + c2*(V1+V2)

    Poly<K> u = (a.u() * b.u()).div_exact(d * d);
    Poly<K> v_num = s1 * a.u() * b.v() + s2 * b.u() * a.v() + c2 * (a.v() * b.v() + c.rhs());
    Poly<K> v = v_num.div_exact(d) % u;
    return MumfordDivisor<K>(c, u, v);
}

// Reduction loop: U' = (P - V^2)/U, V' = -V mod U', until deg U <= g.
// Idempotent on already-reduced input.
template <class K>
MumfordDivisor<K> cantor_reduce(const MumfordDivisor<K>& d) {
    const Curve<K>& c = d.curve();
    Poly<K> u = d.u();
    Poly<K> v = d.v();
    while (u.degree_or(0) > c.genus()) {
        Poly<K> u2 = (c.rhs() - v * v).div_exact(u).monic();
        v = (-v) % u2;
        u = u2;
    }
    return MumfordDivisor<K>(c, u, v);
}

// Ground-truth reduction of a point multiset: fold the points in one at a
// time through composition, then reduce.
template <class K>
MumfordDivisor<K> cantor_reduce_points(const PointDivisor<K>& d) {
    const Curve<K>& c = d.curve();
    const K& k = c.field();
    MumfordDivisor<K> acc(c, Poly<K>::constant(k, k.one()), Poly<K>(k));
    for (const auto& [pt, mult] : d.entries()) {
        MumfordDivisor<K> single(c, Poly<K>::linear_root(k, pt.x), Poly<K>::constant(k, pt.y));
        for (int i = 0; i < mult; ++i) acc = cantor_reduce(cantor_compose(acc, single));
    }
    return acc;
}

// Canonical class representative; classes compare equal iff these do.
template <class K>
MumfordDivisor<K> canonical_form(const MumfordDivisor<K>& d) {
    return cantor_reduce(d);
}

template <class K>
bool class_equal(const MumfordDivisor<K>& a, const MumfordDivisor<K>& b) {
    if (a.curve() != b.curve()) raise(errc::curve_mismatch, "class comparison across curves");
    return canonical_form(a) == canonical_form(b);
}

} // namespace hyperjac

#endif
