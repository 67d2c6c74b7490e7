#ifndef HYPERJAC_ADDITION_HPP
#define HYPERJAC_ADDITION_HPP

#include <stdexcept>
#include <utility>

#include "hyperjac/cantor.hpp"
#include "hyperjac/divisor.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/reduce_general.hpp"
#include "hyperjac/reduce_iter.hpp"

namespace hyperjac {

template <class K>
MumfordDivisor<K> neutral(const Curve<K>& c) {
    const K& k = c.field();
    return MumfordDivisor<K>(c, Poly<K>::constant(k, k.one()), Poly<K>(k));
}

// Divisor negation is the hyperelliptic involution on the y-values.
template <class K>
MumfordDivisor<K> negate(const MumfordDivisor<K>& d) {
    return MumfordDivisor<K>(d.curve(), d.u(), -d.v());
}

// Chinese-remainder composition of two pair forms with coprime supports:
// F = F1 F2 and L = M2 F1 L2 + M1 F2 L1 with M2 F1 + M1 F2 = 1, so that
// L = L_i mod F_i. The pre-normalisation degree of L is bounded by
// deg F1 + deg F2 + max(deg F1, deg F2) - 2, which is the stated
// 3g + m1 + m2 + max(m1, m2) - 2 for two excess-m_i inputs.
template <class K>
PairForm<K> crt_compose(const PairForm<K>& a, const PairForm<K>& b) {
    if (!(a.curve() == b.curve())) raise(errc::curve_mismatch, "composition across curves");
    const Curve<K>& c = a.curve();

    auto [d, m2, m1] = poly_xgcd(a.f(), b.f());
    if (d.degree_or(0) != 0)
        raise(errc::non_coprime_support, "supports share an x-coordinate");

    Poly<K> l_raw = m2 * a.f() * b.l() + m1 * b.f() * a.l();
    const int d1 = a.f().degree_or(0);
    const int d2 = b.f().degree_or(0);
    if (l_raw.degree_or(0) > d1 + d2 + std::max(d1, d2) - 2 && d1 > 0 && d2 > 0)
        throw std::logic_error("composition: L exceeds its degree bound");

    PairForm<K> out(c, a.f() * b.f(), l_raw);
    if (!((out.l() - a.l()) % a.f()).is_zero() || !((out.l() - b.l()) % b.f()).is_zero())
        throw std::logic_error("composition: residue conditions failed");
    return out;
}

enum class ReduceRoute { general, iterative };

struct AddStats {
    bool cantor_compose = false;   // composition went through the oracle (shared support)
    bool oracle_reduce = false;    // reduction fell back to the oracle (degenerate class)
    bool step1_only = false;       // composed degree was already <= g
};

// Full addition: compose (CRT fast path, oracle composition when the supports
// share roots), then reduce the composed pair through the minimal-weight
// function. Total on all inputs; every fallback is reported in the stats.
template <class K>
MumfordDivisor<K> add_divisors(const PairForm<K>& a, const PairForm<K>& b,
                               AddStats* stats = nullptr, ReduceRoute route = ReduceRoute::general) {
    if (!(a.curve() == b.curve())) raise(errc::curve_mismatch, "addition across curves");
    const Curve<K>& c = a.curve();
    AddStats local;
    AddStats& st = stats ? *stats : local;

    Poly<K> shared = poly_gcd(a.f(), b.f());
    PairForm<K> composed = [&] {
        if (shared.degree_or(0) == 0) return crt_compose(a, b);
        st.cantor_compose = true;
        MumfordDivisor<K> semi = cantor_compose(mumford_from_pairform(a), mumford_from_pairform(b));
        return pairform_from_mumford(semi);
    }();

    if (composed.excess() <= 0) {
        st.step1_only = true;
        return mumford_from_pairform(composed);
    }

    if (route == ReduceRoute::iterative) return reduce_pair_by_absorb(composed);

    try {
        MinWeightFn<K> r = minweight_from_pair(composed);
        return reduce_general(c, composed.f(), r).to_mumford();
    } catch (const Error& e) {
        if (e.code() != errc::singular_system && e.code() != errc::non_coprime_gamma_h) throw;
        st.oracle_reduce = true;
        return cantor_reduce(mumford_from_pairform(composed));
    }
}

template <class K>
MumfordDivisor<K> add_divisors(const MumfordDivisor<K>& a, const MumfordDivisor<K>& b,
                               AddStats* stats = nullptr, ReduceRoute route = ReduceRoute::general) {
    return add_divisors(pairform_from_mumford(a), pairform_from_mumford(b), stats, route);
}

} // namespace hyperjac

#endif
