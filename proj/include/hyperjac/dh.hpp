#ifndef HYPERJAC_DH_HPP
#define HYPERJAC_DH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperjac/addition.hpp"
#include "hyperjac/divisor.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/reduce_iter.hpp"

namespace hyperjac {

enum class DhScenario { I, II };

// Double-and-add over reduced classes. Doubling composes through the oracle
// (shared support) and reduces through the minimal-weight machinery.
template <class K>
MumfordDivisor<K> scalar_mul_class(std::uint64_t n, const MumfordDivisor<K>& base,
                                   AddStats* stats = nullptr) {
    if (n == 0) return neutral(base.curve());
    int top = 63;
    while (top > 0 && ((n >> top) & 1) == 0) --top;
    MumfordDivisor<K> acc = base;
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = add_divisors(acc, acc, stats);
        if ((n >> bit) & 1) acc = add_divisors(acc, base, stats);
    }
    return acc;
}

// Scalar multiple of a point-known base. The first doubling goes through the
// point multiset so that its seed is the duplicated-point formula (degree-g
// base of distinct points) or the (g+1)P formula (base g*P1); every later
// step works on classes only, as after a key exchange round trip.
template <class K>
MumfordDivisor<K> scalar_mul_points(std::uint64_t n, const PointDivisor<K>& base,
                                    IterStats* iter_stats = nullptr, AddStats* stats = nullptr) {
    const Curve<K>& c = base.curve();
    MumfordDivisor<K> base_class = mumford_from_pairform(pairform_from_points(base));
    if (n == 1) return base_class;
    if (n == 0) return neutral(c);

    // 2*base as a multiset ordered so the first g+1 entries have the shape
    // the closed formulas expect: P1 doubled ahead of the remaining points.
    std::vector<typename PointDivisor<K>::Entry> doubled;
    const auto& entries = base.entries();
    if (entries.size() == 1) {
        doubled.push_back({entries[0].first, 2 * entries[0].second});
    } else {
        doubled.push_back({entries[0].first, 2});
        for (std::size_t i = 1; i < entries.size(); ++i) doubled.push_back(entries[i]);
        for (std::size_t i = 1; i < entries.size(); ++i) doubled.push_back(entries[i]);
    }
    MumfordDivisor<K> two_base =
        reduce_iterative(c, PointDivisor<K>(c, std::move(doubled)), Strategy::by_g1, iter_stats);

    int top = 63;
    while (top > 0 && ((n >> top) & 1) == 0) --top;
    MumfordDivisor<K> acc = two_base;
    if ((n >> (top - 1)) & 1) acc = add_divisors(acc, base_class, stats);
    for (int bit = top - 2; bit >= 0; --bit) {
        acc = add_divisors(acc, acc, stats);
        if ((n >> bit) & 1) acc = add_divisors(acc, base_class, stats);
    }
    return acc;
}

// Both sides of the exchange: shared_a = n_a (n_b base), shared_b reversed.
template <class K>
std::pair<MumfordDivisor<K>, MumfordDivisor<K>> dh_exchange(const Curve<K>& c,
                                                            const PointDivisor<K>& base,
                                                            std::uint64_t n_a, std::uint64_t n_b,
                                                            DhScenario scenario,
                                                            IterStats* iter_stats = nullptr) {
    if (!(base.curve() == c)) raise(errc::curve_mismatch, "base divisor on another curve");
    if (n_a < 1 || n_b < 1) raise(errc::parse_error, "exponents must be positive");
    const int g = c.genus();

    if (scenario == DhScenario::I) {
        if (base.degree() != g || static_cast<int>(base.entries().size()) != g)
            raise(errc::parse_error, "scenario I needs a base of g distinct points");
        if (!is_nonspecial(base)) raise(errc::special_divisor, "scenario I base is special");
    } else {
        if (static_cast<int>(base.entries().size()) != 1 || base.degree() != g)
            raise(errc::parse_error, "scenario II needs a base of the form g*P1");
        if (base.entries()[0].first.y.is_zero())
            raise(errc::branch_point, "scenario II base point is a branch point");
    }

    MumfordDivisor<K> a_public = scalar_mul_points(n_a, base, iter_stats);
    MumfordDivisor<K> b_public = scalar_mul_points(n_b, base, iter_stats);
    MumfordDivisor<K> shared_a = scalar_mul_class(n_a, b_public);
    MumfordDivisor<K> shared_b = scalar_mul_class(n_b, a_public);
    return {shared_a, shared_b};
}

} // namespace hyperjac

#endif
