#ifndef HYPERJAC_TESTS_SUPPORT_HPP
#define HYPERJAC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperjac/hyperjac.hpp"

namespace hjtest {

using namespace hyperjac;

// Random curve points with pairwise distinct x (so no duplicates and no
// involution pairs), deterministic per seed.
template <class K>
std::vector<AffinePoint<K>> draw_points(const Curve<K>& c, int n, std::uint64_t seed) {
    std::vector<AffinePoint<K>> pts;
    std::uint64_t salt = seed;
    while (static_cast<int>(pts.size()) < n) {
        AffinePoint<K> p = random_point(c, salt++);
        bool fresh = true;
        for (const auto& q : pts) {
            if (q.x == p.x) { fresh = false; break; }
        }
        if (fresh) pts.push_back(p);
    }
    return pts;
}

// Chord/tangent group law on a genus-1 curve y^2 = x^3 + c2 x^2 + c1 x + c0;
// the independent oracle for the hand fixtures. nullopt is the point at
// infinity.
template <class K>
std::optional<AffinePoint<K>> ec_add(const Curve<K>& c, std::optional<AffinePoint<K>> a,
                                     std::optional<AffinePoint<K>> b) {
    const K& k = c.field();
    if (!a) return b;
    if (!b) return a;
    if (a->x == b->x && a->y == -b->y) return std::nullopt;
    typename K::Elem slope = k.zero();
    if (a->x == b->x) {
        slope = c.rhs().derivative().eval(a->x) / (k.from_int(2) * a->y);
    } else {
        slope = (b->y - a->y) / (b->x - a->x);
    }
    typename K::Elem x3 = slope * slope - c.rhs().coeff(2) - a->x - b->x;
    typename K::Elem y3 = -(a->y + slope * (x3 - a->x));
    return AffinePoint<K>{x3, y3};
}

// Exponential multiset-enumeration oracle for the complete homogeneous
// symmetric polynomial, independent of the library recurrence.
template <class K>
typename K::Elem h_enum(const K& k, const std::vector<typename K::Elem>& xs, int n,
                        int start = 0) {
    if (n < 0) return k.zero();
    if (n == 0) return k.one();
    typename K::Elem acc = k.zero();
    for (int i = start; i < static_cast<int>(xs.size()); ++i) {
        acc += xs[static_cast<std::size_t>(i)] * h_enum(k, xs, n - 1, i);
    }
    return acc;
}

// Distinct random elements of GF(p).
inline std::vector<Fp> distinct_fp(const FpField& k, int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Fp> out;
    while (static_cast<int>(out.size()) < n) {
        Fp v(rng.below(k.p), k.p);
        bool fresh = true;
        for (const auto& w : out) {
            if (w == v) { fresh = false; break; }
        }
        if (fresh) out.push_back(v);
    }
    return out;
}

// Distinct small random rationals.
inline std::vector<Rat> distinct_rats(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Rat> out;
    while (static_cast<int>(out.size()) < n) {
        long long num = static_cast<long long>(rng.below(41)) - 20;
        long long den = static_cast<long long>(rng.below(9)) + 1;
        Rat v(num, den);
        bool fresh = true;
        for (const auto& w : out) {
            if (w == v) { fresh = false; break; }
        }
        if (fresh) out.push_back(v);
    }
    return out;
}

inline Curve<RatField> cubic_curve(const RatField& q) {
    return Curve<RatField>::from_lambdas(q, 1, {{6, q.one()}});   // y^2 = x^3 + 1
}

inline Curve<FpField> genus2_curve(const FpField& k) {
    return Curve<FpField>::from_lambdas(k, 2, {{10, k.one()}, {8, k.from_int(3)}});
}

} // namespace hjtest

#endif
