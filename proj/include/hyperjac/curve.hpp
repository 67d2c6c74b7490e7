#ifndef HYPERJAC_CURVE_HPP
#define HYPERJAC_CURVE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperjac/errors.hpp"
#include "hyperjac/fp.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/rng.hpp"

namespace hyperjac {

template <class K>
struct AffinePoint {
    typename K::Elem x;
    typename K::Elem y;

    friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const AffinePoint& a, const AffinePoint& b) { return !(a == b); }
};

// (x, y) -> (x, -y); fixes branch points.
template <class K>
AffinePoint<K> involution(const AffinePoint<K>& p) {
    return {p.x, -p.y};
}

// Grading with wgt x = 2 and wgt y = 2g+1.
struct SatoWeight {
    long long value;
    friend bool operator==(SatoWeight a, SatoWeight b) { return a.value == b.value; }
    friend bool operator<(SatoWeight a, SatoWeight b) { return a.value < b.value; }
};

inline SatoWeight monomial_weight(int x_exp, int y_exp, int genus) {
    return SatoWeight{2ll * x_exp + (2ll * genus + 1) * y_exp};
}

// Hyperelliptic curve y^2 = P(x) with P monic of degree 2g+1 and squarefree,
// so the single branch point at infinity stays implicit. The coefficient of
// x^n is the curve parameter of Sato index 4g+2-2n.
template <class K>
class Curve {
public:
    Curve(int genus, Poly<K> p) : genus_(genus), p_(std::move(p)) {
        if (genus_ < 1) raise(errc::bad_degree, "genus must be at least 1");
        if (p_.degree_or(-1) != 2 * genus_ + 1)
            raise(errc::bad_degree, "P must have degree 2g+1 = " + std::to_string(2 * genus_ + 1));
        if (!(p_.leading() == field().one()))
            raise(errc::bad_degree, "P must be monic");
        const std::uint64_t ch = field().characteristic();
        if (ch != 0 && ch <= static_cast<std::uint64_t>(2 * genus_ + 1))
            raise(errc::bad_characteristic,
                  "field characteristic must be 0 or exceed 2g+1 = " + std::to_string(2 * genus_ + 1));
        Poly<K> d = p_.derivative();
        if (d.is_zero() || poly_gcd(p_, d).degree_or(0) != 0)
            raise(errc::singular_curve, "P shares a root with P'");
    }

    // Builds P from parameters keyed by Sato index; index 0 is forced to 1.
    static Curve from_lambdas(const K& k, int genus,
                              const std::map<int, typename K::Elem>& lambda) {
        if (genus < 1) raise(errc::bad_degree, "genus must be at least 1");
        std::vector<typename K::Elem> coeffs(static_cast<std::size_t>(2 * genus + 2), k.zero());
        coeffs.back() = k.one();
        for (const auto& [idx, value] : lambda) {
            if (idx <= 0 || idx > 4 * genus + 2 || idx % 2 != 0)
                raise(errc::bad_degree, "lambda index " + std::to_string(idx) +
                                            " outside {2, 4, ..., " + std::to_string(4 * genus + 2) + "}");
            coeffs[static_cast<std::size_t>((4 * genus + 2 - idx) / 2)] = value;
        }
        return Curve(genus, Poly<K>(k, std::move(coeffs)));
    }

    int genus() const noexcept { return genus_; }
    const Poly<K>& rhs() const noexcept { return p_; }
    const K& field() const noexcept { return p_.field(); }

    // Curve parameter of the given even Sato index (0 gives the leading 1).
    typename K::Elem lambda(int sato_index) const {
        if (sato_index < 0 || sato_index % 2 != 0) raise(errc::bad_degree, "Sato indices are even");
        return p_.coeff((4 * genus_ + 2 - sato_index) / 2);
    }

    bool contains(const AffinePoint<K>& pt) const { return pt.y * pt.y == p_.eval(pt.x); }

    AffinePoint<K> point(const typename K::Elem& x, const typename K::Elem& y) const {
        AffinePoint<K> p{x, y};
        if (!contains(p)) raise(errc::not_on_curve, "y^2 != P(x)");
        return p;
    }

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.genus_ == b.genus_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

private:
    int genus_;
    Poly<K> p_;
};

// Uniform point with y != 0, deterministic per seed. Prime fields only.
template <class K>
AffinePoint<K> random_point(const Curve<K>& c, std::uint64_t seed) {
    if constexpr (!K::is_prime_field) {
        raise(errc::no_point_found, "point sampling requires a prime field");
    } else {
        const K& k = c.field();
        Rng rng(mix_seed(seed, 0x68796a70ull));
        for (int tries = 0; tries < 20000; ++tries) {
            Fp x(rng.below(k.characteristic()), k.characteristic());
            Fp z = c.rhs().eval(x);
            if (z.is_zero()) continue;
            Fp y = k.zero();
            if (!sqrt_mod(k, z, y)) continue;
            if (rng.coin()) y = -y;
            return AffinePoint<K>{x, y};
        }
        raise(errc::no_point_found, "no affine point with y != 0 found");
    }
}

} // namespace hyperjac

#endif
