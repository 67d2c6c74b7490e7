#ifndef HYPERJAC_DIVISOR_HPP
#define HYPERJAC_DIVISOR_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperjac/curve.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/poly.hpp"

namespace hyperjac {

// Coefficients c_n of the branch of y = sqrt(P(x)) through a non-branch point,
// i.e. y(x) = sum c_n (x - x0)^n. Squaring the series and matching it against
// the Taylor coefficients p_n of P at x0 gives c_0 = y0 and
//   c_n = (p_n - sum_{i=1}^{n-1} c_i c_{n-i}) / (2 c_0).
template <class K>
std::vector<typename K::Elem> y_taylor_coeffs(const Curve<K>& c, const AffinePoint<K>& p,
                                              int count) {
    const K& k = c.field();
    if (p.y.is_zero()) raise(errc::branch_point, "y-series undefined at a branch point");
    std::vector<typename K::Elem> pn = taylor_coeffs_at(c.rhs(), p.x, count);
    std::vector<typename K::Elem> cn;
    cn.reserve(static_cast<std::size_t>(count));
    cn.push_back(p.y);
    const typename K::Elem half = (k.from_int(2) * p.y).inverse();
    for (int n = 1; n < count; ++n) {
        typename K::Elem acc = pn[static_cast<std::size_t>(n)];
        for (int i = 1; i < n; ++i) {
            acc -= cn[static_cast<std::size_t>(i)] * cn[static_cast<std::size_t>(n - i)];
        }
        cn.push_back(acc * half);
    }
    return cn;
}

// Multiset of affine curve points with explicit multiplicities, kept in input
// order (the iterative reducer seeds deterministically from that order).
template <class K>
class PointDivisor {
public:
    using Entry = std::pair<AffinePoint<K>, int>;

    PointDivisor(Curve<K> curve, std::vector<Entry> entries)
        : curve_(std::move(curve)), entries_(std::move(entries)) {
        for (const auto& [pt, mult] : entries_) {
            if (mult <= 0) raise(errc::bad_degree, "multiplicities must be positive");
            if (!curve_.contains(pt)) raise(errc::not_on_curve, "divisor point off the curve");
        }
    }

    static PointDivisor from_points(Curve<K> curve, const std::vector<AffinePoint<K>>& pts) {
        std::vector<Entry> entries;
        for (const auto& p : pts) {
            bool merged = false;
            for (auto& [q, mult] : entries) {
                if (q == p) {
                    ++mult;
                    merged = true;
                    break;
                }
            }
            if (!merged) entries.push_back({p, 1});
        }
        return PointDivisor(std::move(curve), std::move(entries));
    }

    const Curve<K>& curve() const noexcept { return curve_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    int degree() const noexcept {
        int d = 0;
        for (const auto& e : entries_) d += e.second;
        return d;
    }

    std::vector<AffinePoint<K>> expanded() const {
        std::vector<AffinePoint<K>> out;
        out.reserve(static_cast<std::size_t>(degree()));
        for (const auto& [pt, mult] : entries_) {
            for (int i = 0; i < mult; ++i) out.push_back(pt);
        }
        return out;
    }

private:
    Curve<K> curve_;
    std::vector<Entry> entries_;
};

// Cancels every point/involuted-point pair; a branch point cancels against its
// own copies, so its multiplicity survives mod 2. Class-preserving because
// P + iota(P) - 2*infinity is the divisor of x - x_P.
template <class K>
PointDivisor<K> truncate_involution(const PointDivisor<K>& d) {
    auto entries = d.entries();
    for (auto& [pt, mult] : entries) {
        if (pt.y.is_zero()) {
            mult %= 2;
            continue;
        }
        for (auto& [qt, qmult] : entries) {
            if (&qt == &pt || mult == 0 || qmult == 0) continue;
            if (qt == involution(pt)) {
                int cancel = std::min(mult, qmult);
                mult -= cancel;
                qmult -= cancel;
            }
        }
    }
    std::vector<typename PointDivisor<K>::Entry> kept;
    for (auto& e : entries) {
        if (e.second > 0) kept.push_back(e);
    }
    return PointDivisor<K>(d.curve(), std::move(kept));
}

// Non-special: the involution-truncated divisor still has degree >= g.
template <class K>
bool is_nonspecial(const PointDivisor<K>& d) {
    if (d.degree() < d.curve().genus()) return false;
    return truncate_involution(d).degree() >= d.curve().genus();
}

// Mumford pair (U, V): U monic vanishing on the x-support, V matching the
// y-values, P - V^2 = 0 (mod U). Degree <= g means reduced.
template <class K>
class MumfordDivisor {
public:
    MumfordDivisor(Curve<K> curve, Poly<K> u, Poly<K> v)
        : curve_(std::move(curve)), u_(std::move(u)), v_(Poly<K>(curve_.field())) {
        if (u_.is_zero()) raise(errc::bad_degree, "U must be nonzero");
        u_ = u_.monic();
        v_ = v % u_;
        if (!((curve_.rhs() - v_ * v_) % u_).is_zero())
            raise(errc::not_on_curve, "P - V^2 not divisible by U");
    }

    const Curve<K>& curve() const noexcept { return curve_; }
    const Poly<K>& u() const noexcept { return u_; }
    const Poly<K>& v() const noexcept { return v_; }
    int degree() const noexcept { return u_.degree_or(0); }
    bool is_reduced() const noexcept { return degree() <= curve_.genus(); }

    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
        return a.curve_ == b.curve_ && a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) { return !(a == b); }

private:
    Curve<K> curve_;
    Poly<K> u_;
    Poly<K> v_;
};

// Pair form {F(x) = 0, y = L(x)} with deg L < deg F and P - L^2 = 0 (mod F).
// L of excess degree is normalised by reduction mod F on construction.
template <class K>
class PairForm {
public:
    PairForm(Curve<K> curve, Poly<K> f, Poly<K> l)
        : curve_(std::move(curve)), f_(std::move(f)), l_(Poly<K>(curve_.field())) {
        if (f_.is_zero()) raise(errc::bad_degree, "F must be nonzero");
        f_ = f_.monic();
        l_ = l % f_;
        if (!((curve_.rhs() - l_ * l_) % f_).is_zero())
            raise(errc::not_on_curve, "P - L^2 not divisible by F");
    }

    const Curve<K>& curve() const noexcept { return curve_; }
    const Poly<K>& f() const noexcept { return f_; }
    const Poly<K>& l() const noexcept { return l_; }
    int degree() const noexcept { return f_.degree_or(0); }
    int excess() const noexcept { return degree() - curve_.genus(); }

private:
    Curve<K> curve_;
    Poly<K> f_;
    Poly<K> l_;
};

// Builds the pair form of a point multiset. F is the product of the linear
// factors with multiplicity; L is the Hermite interpolant whose derivative
// data at a k-fold point comes from the y-series of the curve branch, glued
// across points by polynomial CRT. A multiple point must not be a branch
// point, and distinct points must not share an x-coordinate.
template <class K>
PairForm<K> pairform_from_points(const PointDivisor<K>& d) {
    const K& k = d.curve().field();
    const auto& entries = d.entries();

    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (!(entries[i].first.x == entries[j].first.x)) continue;
            if (entries[i].first.y == -entries[j].first.y)
                raise(errc::involution_pair, "divisor contains a point and its involution");
            raise(errc::x_collision, "distinct points share an x-coordinate");
        }
    }

    Poly<K> f = Poly<K>::constant(k, k.one());
    Poly<K> l(k);
    Poly<K> modulus_acc = Poly<K>::constant(k, k.one());
    for (const auto& [pt, mult] : entries) {
        if (mult > 1 && pt.y.is_zero())
            raise(errc::branch_point_multiplicity, "branch point with multiplicity above 1");
        Poly<K> local_mod = Poly<K>::linear_root(k, pt.x).pow(mult);
        Poly<K> local = mult == 1
                            ? Poly<K>::constant(k, pt.y)
                            : poly_from_taylor(k, y_taylor_coeffs(d.curve(), pt, mult), pt.x);
        if (modulus_acc.degree_or(0) == 0) {
            l = local % local_mod;
        } else {
            // Glue: find the unique lift mod modulus_acc * local_mod.
            auto [g, s, t] = poly_xgcd(modulus_acc, local_mod);
            (void)t;
            if (g.degree_or(0) != 0) raise(errc::x_collision, "interpolation moduli not coprime");
            Poly<K> corr = ((local - l) * s) % local_mod;
            l = l + modulus_acc * corr;
        }
        modulus_acc *= local_mod;
        f *= local_mod;
    }
    return PairForm<K>(d.curve(), f, l);
}

// Mumford divisor of the system {H(x) = 0, y = -I(x)}.
template <class K>
MumfordDivisor<K> mumford_from_HI(const Poly<K>& h, const Poly<K>& i, const Curve<K>& curve) {
    return MumfordDivisor<K>(curve, h, -i);
}

template <class K>
MumfordDivisor<K> mumford_from_pairform(const PairForm<K>& pf) {
    return MumfordDivisor<K>(pf.curve(), pf.f(), pf.l());
}

template <class K>
PairForm<K> pairform_from_mumford(const MumfordDivisor<K>& d) {
    return PairForm<K>(d.curve(), d.u(), d.v());
}

} // namespace hyperjac

#endif
