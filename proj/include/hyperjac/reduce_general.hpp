#ifndef HYPERJAC_REDUCE_GENERAL_HPP
#define HYPERJAC_REDUCE_GENERAL_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperjac/curve.hpp"
#include "hyperjac/divisor.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/linalg.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/reduce_explicit.hpp"

namespace hyperjac {

// Rational function R(x, y) = y*gamma_y(x) + gamma_x(x) of Sato weight 2g+m,
// the smallest weight whose g+m roots can be prescribed freely.
template <class K>
class MinWeightFn {
public:
    MinWeightFn(Curve<K> curve, Poly<K> gamma_y, Poly<K> gamma_x, int m)
        : curve_(std::move(curve)), gy_(std::move(gamma_y)), gx_(std::move(gamma_x)), m_(m) {
        if (m_ < 1) raise(errc::bad_degree, "minimal-weight functions need m >= 1");
        if (gy_.degree_or(-1) > (m_ - 1) / 2)
            raise(errc::bad_degree, "deg gamma_y exceeds [(m-1)/2]");
        if (gx_.degree_or(-1) > curve_.genus() + m_ / 2)
            raise(errc::bad_degree, "deg gamma_x exceeds g + [m/2]");
    }

    const Curve<K>& curve() const noexcept { return curve_; }
    const Poly<K>& gamma_y() const noexcept { return gy_; }
    const Poly<K>& gamma_x() const noexcept { return gx_; }
    int m() const noexcept { return m_; }

    typename K::Elem eval(const AffinePoint<K>& p) const {
        return p.y * gy_.eval(p.x) + gx_.eval(p.x);
    }

private:
    Curve<K> curve_;
    Poly<K> gy_;
    Poly<K> gx_;
    int m_;
};

namespace detail {

// Building blocks of the explicit minimal-weight sums. Subsets stand in for
// the multi-index notation; a repeated index would be a repeated subset
// element and contributes nothing, so subsets lose no terms.
//
//   M_S(x) = prod_{l in S} (x - x_l) / prod_{i not in S} (x_l - x_i)
//   N_T(x) = prod_{i not in T} (x - x_i) / prod_{l in T} (x_l - x_i)
template <class K>
Poly<K> minweight_M(const K& k, const std::vector<typename K::Elem>& xs,
                    const std::vector<int>& subset) {
    Poly<K> acc = Poly<K>::constant(k, k.one());
    for (int l : subset) {
        typename K::Elem den = k.one();
        for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
            bool in_subset = false;
            for (int s : subset) {
                if (s == i) { in_subset = true; break; }
            }
            if (!in_subset) den *= xs[static_cast<std::size_t>(l)] - xs[static_cast<std::size_t>(i)];
        }
        acc *= Poly<K>::linear_root(k, xs[static_cast<std::size_t>(l)]) * den.inverse();
    }
    return acc;
}

template <class K>
Poly<K> minweight_N(const K& k, const std::vector<typename K::Elem>& xs,
                    const std::vector<int>& subset) {
    Poly<K> acc = Poly<K>::constant(k, k.one());
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
        bool in_subset = false;
        for (int s : subset) {
            if (s == i) { in_subset = true; break; }
        }
        if (in_subset) continue;
        typename K::Elem den = k.one();
        for (int l : subset) den *= xs[static_cast<std::size_t>(l)] - xs[static_cast<std::size_t>(i)];
        acc *= Poly<K>::linear_root(k, xs[static_cast<std::size_t>(i)]) * den.inverse();
    }
    return acc;
}

inline bool next_combination(std::vector<int>& idx, int n) {
    const int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - (r - i)) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

template <class K, class Fn>
void for_each_subset(int n, int r, Fn&& fn) {
    if (r == 0) {
        std::vector<int> empty;
        fn(empty);
        return;
    }
    if (r > n) return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
        fn(idx);
    } while (next_combination(idx, n));
}

// Weight-ordered monomial list {1, x, ..., x^g, y, x^{g+1}, y x, ...}; entry =
// (x exponent, has y).
inline std::vector<std::pair<int, bool>> weight_monomials(int genus, int count) {
    std::vector<std::pair<int, bool>> out;
    for (int w = 0; static_cast<int>(out.size()) < count; ++w) {
        if (w % 2 == 0) {
            out.push_back({w / 2, false});
        } else if (w >= 2 * genus + 1) {
            out.push_back({(w - 2 * genus - 1) / 2, true});
        }
    }
    return out;
}

// Independent construction of R through the null space of the evaluation
// matrix of the first g+m+1 weight-ordered monomials at the points.
template <class K>
std::pair<Poly<K>, Poly<K>> minweight_nullspace(const Curve<K>& c,
                                                const std::vector<AffinePoint<K>>& pts) {
    const K& k = c.field();
    const int g = c.genus();
    const int n = static_cast<int>(pts.size());
    auto monos = weight_monomials(g, n + 1);

    Matrix<K> m;
    m.reserve(static_cast<std::size_t>(n));
    for (const auto& p : pts) {
        std::vector<typename K::Elem> row;
        row.reserve(monos.size());
        for (const auto& [xe, has_y] : monos) {
            typename K::Elem v = k.one();
            for (int e = 0; e < xe; ++e) v *= p.x;
            if (has_y) v *= p.y;
            row.push_back(v);
        }
        m.push_back(std::move(row));
    }
    auto basis = kernel_basis(k, m);
    if (basis.size() != 1)
        raise(errc::singular_system, "minimal-weight null space is not one-dimensional");

    std::vector<typename K::Elem> gy_coeffs, gx_coeffs;
    for (std::size_t t = 0; t < monos.size(); ++t) {
        auto [xe, has_y] = monos[t];
        auto& dst = has_y ? gy_coeffs : gx_coeffs;
        if (static_cast<int>(dst.size()) <= xe) dst.resize(static_cast<std::size_t>(xe) + 1, k.zero());
        dst[static_cast<std::size_t>(xe)] = basis[0][t];
    }
    return {Poly<K>(k, std::move(gy_coeffs)), Poly<K>(k, std::move(gx_coeffs))};
}

// Scale so the top admissible coefficient of gamma_y is 1 (gamma_x when
// gamma_y is constant-free; m <= 2 keeps gamma_y = 1 as the closed forms do).
template <class K>
void normalize_minweight(const K& k, Poly<K>& gy, Poly<K>& gx) {
    typename K::Elem scale = k.one();
    if (!gy.is_zero()) {
        scale = gy.leading().inverse();
    } else if (!gx.is_zero()) {
        scale = gx.leading().inverse();
    }
    gy = gy * scale;
    gx = gx * scale;
}

// Identity-matching route for I: solve for nu_y, nu_x, M in
//   y + I(x) = H (y nu_y + nu_x) + (y gamma_y - gamma_x) M
// by matching the y-coefficient to 1 and pushing the free part below deg H.
template <class K>
Poly<K> slae_I(const Curve<K>& c, const Poly<K>& h, const Poly<K>& gy, const Poly<K>& gx) {
    const K& k = c.field();
    const int dh = h.degree_or(0);
    if (dh == 0) return Poly<K>(k);
    // deg nu_y = deg gamma_y - 1 etc., so the unknown counts are the degrees.
    const int dy = gy.degree_or(0);
    const int dx = gx.degree_or(0);
    const int dm = dh;
    const int unknowns = dy + dx + dm;

    Matrix<K> a;
    std::vector<typename K::Elem> b;
    auto push_row = [&](std::vector<typename K::Elem> row, typename K::Elem rhs) {
        a.push_back(std::move(row));
        b.push_back(rhs);
    };

    // y-part: H*nu_y + gy*M has constant coefficient 1, the rest vanish.
    for (int coef = 0; coef < dh + dy; ++coef) {
        std::vector<typename K::Elem> row(static_cast<std::size_t>(unknowns), k.zero());
        for (int i = 0; i < dy; ++i) row[static_cast<std::size_t>(i)] = h.coeff(coef - i);
        for (int i = 0; i < dm; ++i)
            row[static_cast<std::size_t>(dy + dx + i)] = gy.coeff(coef - i);
        push_row(std::move(row), coef == 0 ? k.one() : k.zero());
    }
    // free part: coefficients deg H .. deg H + deg gamma_x - 1 of
    // H*nu_x - gx*M vanish.
    for (int coef = dh; coef < dh + dx; ++coef) {
        std::vector<typename K::Elem> row(static_cast<std::size_t>(unknowns), k.zero());
        for (int i = 0; i < dx; ++i) row[static_cast<std::size_t>(dy + i)] = h.coeff(coef - i);
        for (int i = 0; i < dm; ++i)
            row[static_cast<std::size_t>(dy + dx + i)] = -gx.coeff(coef - i);
        push_row(std::move(row), k.zero());
    }

    auto sol = linsolve(k, a, b);
    std::vector<typename K::Elem> nux(sol.begin() + dy, sol.begin() + dy + dx);
    std::vector<typename K::Elem> mm(sol.begin() + dy + dx, sol.end());
    Poly<K> nu_x(k, std::move(nux));
    Poly<K> m_poly(k, std::move(mm));
    return h * nu_x - gx * m_poly;
}

} // namespace detail

// Minimal-weight function through g+m distinct points, by the explicit sums
// over index subsets, cross-checked against the monomial null space.
template <class K>
MinWeightFn<K> minweight_from_points(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts) {
    const K& k = c.field();
    const int g = c.genus();
    const int m = static_cast<int>(pts.size()) - g;
    if (m < 1) raise(errc::bad_degree, "need at least g+1 points");
    detail::require_on_curve(c, pts);
    detail::require_distinct_x(pts);

    auto xs = detail::x_coords(pts);
    const int n = static_cast<int>(pts.size());
    const int kk = (m - 1) / 2;

    Poly<K> gy(k);
    detail::for_each_subset<K>(n, kk, [&](const std::vector<int>& s) {
        typename K::Elem ys = k.one();
        for (int l : s) ys *= pts[static_cast<std::size_t>(l)].y;
        gy += detail::minweight_M(k, xs, s) * ys;
    });

    Poly<K> gx(k);
    detail::for_each_subset<K>(n, kk + 1, [&](const std::vector<int>& s) {
        typename K::Elem ys = k.one();
        for (int l : s) ys *= pts[static_cast<std::size_t>(l)].y;
        gx += detail::minweight_N(k, xs, s) * ys;
    });
    if (kk % 2 == 0) gx = -gx;   // the (-1)^{k+1} prefactor

    auto [gy2, gx2] = detail::minweight_nullspace(c, pts);
    detail::normalize_minweight(k, gy, gx);
    detail::normalize_minweight(k, gy2, gx2);
    if (!(gy == gy2) || !(gx == gx2))
        throw std::logic_error("minimal-weight sums disagree with the null-space construction");

    return MinWeightFn<K>(c, gy, gx, m);
}

// Minimal-weight function from a pair form, via R = N*F + (y - L)*M with
// deg N = [(m-1)/2] - 1 and deg M = [(m-1)/2]; the excess coefficients of
// gamma_x = N*F - L*M are forced to vanish, leaving a one-dimensional space.
template <class K>
MinWeightFn<K> minweight_from_pair(const PairForm<K>& pf) {
    const Curve<K>& c = pf.curve();
    const K& k = c.field();
    const int g = c.genus();
    const int m = pf.excess();
    if (m < 1) raise(errc::bad_degree, "pair form already has degree <= g");
    const int kk = (m - 1) / 2;
    const Poly<K>& f = pf.f();
    const Poly<K>& l = pf.l();

    // Unknown layout: N coefficients (kk of them), then M coefficients (kk+1).
    const int unknowns = 2 * kk + 1;
    const int lo = g + m / 2 + 1;
    const int hi = g + m - 1 + kk;
    Matrix<K> rows;
    for (int coef = lo; coef <= hi; ++coef) {
        std::vector<typename K::Elem> row(static_cast<std::size_t>(unknowns), k.zero());
        for (int i = 0; i < kk; ++i) row[static_cast<std::size_t>(i)] = f.coeff(coef - i);
        for (int i = 0; i <= kk; ++i)
            row[static_cast<std::size_t>(kk + i)] = -l.coeff(coef - i);
        rows.push_back(std::move(row));
    }
    std::vector<std::vector<typename K::Elem>> basis;
    if (rows.empty()) {
        basis.push_back({k.one()});   // m <= 2: M is a free constant
    } else {
        basis = kernel_basis(k, rows);
    }
    if (basis.size() != 1)
        raise(errc::singular_system, "minimal-weight solution space is not one-dimensional");

    std::vector<typename K::Elem> ncoef(basis[0].begin(), basis[0].begin() + kk);
    std::vector<typename K::Elem> mcoef(basis[0].begin() + kk, basis[0].end());
    Poly<K> n_poly(k, std::move(ncoef));
    Poly<K> m_poly(k, std::move(mcoef));

    Poly<K> gy = m_poly;
    Poly<K> gx = n_poly * f - l * m_poly;
    detail::normalize_minweight(k, gy, gx);
    return MinWeightFn<K>(c, gy, gx, m);
}

// Reduction of the divisor {F = 0, R = 0}: H = (gamma_y^2 P - gamma_x^2)/F,
// then I of degree < deg H with I = -gamma_x * gamma_y^{-1} (mod H), computed
// both by modular inversion and by the identity-matching linear system.
template <class K>
ReducedPair<K> reduce_general(const Curve<K>& c, const Poly<K>& f, const MinWeightFn<K>& r) {
    const K& k = c.field();
    if (!(r.curve() == c)) raise(errc::curve_mismatch, "minimal-weight function on another curve");
    const Poly<K>& gy = r.gamma_y();
    const Poly<K>& gx = r.gamma_x();

    Poly<K> numerator = gy * gy * c.rhs() - gx * gx;
    auto [h, rem] = numerator.divrem(f);
    if (!rem.is_zero()) raise(errc::not_divisible, "F does not divide gamma_y^2 P - gamma_x^2");
    if (h.is_zero() || h.degree_or(0) > c.genus())
        raise(errc::bad_degree, "quotient H has unexpected degree");

    if (h.degree_or(0) == 0) return ReducedPair<K>(c, h, Poly<K>(k));

    auto [d, s, t] = poly_xgcd(gy % h, h);
    (void)t;
    if (d.degree_or(0) != 0) {
        // gamma_y not invertible mod H; only the linear-system route remains.
        try {
            Poly<K> i_slae = detail::slae_I(c, h, gy, gx);
            if (((gy * i_slae + gx) % h).is_zero()) return ReducedPair<K>(c, h, i_slae);
        } catch (const Error& e) {
            if (e.code() != errc::singular_system) throw;
        }
        raise(errc::non_coprime_gamma_h, "gcd(gamma_y, H) != 1");
    }
    Poly<K> i_inv = (-(gx * s)) % h;
    Poly<K> i_slae = detail::slae_I(c, h, gy, gx);
    if (!(i_inv == i_slae))
        throw std::logic_error("modular-inverse and linear-system I computations disagree");
    return ReducedPair<K>(c, h, i_inv);
}

} // namespace hyperjac

#endif
