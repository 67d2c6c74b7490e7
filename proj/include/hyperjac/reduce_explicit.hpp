#ifndef HYPERJAC_REDUCE_EXPLICIT_HPP
#define HYPERJAC_REDUCE_EXPLICIT_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperjac/curve.hpp"
#include "hyperjac/divisor.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/poly.hpp"

namespace hyperjac {

// Output of a reduction step: the reduced divisor is {H(x) = 0, y = -I(x)}.
// deg H = g generically; inputs whose class reduces further yield lower
// degree, carried through as a partial result rather than an error.
template <class K>
class ReducedPair {
public:
    ReducedPair(Curve<K> curve, Poly<K> h, const Poly<K>& i)
        : curve_(std::move(curve)), h_(std::move(h)), i_(Poly<K>(curve_.field())) {
        if (h_.is_zero()) raise(errc::bad_degree, "H must be nonzero");
        if (h_.degree_or(0) > curve_.genus()) raise(errc::bad_degree, "deg H exceeds the genus");
        i_ = i % h_;
        if (!((curve_.rhs() - i_ * i_) % h_).is_zero())
            raise(errc::not_on_curve, "P - I^2 not divisible by H");
    }

    const Curve<K>& curve() const noexcept { return curve_; }
    const Poly<K>& h() const noexcept { return h_; }
    const Poly<K>& i() const noexcept { return i_; }

    MumfordDivisor<K> to_mumford() const { return MumfordDivisor<K>(curve_, h_, -i_); }

    friend bool operator==(const ReducedPair& a, const ReducedPair& b) {
        return a.curve_ == b.curve_ && a.h_ == b.h_ && a.i_ == b.i_;
    }

private:
    Curve<K> curve_;
    Poly<K> h_;
    Poly<K> i_;
};

namespace detail {

template <class K>
void require_on_curve(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts) {
    for (const auto& p : pts) {
        if (!c.contains(p)) raise(errc::not_on_curve, "input point off the curve");
    }
}

template <class K>
void require_distinct_x(const std::vector<AffinePoint<K>>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!(pts[i].x == pts[j].x)) continue;
            if (pts[i].y == pts[j].y)
                raise(errc::duplicate_x_coordinate, "repeated point in the input");
            raise(errc::involution_pair, "input contains a point and its involution");
        }
    }
}

template <class K>
std::vector<typename K::Elem> x_coords(const std::vector<AffinePoint<K>>& pts) {
    std::vector<typename K::Elem> xs;
    xs.reserve(pts.size());
    for (const auto& p : pts) xs.push_back(p.x);
    return xs;
}

// prod over i outside the skip set of (x - xs[i]); negative skips are ignored.
template <class K>
Poly<K> linear_product(const K& k, const std::vector<typename K::Elem>& xs, int skip,
                       int skip2 = -1, int skip3 = -1) {
    Poly<K> acc = Poly<K>::constant(k, k.one());
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
        if (i == skip || i == skip2 || i == skip3) continue;
        acc *= Poly<K>::linear_root(k, xs[static_cast<std::size_t>(i)]);
    }
    return acc;
}

template <class K>
typename K::Elem scalar_product(const K& k, const std::vector<typename K::Elem>& xs,
                                const typename K::Elem& at, int skip, int skip2 = -1) {
    typename K::Elem acc = k.one();
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
        if (i == skip || i == skip2) continue;
        acc *= at - xs[static_cast<std::size_t>(i)];
    }
    return acc;
}

// The polynomial sum_{n=0}^{top} x^n sum_{j=0}^{top-n} lambda * h_j, with the
// curve parameter read off as the coefficient of x^{shift+n+j} of P and h_j
// the complete symmetric polynomial in xs.
template <class K>
Poly<K> lambda_symmetric_sum(const Curve<K>& c, const std::vector<typename K::Elem>& xs, int top,
                             int shift) {
    const K& k = c.field();
    std::vector<typename K::Elem> h(static_cast<std::size_t>(top) + 1, k.zero());
    for (int j = 0; j <= top; ++j) h[static_cast<std::size_t>(j)] = complete_symmetric(k, xs, j);
    std::vector<typename K::Elem> coeffs(static_cast<std::size_t>(top) + 1, k.zero());
    for (int n = 0; n <= top; ++n) {
        typename K::Elem acc = k.zero();
        for (int j = 0; j <= top - n; ++j) {
            acc += c.rhs().coeff(shift + n + j) * h[static_cast<std::size_t>(j)];
        }
        coeffs[static_cast<std::size_t>(n)] = acc;
    }
    return Poly<K>(k, std::move(coeffs));
}

// -sum_{k<l} (y_k - y_l)^2/(x_k - x_l)^2 * prod_{i != k,l} (x - x_i) /
// ((x_l - x_i)(x_k - x_i)); the summand is symmetric in (k, l), which absorbs
// the -1/2 of the ordered-pair form.
template <class K>
Poly<K> pair_difference_sum(const K& k, const std::vector<AffinePoint<K>>& pts) {
    auto xs = x_coords(pts);
    Poly<K> acc(k);
    const int n = static_cast<int>(pts.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const auto& pa = pts[static_cast<std::size_t>(a)];
            const auto& pb = pts[static_cast<std::size_t>(b)];
            typename K::Elem dy = pa.y - pb.y;
            typename K::Elem dx = pa.x - pb.x;
            typename K::Elem den =
                scalar_product(k, xs, pb.x, a, b) * scalar_product(k, xs, pa.x, a, b) * dx * dx;
            acc -= linear_product(k, xs, a, b) * (dy * dy / den);
        }
    }
    return acc;
}

template <class K>
Poly<K> lagrange_G(const K& k, const std::vector<AffinePoint<K>>& pts) {
    std::vector<std::pair<typename K::Elem, typename K::Elem>> nodes;
    nodes.reserve(pts.size());
    for (const auto& p : pts) nodes.push_back({p.x, p.y});
    return lagrange_interpolate(k, nodes);
}

// Division route shared by every closed form: H = (P - G^2)/F, I = G mod H.
template <class K>
std::pair<Poly<K>, Poly<K>> division_route(const Curve<K>& c, const Poly<K>& g_interp,
                                           const Poly<K>& f) {
    Poly<K> h = (c.rhs() - g_interp * g_interp).div_exact(f);
    return {h, g_interp % h};
}

template <class K>
Poly<K> t1_closed_H(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts) {
    return pair_difference_sum(c.field(), pts) +
           lambda_symmetric_sum(c, x_coords(pts), c.genus(), c.genus() + 1);
}

template <class K>
Poly<K> t1_closed_I(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts, const Poly<K>& h) {
    const K& k = c.field();
    auto xs = x_coords(pts);
    Poly<K> acc(k);
    for (int m = 0; m < static_cast<int>(pts.size()); ++m) {
        typename K::Elem den = scalar_product(k, xs, xs[static_cast<std::size_t>(m)], m);
        acc += (linear_product(k, xs, m) - h) * (pts[static_cast<std::size_t>(m)].y / den);
    }
    return acc;
}

template <class K>
Poly<K> t2_closed_H(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts) {
    return pair_difference_sum(c.field(), pts) +
           lambda_symmetric_sum(c, x_coords(pts), c.genus() - 1, c.genus() + 2);
}

// Hermite basis for 2P1 + P2 + ... + Pg. Index layout: element 0 pairs with
// y_1, element k-1 with y_k, and the last element with y_1'.
template <class K>
std::vector<Poly<K>> t3_hermite_basis(const K& k, const std::vector<typename K::Elem>& xs) {
    const int g = static_cast<int>(xs.size());
    const auto& x1 = xs[0];

    Poly<K> a_of_x = linear_product(k, xs, 0);            // prod_{i>=2} (x - x_i)
    typename K::Elem a_at_1 = scalar_product(k, xs, x1, 0);
    typename K::Elem s1 = k.zero();                       // sum_{i>=2} 1/(x1 - x_i)
    for (int i = 1; i < g; ++i) s1 += (x1 - xs[static_cast<std::size_t>(i)]).inverse();

    std::vector<Poly<K>> basis;
    Poly<K> shift = Poly<K>::linear_root(k, x1);
    basis.push_back((a_of_x * a_at_1.inverse()) *
                    (Poly<K>::constant(k, k.one()) - shift * s1));
    for (int m = 1; m < g; ++m) {
        typename K::Elem dx = xs[static_cast<std::size_t>(m)] - x1;
        typename K::Elem den =
            dx * dx * scalar_product(k, xs, xs[static_cast<std::size_t>(m)], 0, m);
        basis.push_back(shift * shift * linear_product(k, xs, 0, m) * den.inverse());
    }
    basis.push_back(shift * a_of_x * a_at_1.inverse());
    return basis;
}

template <class K>
Poly<K> t3_hermite_G(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts,
                     const typename K::Elem& y1_prime) {
    const K& k = c.field();
    auto basis = t3_hermite_basis(k, x_coords(pts));
    Poly<K> g_interp(k);
    for (std::size_t m = 0; m < pts.size(); ++m) g_interp += basis[m] * pts[m].y;
    g_interp += basis.back() * y1_prime;
    return g_interp;
}

template <class K>
Poly<K> t3_closed_H(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts) {
    const K& k = c.field();
    const int g = c.genus();
    auto xs = x_coords(pts);
    const auto& x1 = xs[0];
    const auto& y1 = pts[0].y;

    typename K::Elem pp1 = c.rhs().derivative().eval(x1);
    typename K::Elem w = pp1 / (k.from_int(2) * y1);      // y_1'
    Poly<K> a_of_x = linear_product(k, xs, 0);
    typename K::Elem a_at_1 = scalar_product(k, xs, x1, 0);
    typename K::Elem s1 = k.zero();
    for (int i = 1; i < g; ++i) s1 += (x1 - xs[static_cast<std::size_t>(i)]).inverse();
    Poly<K> shift = Poly<K>::linear_root(k, x1);
    Poly<K> one = Poly<K>::constant(k, k.one());

    // Symmetric-polynomial part, with x1 counted twice.
    std::vector<typename K::Elem> xs_dup = xs;
    xs_dup.push_back(x1);
    Poly<K> acc = lambda_symmetric_sum(c, xs_dup, g, g + 1);

    // (A(x) - A(x1))/(x - x1) is an exact difference quotient.
    Poly<K> diff_quot = (a_of_x - Poly<K>::constant(k, a_at_1)).div_exact(shift);
    acc -= (diff_quot - a_of_x * s1) * (pp1 / (a_at_1 * a_at_1));

    Poly<K> mid(k);
    for (int m = 1; m < g; ++m) {
        typename K::Elem den = (xs[static_cast<std::size_t>(m)] - x1) *
                               scalar_product(k, xs, xs[static_cast<std::size_t>(m)], m);
        mid += linear_product(k, xs, m) * (k.from_int(2) * pts[static_cast<std::size_t>(m)].y / den);
    }
    mid += a_of_x * (w / a_at_1);
    acc -= mid * (w / a_at_1);

    for (int j = 1; j < g; ++j) {
        typename K::Elem dy = y1 - pts[static_cast<std::size_t>(j)].y;
        typename K::Elem den = (xs[static_cast<std::size_t>(j)] - x1) *
                               scalar_product(k, xs, xs[static_cast<std::size_t>(j)], j) * a_at_1;
        acc += linear_product(k, xs, 0, j) * (one - shift * s1) * (dy * dy / den);
    }

    for (int a = 1; a < g; ++a) {
        for (int b = 1; b < g; ++b) {
            if (a == b) continue;
            const auto& ya = pts[static_cast<std::size_t>(a)].y;
            const auto& yb = pts[static_cast<std::size_t>(b)].y;
            typename K::Elem den = (xs[static_cast<std::size_t>(a)] - x1) *
                                   (xs[static_cast<std::size_t>(b)] - x1) *
                                   scalar_product(k, xs, xs[static_cast<std::size_t>(a)], a) *
                                   scalar_product(k, xs, xs[static_cast<std::size_t>(b)], b);
            acc += shift * shift * linear_product(k, xs, 0, a, b) * ((ya * ya - ya * yb) / den);
        }
    }
    return acc;
}

template <class K>
Poly<K> t3_closed_I(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts, const Poly<K>& h) {
    const K& k = c.field();
    const int g = c.genus();
    auto xs = x_coords(pts);
    const auto& x1 = xs[0];
    const auto& y1 = pts[0].y;

    typename K::Elem pp1 = c.rhs().derivative().eval(x1);
    typename K::Elem w = pp1 / (k.from_int(2) * y1);
    Poly<K> a_of_x = linear_product(k, xs, 0);
    typename K::Elem a_at_1 = scalar_product(k, xs, x1, 0);
    typename K::Elem s1 = k.zero();
    for (int i = 1; i < g; ++i) s1 += (x1 - xs[static_cast<std::size_t>(i)]).inverse();
    Poly<K> shift = Poly<K>::linear_root(k, x1);

    Poly<K> acc = (shift * a_of_x - h) * ((w - y1 * s1) / a_at_1);
    acc += a_of_x * (y1 / a_at_1);
    for (int m = 1; m < g; ++m) {
        typename K::Elem den = (xs[static_cast<std::size_t>(m)] - x1) *
                               scalar_product(k, xs, xs[static_cast<std::size_t>(m)], m);
        acc += (shift * linear_product(k, xs, m) - h) * (pts[static_cast<std::size_t>(m)].y / den);
    }
    return acc;
}

// Closed H and I of the (g+1)P1 case, in powers of (x - x1) via the y-series
// coefficients c_n; only the ratios y^(n)/n! are ever formed.
template <class K>
std::pair<Poly<K>, Poly<K>> t4_closed(const Curve<K>& c, const AffinePoint<K>& p1) {
    const K& k = c.field();
    const int g = c.genus();
    auto cn = y_taylor_coeffs(c, p1, 2 * g + 1);
    auto at = [&](int i) -> const typename K::Elem& { return cn[static_cast<std::size_t>(i)]; };

    std::vector<typename K::Elem> ht(static_cast<std::size_t>(g) + 1, k.zero());
    ht[static_cast<std::size_t>(g)] = k.one();
    for (int j = 0; j <= g - 1; ++j) {
        typename K::Elem acc = k.zero();
        for (int i = 0; i <= j; ++i) acc += at(i) * at(j + g + 1 - i);
        ht[static_cast<std::size_t>(j)] += k.from_int(2) * acc;
    }

    std::vector<typename K::Elem> it(static_cast<std::size_t>(g), k.zero());
    for (int n = 0; n <= g - 1; ++n) {
        typename K::Elem acc = k.zero();
        for (int i = 0; i <= n; ++i) acc += at(i) * at(n + g + 1 - i);
        it[static_cast<std::size_t>(n)] = at(n) - k.from_int(2) * at(g) * acc;
    }

    return {poly_from_taylor(k, ht, p1.x), poly_from_taylor(k, it, p1.x)};
}

} // namespace detail

// Reduction of g+1 distinct points. The closed formula and the
// interpolate-then-divide route are both evaluated and must agree.
template <class K>
ReducedPair<K> reduce_gplus1_distinct(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts) {
    const K& k = c.field();
    if (static_cast<int>(pts.size()) != c.genus() + 1)
        raise(errc::bad_degree, "expected g+1 points");
    detail::require_on_curve(c, pts);
    detail::require_distinct_x(pts);

    Poly<K> h = detail::t1_closed_H(c, pts);
    Poly<K> i = detail::t1_closed_I(c, pts, h);

    Poly<K> f = detail::linear_product(k, detail::x_coords(pts), -1);
    auto [h_div, i_div] = detail::division_route(c, detail::lagrange_G(k, pts), f);
    if (!(h == h_div) || !(i % h == i_div))
        throw std::logic_error("g+1 reduction: closed form disagrees with division form");

    return ReducedPair<K>(c, h, i);
}

// Reduction of g+2 distinct points. The leading coefficient h0 of H vanishes
// exactly when the class reduces below degree g; the division route then
// supplies the partial result (or, with strict set, the named error).
template <class K>
ReducedPair<K> reduce_gplus2_distinct(const Curve<K>& c, const std::vector<AffinePoint<K>>& pts,
                                      bool strict = false) {
    const K& k = c.field();
    const int g = c.genus();
    if (static_cast<int>(pts.size()) != g + 2) raise(errc::bad_degree, "expected g+2 points");
    detail::require_on_curve(c, pts);
    detail::require_distinct_x(pts);

    auto xs = detail::x_coords(pts);
    Poly<K> h = detail::t2_closed_H(c, pts);
    Poly<K> g_interp = detail::lagrange_G(k, pts);
    Poly<K> f = detail::linear_product(k, xs, -1);

    const typename K::Elem h0 = h.coeff(g);
    if (h0.is_zero()) {
        if (strict)
            raise(errc::degenerate_leading_coefficient,
                  "h0 = 0: the input class reduces below degree g");
        auto [h_div, i_div] = detail::division_route(c, g_interp, f);
        return ReducedPair<K>(c, h_div, i_div);
    }

    // h0 and h1 recomputed from their own closed sums as a transcription check.
    typename K::Elem h0_direct = k.zero();
    typename K::Elem h1_direct = c.rhs().coeff(2 * g + 1);
    for (int a = 0; a < g + 2; ++a) {
        for (int b = a + 1; b < g + 2; ++b) {
            typename K::Elem dy =
                pts[static_cast<std::size_t>(a)].y - pts[static_cast<std::size_t>(b)].y;
            typename K::Elem dx = xs[static_cast<std::size_t>(a)] - xs[static_cast<std::size_t>(b)];
            typename K::Elem base =
                dy * dy /
                (dx * dx * detail::scalar_product(k, xs, xs[static_cast<std::size_t>(b)], a, b) *
                 detail::scalar_product(k, xs, xs[static_cast<std::size_t>(a)], a, b));
            h0_direct -= base;
            typename K::Elem xsum = k.zero();
            for (int i2 = 0; i2 < g + 2; ++i2) {
                if (i2 != a && i2 != b) xsum += xs[static_cast<std::size_t>(i2)];
            }
            h1_direct += base * xsum;
        }
    }
    if (!(h0_direct == h0) || !(h1_direct == h.coeff(g - 1)))
        throw std::logic_error("g+2 reduction: leading-coefficient sums disagree with H");

    const typename K::Elem g0 = g_interp.coeff(g + 1);
    const typename K::Elem g1 = g_interp.coeff(g);
    Poly<K> factor = Poly<K>(k, {g1 / h0 - g0 * h.coeff(g - 1) / (h0 * h0), g0 / h0});
    Poly<K> i = g_interp - factor * h;

    auto [h_div, i_div] = detail::division_route(c, g_interp, f);
    if (!(h == h_div) || !(i % h == i_div))
        throw std::logic_error("g+2 reduction: closed form disagrees with division form");

    return ReducedPair<K>(c, h, i);
}

// Reduction of 2P1 + P2 + ... + Pg (one doubled non-branch point).
template <class K>
ReducedPair<K> reduce_gplus1_duplicated(const Curve<K>& c, const AffinePoint<K>& p1,
                                        const std::vector<AffinePoint<K>>& rest) {
    const K& k = c.field();
    const int g = c.genus();
    if (static_cast<int>(rest.size()) != g - 1)
        raise(errc::bad_degree, "expected g-1 further points");
    if (p1.y.is_zero()) raise(errc::branch_point_duplication, "doubled point is a branch point");

    std::vector<AffinePoint<K>> pts;
    pts.reserve(static_cast<std::size_t>(g));
    pts.push_back(p1);
    for (const auto& p : rest) pts.push_back(p);
    detail::require_on_curve(c, pts);
    detail::require_distinct_x(pts);

    Poly<K> h = detail::t3_closed_H(c, pts);
    Poly<K> i = detail::t3_closed_I(c, pts, h);

    typename K::Elem y1p = c.rhs().derivative().eval(p1.x) / (k.from_int(2) * p1.y);
    Poly<K> g_interp = detail::t3_hermite_G(c, pts, y1p);
    Poly<K> shift = Poly<K>::linear_root(k, p1.x);
    Poly<K> f = shift * shift * detail::linear_product(k, detail::x_coords(pts), 0);

    auto [h_div, i_div] = detail::division_route(c, g_interp, f);
    if (!(h == h_div) || !(i % h == i_div))
        throw std::logic_error("duplicated-point reduction: closed form disagrees with division form");

    return ReducedPair<K>(c, h, i);
}

// Reduction of (g+1) P1 with a non-branch P1.
template <class K>
ReducedPair<K> reduce_gplus1_single(const Curve<K>& c, const AffinePoint<K>& p1) {
    const K& k = c.field();
    const int g = c.genus();
    if (!c.contains(p1)) raise(errc::not_on_curve, "input point off the curve");
    if (p1.y.is_zero()) raise(errc::branch_point, "Taylor data undefined at a branch point");

    auto [h, i] = detail::t4_closed(c, p1);

    auto cn = y_taylor_coeffs(c, p1, g + 1);
    Poly<K> g_interp = poly_from_taylor(k, cn, p1.x);
    Poly<K> f = Poly<K>::linear_root(k, p1.x).pow(g + 1);
    auto [h_div, i_div] = detail::division_route(c, g_interp, f);
    if (!(h == h_div) || !(i % h == i_div))
        throw std::logic_error("(g+1)P reduction: closed form disagrees with division form");

    return ReducedPair<K>(c, h, i);
}

} // namespace hyperjac

#endif
