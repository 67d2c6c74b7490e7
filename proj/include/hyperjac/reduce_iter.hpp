#ifndef HYPERJAC_REDUCE_ITER_HPP
#define HYPERJAC_REDUCE_ITER_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperjac/cantor.hpp"
#include "hyperjac/curve.hpp"
#include "hyperjac/divisor.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/reduce_explicit.hpp"

namespace hyperjac {

// Orientation convention for the whole iterative pipeline: a state (H, I)
// stands for the divisor {H(x) = 0, y = -I(x)}, and one attach+absorb round
// advances the state class by the attached point. Concretely, G interpolates
// the actual y-values of the state and of the new point (so G = -I + c*H),
// and absorb recovers I' = G mod H'. Under this convention the I-free variant
// below reproduces the sign-flipped recurrence G <- -G_prev + (y +
// G_prev(x)) H/H(x) exactly.

enum class Strategy { by_g1, shortest };

struct IterStats {
    int cantor_seeds = 0;          // seed multiplicity shape with no closed formula
    int collision_fallbacks = 0;   // attached x hit a state root
};

// Step-2 attach: F = (x - x_p) H and G with G = -I (mod H), G(x_p) = y_p.
template <class K>
std::pair<Poly<K>, Poly<K>> attach_point(const Poly<K>& h, const Poly<K>& i,
                                         const AffinePoint<K>& p, const Curve<K>& c) {
    const K& k = c.field();
    typename K::Elem hx = h.eval(p.x);
    if (hx.is_zero()) raise(errc::x_collision_with_state, "new point shares x with the state");
    Poly<K> g = -i + h * ((p.y + i.eval(p.x)) / hx);
    Poly<K> f = Poly<K>::linear_root(k, p.x) * h;
    if (!((c.rhs() - g * g) % f).is_zero())
        throw std::logic_error("attach: P - G^2 not divisible by F");
    return {f, g};
}

// Two-point attach used by the shortest strategy: the correction is linear,
// fixed by the two new interpolation conditions.
template <class K>
std::pair<Poly<K>, Poly<K>> attach_pair(const Poly<K>& h, const Poly<K>& i,
                                        const AffinePoint<K>& pa, const AffinePoint<K>& pb,
                                        const Curve<K>& c) {
    const K& k = c.field();
    if (pa.x == pb.x) raise(errc::duplicate_x_coordinate, "pair attach needs distinct x");
    typename K::Elem ha = h.eval(pa.x);
    typename K::Elem hb = h.eval(pb.x);
    if (ha.is_zero() || hb.is_zero())
        raise(errc::x_collision_with_state, "new point shares x with the state");
    typename K::Elem ra = (pa.y + i.eval(pa.x)) / ha;
    typename K::Elem rb = (pb.y + i.eval(pb.x)) / hb;
    typename K::Elem beta = (rb - ra) / (pb.x - pa.x);
    typename K::Elem alpha = ra - beta * pa.x;
    Poly<K> g = -i + Poly<K>(k, {alpha, beta}) * h;
    Poly<K> f = Poly<K>::linear_root(k, pa.x) * Poly<K>::linear_root(k, pb.x) * h;
    if (!((c.rhs() - g * g) % f).is_zero())
        throw std::logic_error("attach: P - G^2 not divisible by F");
    return {f, g};
}

// Step-3 absorb: H' = (P - G^2)/F, I' = G mod H'. Equals the classical
// reduction kernel when invoked with F = H and G = -I.
template <class K>
std::pair<Poly<K>, Poly<K>> absorb(const Poly<K>& f, const Poly<K>& g_interp, const Curve<K>& c) {
    Poly<K> h = (c.rhs() - g_interp * g_interp).div_exact(f);
    return {h, g_interp % h};
}

namespace detail {

// Repeated point-free absorbs until deg H <= g.
template <class K>
void absorb_to_genus(const Curve<K>& c, Poly<K>& h, Poly<K>& i) {
    while (h.degree_or(0) > c.genus()) {
        auto [h2, i2] = absorb(h, -i, c);
        h = std::move(h2);
        i = std::move(i2);
    }
}

template <class K>
MumfordDivisor<K> state_to_mumford(const Curve<K>& c, const Poly<K>& h, const Poly<K>& i) {
    return MumfordDivisor<K>(c, h, -i);
}

// Merge one point through the oracle when its x collides with a state root.
template <class K>
void cantor_merge_point(const Curve<K>& c, Poly<K>& h, Poly<K>& i, const AffinePoint<K>& p) {
    const K& k = c.field();
    MumfordDivisor<K> single(c, Poly<K>::linear_root(k, p.x), Poly<K>::constant(k, p.y));
    MumfordDivisor<K> merged = cantor_reduce(cantor_compose(state_to_mumford(c, h, i), single));
    h = merged.u();
    i = -merged.v();
}

enum class SeedShape { distinct, duplicated, single, other };

template <class K>
SeedShape classify_seed(const std::vector<AffinePoint<K>>& pts) {
    std::vector<std::pair<AffinePoint<K>, int>> counts;
    for (const auto& p : pts) {
        bool found = false;
        for (auto& [q, n] : counts) {
            if (q == p) { ++n; found = true; break; }
        }
        if (!found) counts.push_back({p, 1});
    }
    if (counts.size() == 1) return SeedShape::single;
    if (counts.size() == pts.size()) return SeedShape::distinct;
    int doubles = 0;
    for (const auto& entry : counts) {
        if (entry.second == 2) ++doubles;
        else if (entry.second != 1) return SeedShape::other;
    }
    return doubles == 1 ? SeedShape::duplicated : SeedShape::other;
}

template <class K>
bool distinct_x(const std::vector<AffinePoint<K>>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].x == pts[j].x) return false;
        }
    }
    return true;
}

} // namespace detail

// Reduction of a pair-form divisor by the point-free Step-3 kernel alone;
// used as the cross-check route for the addition algorithm.
template <class K>
MumfordDivisor<K> reduce_pair_by_absorb(const PairForm<K>& pf) {
    const Curve<K>& c = pf.curve();
    Poly<K> h = pf.f();
    Poly<K> i = -pf.l();
    detail::absorb_to_genus(c, h, i);
    return detail::state_to_mumford(c, h, i);
}

// The iterative reduction: seed with the closed-form reduction of the first
// g+1 (or g+2) points, then absorb the remaining points one (or two) at a
// time. Involution pairs are cancelled up front; the result is the canonical
// reduced Mumford form of the class.
template <class K>
MumfordDivisor<K> reduce_iterative(const Curve<K>& c, const PointDivisor<K>& d,
                                   Strategy strategy = Strategy::by_g1,
                                   IterStats* stats = nullptr, bool skip_i = true) {
    if (!(d.curve() == c)) raise(errc::curve_mismatch, "divisor on another curve");
    if (!is_nonspecial(d)) raise(errc::special_divisor, "iterative reduction needs a non-special divisor");
    const int g = c.genus();
    IterStats local;
    IterStats& st = stats ? *stats : local;

    PointDivisor<K> dt = truncate_involution(d);
    std::vector<AffinePoint<K>> pts = dt.expanded();
    if (static_cast<int>(pts.size()) == g) return mumford_from_pairform(pairform_from_points(dt));

    Poly<K> h(c.field());
    Poly<K> i(c.field());
    std::size_t pos = 0;

    // shortest schedule: m even seeds on g+2 points, m odd on g+1, and both
    // then absorb two points per round.
    const std::size_t seed2 = static_cast<std::size_t>(g) + 2;
    const bool even_excess = (pts.size() - static_cast<std::size_t>(g)) % 2 == 0;
    if (strategy == Strategy::shortest && even_excess && pts.size() >= seed2 &&
        detail::distinct_x(std::vector<AffinePoint<K>>(pts.begin(), pts.begin() + seed2))) {
        ReducedPair<K> rp = reduce_gplus2_distinct(
            c, std::vector<AffinePoint<K>>(pts.begin(), pts.begin() + seed2));
        h = rp.h();
        i = rp.i();
        pos = seed2;
    } else {
        std::vector<AffinePoint<K>> seed(pts.begin(), pts.begin() + g + 1);
        switch (detail::classify_seed<K>(seed)) {
            case detail::SeedShape::distinct: {
                ReducedPair<K> rp = reduce_gplus1_distinct(c, seed);
                h = rp.h();
                i = rp.i();
                break;
            }
            case detail::SeedShape::duplicated: {
                AffinePoint<K> dup = seed[0];
                for (std::size_t a = 0; a < seed.size(); ++a) {
                    for (std::size_t b = a + 1; b < seed.size(); ++b) {
                        if (seed[a] == seed[b]) dup = seed[a];
                    }
                }
                std::vector<AffinePoint<K>> rest;
                for (const auto& p : seed) {
                    if (!(p == dup)) rest.push_back(p);
                }
                ReducedPair<K> rp = reduce_gplus1_duplicated(c, dup, rest);
                h = rp.h();
                i = rp.i();
                break;
            }
            case detail::SeedShape::single: {
                ReducedPair<K> rp = reduce_gplus1_single(c, seed[0]);
                h = rp.h();
                i = rp.i();
                break;
            }
            case detail::SeedShape::other: {
                ++st.cantor_seeds;
                MumfordDivisor<K> md = cantor_reduce_points(PointDivisor<K>::from_points(c, seed));
                h = md.u();
                i = -md.v();
                break;
            }
        }
        pos = static_cast<std::size_t>(g) + 1;
    }

    // I-free mode keeps (H, G_prev) with I = G_prev mod H; whenever the state
    // is non-generic we fall back to the materialised I for one round.
    Poly<K> g_prev = i;
    const bool use_skip = skip_i && strategy == Strategy::by_g1;

    auto materialize = [&]() {
        if (use_skip) i = g_prev % h;
    };

    if (strategy == Strategy::by_g1) {
        for (; pos < pts.size(); ++pos) {
            const auto& p = pts[pos];
            if (h.eval(p.x).is_zero()) {
                materialize();
                detail::cantor_merge_point(c, h, i, p);
                g_prev = i;
                ++st.collision_fallbacks;
                continue;
            }
            if (use_skip && h.degree_or(0) == g && g_prev.degree_or(0) <= g) {
                // Sign-flipped recurrence; no I along the way.
                Poly<K> g_new = -g_prev + h * ((p.y + g_prev.eval(p.x)) / h.eval(p.x));
                Poly<K> f = Poly<K>::linear_root(c.field(), p.x) * h;
                h = (c.rhs() - g_new * g_new).div_exact(f);
                g_prev = std::move(g_new);
            } else {
                materialize();
                auto [f, gg] = attach_point(h, i, p, c);
                auto [h2, i2] = absorb(f, gg, c);
                h = std::move(h2);
                i = std::move(i2);
                detail::absorb_to_genus(c, h, i);
                g_prev = i;
            }
        }
        materialize();
    } else {
        while (pos < pts.size()) {
            bool paired = false;
            if (pos + 1 < pts.size()) {
                const auto& pa = pts[pos];
                const auto& pb = pts[pos + 1];
                if (!(pa.x == pb.x) && !h.eval(pa.x).is_zero() && !h.eval(pb.x).is_zero()) {
                    auto [f, gg] = attach_pair(h, i, pa, pb, c);
                    auto [h2, i2] = absorb(f, gg, c);
                    h = std::move(h2);
                    i = std::move(i2);
                    detail::absorb_to_genus(c, h, i);
                    pos += 2;
                    paired = true;
                }
            }
            if (paired) continue;
            const auto& p = pts[pos];
            if (h.eval(p.x).is_zero()) {
                detail::cantor_merge_point(c, h, i, p);
                ++st.collision_fallbacks;
            } else {
                auto [f, gg] = attach_point(h, i, p, c);
                auto [h2, i2] = absorb(f, gg, c);
                h = std::move(h2);
                i = std::move(i2);
                detail::absorb_to_genus(c, h, i);
            }
            ++pos;
        }
    }

    detail::absorb_to_genus(c, h, i);
    return detail::state_to_mumford(c, h, i);
}

} // namespace hyperjac

#endif
