#ifndef HYPERJAC_POLY_HPP
#define HYPERJAC_POLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperjac/errors.hpp"

namespace hyperjac {

// Dense univariate polynomial over an exact field context K. Coefficient n is
// the coefficient of x^n; the representation is always trimmed, so the zero
// polynomial has an empty coefficient vector and degree() == nullopt, the
// explicit stand-in for "degree minus infinity".
template <class K>
class Poly {
public:
    using Elem = typename K::Elem;

    explicit Poly(const K& k) : k_(k) {}

    Poly(const K& k, std::vector<Elem> coeffs) : k_(k), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const K& k, const Elem& c) { return Poly(k, {c}); }

    static Poly monomial(const K& k, const Elem& c, int n) {
        std::vector<Elem> v(static_cast<std::size_t>(n) + 1, k.zero());
        v.back() = c;
        return Poly(k, std::move(v));
    }

    // x - a
    static Poly linear_root(const K& k, const Elem& a) { return Poly(k, {-a, k.one()}); }

    const K& field() const noexcept { return k_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }

    std::optional<int> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    // Degree with an explicit stand-in value for the zero polynomial.
    int degree_or(int zero_value) const noexcept {
        return c_.empty() ? zero_value : static_cast<int>(c_.size()) - 1;
    }

    Elem coeff(int n) const {
        if (n < 0 || static_cast<std::size_t>(n) >= c_.size()) return k_.zero();
        return c_[static_cast<std::size_t>(n)];
    }

    Elem leading() const {
        if (c_.empty()) raise(errc::division_by_zero, "leading coefficient of the zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Elem> r;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Elem x = i < a.c_.size() ? a.c_[i] : a.k_.zero();
            Elem y = i < b.c_.size() ? b.c_[i] : b.k_.zero();
            r.push_back(x + y);
        }
        return Poly(a.k_, std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Elem> r;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Elem x = i < a.c_.size() ? a.c_[i] : a.k_.zero();
            Elem y = i < b.c_.size() ? b.c_[i] : b.k_.zero();
            r.push_back(x - y);
        }
        return Poly(a.k_, std::move(r));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.k_);
        std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, a.k_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(a.k_, std::move(r));
    }

    friend Poly operator*(const Poly& a, const Elem& s) {
        std::vector<Elem> r;
        r.reserve(a.c_.size());
        for (const auto& c : a.c_) r.push_back(c * s);
        return Poly(a.k_, std::move(r));
    }
    friend Poly operator*(const Elem& s, const Poly& a) { return a * s; }

    Poly operator-() const {
        std::vector<Elem> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(-c);
        return Poly(k_, std::move(r));
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!(a.c_[i] == b.c_[i])) return false;
        }
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: *this = q*b + r with deg r < deg b.
    std::pair<Poly, Poly> divrem(const Poly& b) const {
        if (b.is_zero()) raise(errc::division_by_zero, "polynomial division by 0");
        if (is_zero() || c_.size() < b.c_.size()) return {Poly(k_), *this};

        const Elem lead_inv = b.leading().inverse();
        std::vector<Elem> rem = c_;
        std::vector<Elem> quo(c_.size() - b.c_.size() + 1, k_.zero());
        for (std::size_t i = c_.size(); i-- >= b.c_.size();) {
            if (!rem[i].is_zero()) {
                const Elem f = rem[i] * lead_inv;
                const std::size_t shift = i - (b.c_.size() - 1);
                quo[shift] = f;
                for (std::size_t j = 0; j < b.c_.size(); ++j) {
                    rem[shift + j] -= f * b.c_[j];
                }
            }
            if (i == b.c_.size() - 1) break;
        }
        rem.resize(b.c_.size() - 1, k_.zero());
        return {Poly(k_, std::move(quo)), Poly(k_, std::move(rem))};
    }

    Poly operator/(const Poly& b) const { return divrem(b).first; }
    Poly operator%(const Poly& b) const { return divrem(b).second; }

    // Exact quotient; refuses a nonzero remainder.
    Poly div_exact(const Poly& b, errc on_remainder = errc::not_divisible) const {
        auto [q, r] = divrem(b);
        if (!r.is_zero()) raise(on_remainder, "polynomial division left a remainder");
        return q;
    }

    Elem eval(const Elem& x) const {
        Elem acc = k_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + c_[i];
            if (i == 0) break;
        }
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(k_);
        std::vector<Elem> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            r.push_back(c_[i] * k_.from_int(static_cast<long long>(i)));
        }
        return Poly(k_, std::move(r));
    }

    Poly monic() const {
        if (is_zero()) raise(errc::division_by_zero, "monic of the zero polynomial");
        return *this * leading().inverse();
    }

    Poly pow(int e) const {
        Poly acc = constant(k_, k_.one());
        for (int i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    K k_;
    std::vector<Elem> c_;
};

// Monic gcd by the Euclidean algorithm; gcd(a, 0) = monic(a).
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) raise(errc::division_by_zero, "gcd(0, 0)");
    return a.monic();
}

// Extended gcd: returns (d, s, t) with s*a + t*b = d, d monic, and the
// cofactors of minimal degree (deg s < deg b - deg d, deg t < deg a - deg d
// whenever both inputs are nonzero and neither divides the other).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
    const K& k = a.field();
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = Poly<K>::constant(k, k.one()), s1 = Poly<K>(k);
    Poly<K> t0 = Poly<K>(k), t1 = Poly<K>::constant(k, k.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) raise(errc::division_by_zero, "xgcd(0, 0)");
    const auto scale = r0.leading().inverse();
    return {r0 * scale, s0 * scale, t0 * scale};
}

// Lagrange interpolation through points with pairwise distinct abscissae.
template <class K>
Poly<K> lagrange_interpolate(const K& k,
                             const std::vector<std::pair<typename K::Elem, typename K::Elem>>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].first == pts[j].first)
                raise(errc::duplicate_x_coordinate, "interpolation nodes must be distinct");
        }
    }
    Poly<K> acc(k);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Poly<K> num = Poly<K>::constant(k, k.one());
        typename K::Elem den = k.one();
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            num *= Poly<K>::linear_root(k, pts[j].first);
            den *= pts[i].first - pts[j].first;
        }
        acc += num * (pts[i].second / den);
    }
    return acc;
}

// Complete homogeneous symmetric polynomial h_n evaluated on xs, computed by
// the one-variable-at-a-time recurrence h[j] += x * h[j-1]. h_0 = 1 and the
// n < 0 convention (h_n = 0) is the caller's.
template <class K>
typename K::Elem complete_symmetric(const K& k, const std::vector<typename K::Elem>& xs, int n) {
    if (n < 0) return k.zero();
    std::vector<typename K::Elem> h(static_cast<std::size_t>(n) + 1, k.zero());
    h[0] = k.one();
    for (const auto& x : xs) {
        for (int j = 1; j <= n; ++j) {
            h[static_cast<std::size_t>(j)] += x * h[static_cast<std::size_t>(j) - 1];
        }
    }
    return h[static_cast<std::size_t>(n)];
}

// Coefficients of p recentred at x0: p(x) = sum result[n] (x-x0)^n. Computed by
// repeated synthetic division, so no factorials are ever inverted.
template <class K>
std::vector<typename K::Elem> taylor_coeffs_at(const Poly<K>& p, const typename K::Elem& x0,
                                               int count) {
    const K& k = p.field();
    std::vector<typename K::Elem> work = p.coeffs();
    std::vector<typename K::Elem> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        if (work.empty()) {
            out.push_back(k.zero());
            continue;
        }
        // Divide work by (x - x0); the remainder is the next coefficient and
        // the quotient lands in work[0 .. size-2].
        typename K::Elem rem = k.zero();
        for (std::size_t i = work.size(); i-- > 0;) {
            typename K::Elem next = work[i] + rem * x0;
            work[i] = rem;
            rem = next;
            if (i == 0) break;
        }
        out.push_back(rem);
        if (!work.empty()) work.pop_back();
    }
    return out;
}

// sum coeffs[n] (x - x0)^n, assembled by Horner in (x - x0).
template <class K>
Poly<K> poly_from_taylor(const K& k, const std::vector<typename K::Elem>& coeffs,
                         const typename K::Elem& x0) {
    Poly<K> shift = Poly<K>::linear_root(k, x0);
    Poly<K> acc(k);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * shift + Poly<K>::constant(k, coeffs[i]);
        if (i == 0) break;
    }
    return acc;
}

// ---- text form: "x^5 + 3*x + 7" ------------------------------------------

template <class K>
std::string to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int n = *p.degree(); n >= 0; --n) {
        const auto c = p.coeff(n);
        if (c.is_zero()) continue;
        std::string cs = K::to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = cs == "1";
        if (n == 0) {
            out += cs;
        } else {
            if (!unit) {
                out += cs;
                out += "*";
            }
            out += "x";
            if (n > 1) out += "^" + std::to_string(n);
        }
    }
    return out;
}

template <class K>
Poly<K> parse_poly(const K& k, std::string_view text) {
    Poly<K> acc(k);
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == text.size()) raise(errc::parse_error, "empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            break;
        }
        if (i >= text.size()) raise(errc::parse_error, "dangling sign in polynomial");

        // Coefficient literal (optional when the term starts with x).
        typename K::Elem coeff = k.one();
        bool saw_coeff = false;
        std::size_t start = i;
        while (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '/')) ++i;
        if (i > start) {
            coeff = k.parse(text.substr(start, i - start));
            saw_coeff = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        int exponent = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t es = i;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
                if (i == es) raise(errc::parse_error, "missing exponent");
                exponent = 0;
                for (std::size_t j = es; j < i; ++j) exponent = exponent * 10 + (text[j] - '0');
            }
        } else if (!saw_coeff) {
            raise(errc::parse_error, "expected a term in polynomial");
        }
        if (neg) coeff = -coeff;
        acc += Poly<K>::monomial(k, coeff, exponent);
        first = false;
        skip_ws();
        if (i >= text.size()) break;
    }
    if (i != text.size()) raise(errc::parse_error, "trailing characters in polynomial");
    return acc;
}

} // namespace hyperjac

#endif
