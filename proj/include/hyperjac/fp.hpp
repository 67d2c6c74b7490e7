#ifndef HYPERJAC_FP_HPP
#define HYPERJAC_FP_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "hyperjac/errors.hpp"

namespace hyperjac {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

// Element of GF(p). The modulus travels with the element, so arithmetic across
// different prime fields is rejected at run time rather than silently mixed.
class Fp {
public:
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check(a, b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check(a, b);
        return Fp::raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check(a, b);
        return Fp::raw(detail::mulmod_u64(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    Fp inverse() const {
        if (v_ == 0) raise(errc::division_by_zero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
        return Fp::raw(detail::powmod_u64(v_, p_ - 2, p_), p_);
    }

    Fp pow(std::uint64_t e) const { return Fp::raw(detail::powmod_u64(v_, e, p_), p_); }

    // Equality across different prime fields is false, not an error, so that
    // comparing containers from distinct curves stays total.
    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp e(0, p);
        e.v_ = v;
        return e;
    }
    static void check(const Fp& a, const Fp& b) {
        if (a.p_ != b.p_)
            raise(errc::field_mismatch,
                  "GF(" + std::to_string(a.p_) + ") vs GF(" + std::to_string(b.p_) + ")");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

// GF(p) context. Rejects characteristic 2 at construction: the curve model
// y^2 = P(x) and the halving steps of the reduction formulas need 2 invertible.
struct FpField {
    using Elem = Fp;
    static constexpr bool is_prime_field = true;

    explicit FpField(std::uint64_t prime) : p(prime) {
        if (p <= 2 || !detail::is_prime_u64(p))
            raise(errc::bad_characteristic, "GF(" + std::to_string(p) + "): modulus must be an odd prime");
        if (p >= (std::uint64_t(1) << 62))
            raise(errc::bad_characteristic, "GF(p) supports p < 2^62");
    }

    std::uint64_t characteristic() const noexcept { return p; }

    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }

    Fp from_int(long long n) const {
        if (n >= 0) return Fp(static_cast<std::uint64_t>(n), p);
        std::uint64_t r = static_cast<std::uint64_t>(-(n + 1)) % p;      // |n| mod p without overflow
        r = (r + 1) % p;
        return Fp(r == 0 ? 0 : p - r, p);
    }

    // Accepts "17", "-3" and "a/b" (the latter resolved as a * b^-1).
    Fp parse(std::string_view s) const {
        auto slash = s.find('/');
        if (slash != std::string_view::npos) {
            Fp num = parse_integer(s.substr(0, slash));
            Fp den = parse_integer(s.substr(slash + 1));
            if (den.is_zero()) raise(errc::parse_error, "zero denominator in '" + std::string(s) + "'");
            return num / den;
        }
        return parse_integer(s);
    }

    static std::string to_string(const Fp& e) { return std::to_string(e.value()); }
    static bool is_negative(const Fp&) { return false; }

    bool operator==(const FpField& o) const { return p == o.p; }

    std::uint64_t p;

private:
    Fp parse_integer(std::string_view s) const {
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) raise(errc::parse_error, "empty field element");
        std::uint64_t acc = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                raise(errc::parse_error, "bad character in field element '" + std::string(s) + "'");
            acc = (detail::mulmod_u64(acc, 10, p) + static_cast<std::uint64_t>(s[i] - '0')) % p;
        }
        Fp r(acc, p);
        return neg ? -r : r;
    }
};

// Square root in GF(p) by Tonelli-Shanks, with the exponentiation shortcut for
// p = 3 (mod 4). Returns false when a is a non-residue.
inline bool sqrt_mod(const FpField& k, const Fp& a, Fp& root) {
    const std::uint64_t p = k.p;
    if (a.is_zero()) {
        root = k.zero();
        return true;
    }
    if (a.pow((p - 1) / 2) != k.one()) return false;
    if (p % 4 == 3) {
        root = a.pow((p + 1) / 4);
        return true;
    }
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    Fp z = k.from_int(2);
    while (z.pow((p - 1) / 2) == k.one()) z += k.one();
    Fp m_c = z.pow(q);
    Fp t = a.pow(q);
    Fp r = a.pow((q + 1) / 2);
    int m = s;
    while (t != k.one()) {
        Fp t2 = t;
        int i = 0;
        while (t2 != k.one()) {
            t2 = t2 * t2;
            ++i;
        }
        Fp b = m_c;
        for (int j = 0; j < m - i - 1; ++j) b = b * b;
        m_c = b * b;
        t = t * m_c;
        r = r * b;
        m = i;
    }
    root = r;
    return true;
}

} // namespace hyperjac

#endif
