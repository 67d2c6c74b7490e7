#ifndef HYPERJAC_RATIONAL_HPP
#define HYPERJAC_RATIONAL_HPP

#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperjac/errors.hpp"

namespace hyperjac {

// Exact rational with arbitrary-precision integer parts. cpp_rational keeps
// every value in lowest terms with a positive denominator, which is the
// canonical form the library relies on for bit-for-bit equality.
class Rat {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rat() : v_(0) {}
    explicit Rat(rep v) : v_(std::move(v)) {}
    Rat(long long num, long long den) : v_(boost::multiprecision::cpp_int(num)) {
        if (den == 0) raise(errc::division_by_zero, "rational with zero denominator");
        v_ /= boost::multiprecision::cpp_int(den);
    }

    const rep& value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_.is_zero(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) raise(errc::division_by_zero, "rational division by 0");
        return Rat(a.v_ / b.v_);
    }

    Rat operator-() const { return Rat(-v_); }

    Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
    Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
    Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    Rat inverse() const {
        if (is_zero()) raise(errc::division_by_zero, "inverse of 0 in QQ");
        return Rat(rep(1) / v_);
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

private:
    rep v_;
};

struct RatField {
    using Elem = Rat;
    static constexpr bool is_prime_field = false;

    std::uint64_t characteristic() const noexcept { return 0; }

    Rat zero() const { return Rat(); }
    Rat one() const { return Rat(Rat::rep(1)); }
    Rat from_int(long long n) const { return Rat(Rat::rep(n)); }

    Rat parse(std::string_view s) const {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        if (s.empty()) raise(errc::parse_error, "empty field element");
        for (char c : s) {
            if ((c < '0' || c > '9') && c != '/' && c != '-')
                raise(errc::parse_error, "bad character in rational '" + std::string(s) + "'");
        }
        try {
            return Rat(Rat::rep(std::string(s)));
        } catch (const std::exception&) {
            raise(errc::parse_error, "cannot parse rational '" + std::string(s) + "'");
        }
    }

    static std::string to_string(const Rat& e) { return e.value().str(); }
    static bool is_negative(const Rat& e) { return e.value() < 0; }

    bool operator==(const RatField&) const { return true; }
};

} // namespace hyperjac

#endif
