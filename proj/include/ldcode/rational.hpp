#pragma once

// Exact rationals for shares, caps and bound fractions.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ldcode {

class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(std::int64_t value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const Int& num, const Int& den);

    /// Parses "p/q" or "p".
    static Rational parse(std::string_view text);

    [[nodiscard]] Int num() const { return boost::multiprecision::numerator(v_); }
    [[nodiscard]] Int den() const { return boost::multiprecision::denominator(v_); }

    /// Always "p/q", with q = 1 for integers.
    [[nodiscard]] std::string str() const;
    [[nodiscard]] Int ceil() const;
    [[nodiscard]] Int floor() const;
    /// For human-readable output only.
    [[nodiscard]] double approx() const { return v_.convert_to<double>(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(Storage(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using Storage = boost::multiprecision::cpp_rational;
    explicit Rational(Storage v) : v_(std::move(v)) {}

    Storage v_;
};

/// ceil(a / b) for b > 0 on exact integers, as (a + b - 1) div b when a >= 0.
Rational::Int ceil_div(const Rational::Int& a, const Rational::Int& b);

}  // namespace ldcode
