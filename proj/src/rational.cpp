#include "ldcode/rational.hpp"

#include <stdexcept>

namespace ldcode {

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    *this = Rational(Int(num), Int(den));
}

Rational::Rational(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = den < 0 ? Storage(-num, -den) : Storage(num, den);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.v_ == 0)
        throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    auto to_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("empty integer in rational");
        return Int(std::string(s));
    };
    if (slash == std::string_view::npos)
        return Rational(to_int(text), Int(1));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

std::string Rational::str() const { return num().str() + "/" + den().str(); }

Rational::Int ceil_div(const Rational::Int& a, const Rational::Int& b)
{
    if (b <= 0)
        throw std::domain_error("ceil_div needs a positive divisor");
    if (a >= 0)
        return (a + b - 1) / b;
    return -((-a) / b);
}

Rational::Int Rational::ceil() const { return ceil_div(num(), den()); }

Rational::Int Rational::floor() const
{
    const Int n = num();
    const Int d = den();
    if (n >= 0)
        return n / d;
    return -ceil_div(-n, d);
}

}  // namespace ldcode
