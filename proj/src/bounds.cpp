#include "ldcode/bounds.hpp"

#include "ldcode/hamming.hpp"

#include <algorithm>
#include <array>

namespace ldcode {

namespace {

// Published values for n = 1..14; 0 marks an absent entry.
constexpr std::array<std::int64_t, 15> kOldLower{0, 1, 2, 4, 6, 10, 16, 28, 50, 91, 167, 309, 576, 1077, 2023};
constexpr std::array<std::int64_t, 15> kNewLower{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 171, 317, 589, 1099, 2059};
constexpr std::array<std::int64_t, 15> kUpper{0, 1, 2, 4, 6, 10, 18, 32, 61, 112, 208, 320, 640, 1280, 2550};

void require_range(int n, int minimum, const char* what)
{
    if (n < minimum || n > kMaxDimension)
        throw UnsupportedDimension(std::string(what) + " is defined for " + std::to_string(minimum) + " <= n <= " +
                                   std::to_string(kMaxDimension) + ", got n = " + std::to_string(n));
}

Rational::Int pow2(int e) { return Rational::Int(1) << e; }

std::int64_t ceil_of(const Rational& r) { return r.ceil().convert_to<std::int64_t>(); }

std::optional<std::int64_t> table_entry(const std::array<std::int64_t, 15>& table, int n)
{
    if (n < 1 || n >= static_cast<int>(table.size()) || table[static_cast<std::size_t>(n)] == 0)
        return std::nullopt;
    return table[static_cast<std::size_t>(n)];
}

}  // namespace

Rational slater_fraction(int n)
{
    require_range(n, 1, "the Slater bound");
    return Rational(pow2(n + 1), Rational::Int(n + 3));
}

Rational honkala_fraction(int n)
{
    require_range(n, 1, "the Honkala bound");
    const Rational::Int nn(n);
    return Rational(nn * nn * pow2(n + 1), nn * nn * nn + 2 * nn * nn + 3 * nn - 2);
}

Rational rule1_fraction(int n)
{
    require_range(n, 10, "the averaged-share bound");
    return Rational(pow2(n + 1), Rational::Int(n + 2));
}

Rational main_fraction(int n)
{
    require_range(n, 11, "the refined bound");
    const Rational numerator(pow2(n + 1), Rational::Int(1));
    if (n <= 12)
        return numerator / (Rational(n + 1) + Rational(2 * (n - 1), 3 * (n - 4)));
    return numerator / (Rational(n + 2) + Rational(2, n * n - 5 * n) - Rational(4, 3 * n));
}

std::int64_t slater_bound(int n) { return ceil_of(slater_fraction(n)); }
std::int64_t honkala_bound(int n) { return ceil_of(honkala_fraction(n)); }
std::int64_t rule1_bound(int n) { return ceil_of(rule1_fraction(n)); }
std::int64_t main_bound(int n) { return ceil_of(main_fraction(n)); }

std::int64_t best_lower_bound(int n) { return bound_report(n).best; }

BoundReport bound_report(int n)
{
    require_range(n, 1, "the bound table");
    BoundReport r;
    r.n = n;
    r.slater = slater_bound(n);
    r.honkala = honkala_bound(n);
    r.best = std::max(r.slater, r.honkala);
    if (n >= 10) {
        r.rule1 = rule1_bound(n);
        r.best = std::max(r.best, *r.rule1);
    }
    if (n >= 11) {
        r.main = main_bound(n);
        r.best = std::max(r.best, *r.main);
    }
    r.table1_old = table_entry(kOldLower, n);
    r.table1_new = table_entry(kNewLower, n);
    r.reference_upper = table_entry(kUpper, n);
    if (n <= 5)
        r.known_exact = table_entry(kOldLower, n);
    return r;
}

std::vector<BoundReport> bound_table(int n_from, int n_to)
{
    if (n_from < 1 || n_to > kMaxDimension || n_from > n_to)
        throw std::invalid_argument("bound table range [" + std::to_string(n_from) + ", " + std::to_string(n_to) +
                                    "] must satisfy 1 <= from <= to <= " + std::to_string(kMaxDimension));
    std::vector<BoundReport> out;
    for (int n = n_from; n <= n_to; ++n)
        out.push_back(bound_report(n));
    return out;
}

}  // namespace ldcode
