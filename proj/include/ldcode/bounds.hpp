#pragma once

// Lower bounds on the size of a smallest locating-dominating code in F^n,
// and the reference values they are compared against.

#include "ldcode/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ldcode {

/// 2^{n+1} / (n+3).
Rational slater_fraction(int n);
/// n^2 2^{n+1} / (n^3 + 2n^2 + 3n - 2).
Rational honkala_fraction(int n);
/// 2^{n+1} / (n+2); n >= 10.
Rational rule1_fraction(int n);
/// 2^{n+1} / (n+1+2(n-1)/(3(n-4))) for n in {11,12},
/// 2^{n+1} / (n+2+2/(n^2-5n)-4/(3n)) for n >= 13.
Rational main_fraction(int n);

std::int64_t slater_bound(int n);
std::int64_t honkala_bound(int n);
/// Throws UnsupportedDimension for n < 10.
std::int64_t rule1_bound(int n);
/// Throws UnsupportedDimension for n < 11.
std::int64_t main_bound(int n);

/// Largest of the bounds valid at n.
std::int64_t best_lower_bound(int n);

struct BoundReport {
    int n = 0;
    std::int64_t slater = 0;
    std::int64_t honkala = 0;
    std::optional<std::int64_t> rule1;
    std::optional<std::int64_t> main;
    std::int64_t best = 0;

    /// Published comparison values for small n (absent outside n <= 14).
    std::optional<std::int64_t> table1_old;
    std::optional<std::int64_t> table1_new;
    /// Exact minimum sizes known for n <= 5.
    std::optional<std::int64_t> known_exact;
    /// Upper bounds from cited constructions, not computed here.
    std::optional<std::int64_t> reference_upper;
};

BoundReport bound_report(int n);
/// Requires 1 <= n_from <= n_to <= kMaxDimension.
std::vector<BoundReport> bound_table(int n_from, int n_to);

}  // namespace ldcode
