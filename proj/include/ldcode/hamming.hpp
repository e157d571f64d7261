#pragma once

// Binary Hamming space F^n: words, distances, neighbourhoods and balls.
//
// A word is an integer index in [0, 2^n). Bit i (0-based) of the index holds
// coordinate i+1, so e_i is the word with only bit i-1 set. Text renderings
// put coordinate 1 leftmost.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#ifndef LDCODE_MAX_DIMENSION
#define LDCODE_MAX_DIMENSION 30
#endif

namespace ldcode {

inline constexpr int kMaxDimension = LDCODE_MAX_DIMENSION;
static_assert(kMaxDimension >= 1 && kMaxDimension <= 30, "dimension cap must fit 32-bit indices");

using WordIndex = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Thrown when an operation is asked for a dimension outside its validity domain.
class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

class Dimension {
public:
    explicit Dimension(int n);

    [[nodiscard]] int n() const noexcept { return n_; }
    /// Number of words, 2^n.
    [[nodiscard]] std::uint64_t space_size() const noexcept { return std::uint64_t{1} << n_; }
    [[nodiscard]] WordIndex mask() const noexcept { return static_cast<WordIndex>(space_size() - 1); }

    friend bool operator==(Dimension, Dimension) = default;

private:
    int n_;
};

class Word {
public:
    Word(WordIndex index, Dimension dim);

    /// e_i, 1-based coordinate i.
    static Word unit(int i, Dimension dim);
    static Word zero(Dimension dim) { return Word(0, dim); }
    /// Sum of unit vectors for the given 1-based coordinates (each toggled once).
    static Word from_coordinates(std::initializer_list<int> coords, Dimension dim);
    /// Parses a bitstring whose leftmost character is coordinate 1.
    static Word parse(std::string_view bits);

    [[nodiscard]] WordIndex index() const noexcept { return index_; }
    [[nodiscard]] Dimension dim() const noexcept { return dim_; }
    [[nodiscard]] std::string to_string() const;

    Word operator+(Word other) const;
    [[nodiscard]] Word complement() const { return Word(index_ ^ dim_.mask(), dim_); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.index_ <=> b.index_; }

private:
    WordIndex index_;
    Dimension dim_;
};

// Raw-index helpers used by the table scans; callers own the dimension.
[[nodiscard]] inline int popcount(WordIndex x) noexcept { return __builtin_popcount(x); }
[[nodiscard]] inline int raw_distance(WordIndex a, WordIndex b) noexcept { return popcount(a ^ b); }
[[nodiscard]] inline WordIndex unit_bit(int coordinate) noexcept { return WordIndex{1} << (coordinate - 1); }

std::string bitstring(WordIndex index, int n);
/// Inverse of bitstring(); throws std::invalid_argument on characters outside {0,1}.
WordIndex parse_bitstring(std::string_view bits);

/// Binomial coefficient for small arguments (n <= 62).
std::uint64_t binomial(int n, int k);

int weight(Word w);
int distance(Word u, Word v);

/// N[u], starting with u itself followed by u + e_1, ..., u + e_n.
std::vector<Word> closed_neighborhood(Word u);
/// B_r(u) in ascending index order.
std::vector<Word> ball(Word u, int r);

/// |N[a] ∩ N[b]| by the distance case split: n+1, 2, 2 or 0.
int ball_intersection_size(Word a, Word b);

/// Raw version of closed_neighborhood used in hot loops.
template <typename F>
inline void for_each_closed_neighbor(WordIndex u, int n, F&& f)
{
    f(u);
    for (int i = 0; i < n; ++i)
        f(u ^ (WordIndex{1} << i));
}

}  // namespace ldcode
