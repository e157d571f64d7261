#include "ldcode/hamming.hpp"

#include <algorithm>

namespace ldcode {

Dimension::Dimension(int n) : n_(n)
{
    if (n < 1 || n > kMaxDimension)
        throw DimensionError("dimension " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDimension) + "]");
}

Word::Word(WordIndex index, Dimension dim) : index_(index), dim_(dim)
{
    if (index > dim.mask())
        throw DimensionError("word index " + std::to_string(index) + " does not fit dimension " + std::to_string(dim.n()));
}

Word Word::unit(int i, Dimension dim)
{
    if (i < 1 || i > dim.n())
        throw DimensionError("unit vector e_" + std::to_string(i) + " outside dimension " + std::to_string(dim.n()));
    return Word(unit_bit(i), dim);
}

Word Word::from_coordinates(std::initializer_list<int> coords, Dimension dim)
{
    WordIndex x = 0;
    for (int c : coords)
        x ^= Word::unit(c, dim).index();
    return Word(x, dim);
}

Word Word::parse(std::string_view bits)
{
    Dimension dim(static_cast<int>(bits.size()));
    return Word(parse_bitstring(bits), dim);
}

std::string Word::to_string() const { return bitstring(index_, dim_.n()); }

Word Word::operator+(Word other) const
{
    if (!(dim_ == other.dim_))
        throw DimensionMismatch("cannot add words of dimensions " + std::to_string(dim_.n()) + " and " +
                                std::to_string(other.dim_.n()));
    return Word(index_ ^ other.index_, dim_);
}

std::string bitstring(WordIndex index, int n)
{
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (index & (WordIndex{1} << i))
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

WordIndex parse_bitstring(std::string_view bits)
{
    if (bits.size() > static_cast<std::size_t>(kMaxDimension))
        throw std::invalid_argument("bitstring longer than the dimension cap");
    WordIndex x = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            x |= WordIndex{1} << i;
        else if (bits[i] != '0')
            throw std::invalid_argument("bitstring contains '" + std::string(1, bits[i]) + "'");
    }
    return x;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

int weight(Word w) { return popcount(w.index()); }

int distance(Word u, Word v)
{
    if (!(u.dim() == v.dim()))
        throw DimensionMismatch("distance between words of dimensions " + std::to_string(u.dim().n()) + " and " +
                                std::to_string(v.dim().n()));
    return raw_distance(u.index(), v.index());
}

std::vector<Word> closed_neighborhood(Word u)
{
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(u.dim().n()) + 1);
    for_each_closed_neighbor(u.index(), u.dim().n(), [&](WordIndex x) { out.emplace_back(x, u.dim()); });
    return out;
}

std::vector<Word> ball(Word u, int r)
{
    const int n = u.dim().n();
    if (r < 0 || r > n)
        throw std::out_of_range("ball radius " + std::to_string(r) + " outside [0, " + std::to_string(n) + "]");
    std::vector<Word> out;
    std::uint64_t expected = 0;
    for (int i = 0; i <= r; ++i)
        expected += binomial(n, i);
    out.reserve(expected);
    // Offsets of each weight k in turn (Gosper's hack), then translate.
    const std::uint64_t limit = u.dim().space_size();
    for (int k = 0; k <= r; ++k) {
        if (k == 0) {
            out.emplace_back(u.index(), u.dim());
            continue;
        }
        for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
            out.emplace_back(u.index() ^ static_cast<WordIndex>(s), u.dim());
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t next = s + c;
            s = (((next ^ s) >> 2) / c) | next;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ball_intersection_size(Word a, Word b)
{
    const int d = distance(a, b);
    if (d == 0)
        return a.dim().n() + 1;
    if (d <= 2)
        return 2;
    return 0;
}

}  // namespace ldcode
