#include "ldcode/code.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ldcode {

namespace {

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Code::Code(Dimension dim, std::vector<std::uint8_t> membership) : dim_(dim), member_(std::move(membership))
{
    for (std::size_t x = 0; x < member_.size(); ++x) {
        if (member_[x]) {
            member_[x] = 1;
            words_.push_back(static_cast<WordIndex>(x));
        }
    }
    if (words_.empty())
        throw EmptyCode("a code must contain at least one word");
}

Code Code::from_words(Dimension dim, std::span<const WordIndex> words)
{
    std::vector<std::uint8_t> membership(dim.space_size(), 0);
    for (WordIndex x : words) {
        if (x > dim.mask())
            throw DimensionError("word index " + std::to_string(x) + " outside dimension " + std::to_string(dim.n()));
        membership[x] = 1;
    }
    return Code(dim, std::move(membership));
}

Code Code::from_words(std::span<const Word> words)
{
    if (words.empty())
        throw EmptyCode("a code must contain at least one word");
    const Dimension dim = words.front().dim();
    std::vector<WordIndex> raw;
    raw.reserve(words.size());
    for (const Word& w : words) {
        if (!(w.dim() == dim))
            throw DimensionMismatch("code words of mixed dimensions");
        raw.push_back(w.index());
    }
    return from_words(dim, raw);
}

Code Code::from_membership(Dimension dim, std::vector<std::uint8_t> membership)
{
    if (membership.size() != dim.space_size())
        throw DimensionError("membership table has " + std::to_string(membership.size()) + " entries, expected " +
                             std::to_string(dim.space_size()));
    return Code(dim, std::move(membership));
}

Code Code::full(Dimension dim) { return Code(dim, std::vector<std::uint8_t>(dim.space_size(), 1)); }

bool Code::contains(Word w) const
{
    if (!(w.dim() == dim_))
        throw DimensionMismatch("membership query with a word of the wrong dimension");
    return contains(w.index());
}

Code Code::with(WordIndex x) const
{
    auto m = member_;
    m.at(x) = 1;
    return Code(dim_, std::move(m));
}

Code Code::without(WordIndex x) const
{
    auto m = member_;
    m.at(x) = 0;
    return Code(dim_, std::move(m));
}

ISetIndex::ISetIndex(Code code) : code_(std::move(code)), card_(code_.dim().space_size(), 0)
{
    const int n = code_.n();
    // Each codeword contributes to the n+1 words of its closed neighbourhood.
    for (WordIndex c : code_.words())
        for_each_closed_neighbor(c, n, [&](WordIndex x) { ++card_[x]; });
}

std::vector<WordIndex> ISetIndex::members(WordIndex u) const
{
    std::vector<WordIndex> out;
    out.reserve(card_[u]);
    for_each_closed_neighbor(u, n(), [&](WordIndex x) {
        if (code_.contains(x))
            out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool ISetIndex::same_iset(WordIndex u, WordIndex v) const
{
    return card_[u] == card_[v] && members(u) == members(v);
}

ISetIndex build_iset_index(const Code& code) { return ISetIndex(code); }

std::vector<WordIndex> i_set_r(const Code& code, WordIndex u, int r)
{
    const int n = code.n();
    if (r < 1 || r > n)
        throw std::out_of_range("I_r radius " + std::to_string(r) + " outside [1, " + std::to_string(n) + "]");
    std::vector<WordIndex> out;
    std::uint64_t ball_size = 0;
    for (int i = 0; i <= r; ++i)
        ball_size += binomial(n, i);
    if (ball_size < code.size()) {
        for (const Word& w : ball(Word(u, code.dim()), r))
            if (code.contains(w.index()))
                out.push_back(w.index());
    } else {
        for (WordIndex c : code.words())
            if (raw_distance(c, u) <= r)
                out.push_back(c);
    }
    return out;
}

std::vector<Word> i_set_r(const Code& code, Word u, int r)
{
    if (!(u.dim() == code.dim()))
        throw DimensionMismatch("I_r query with a word of the wrong dimension");
    std::vector<Word> out;
    for (WordIndex x : i_set_r(code, u.index(), r))
        out.emplace_back(x, code.dim());
    return out;
}

Fingerprint fingerprint(std::span<const WordIndex> sorted_members)
{
    Fingerprint f{0x6a09e667f3bcc908ULL, 0xbb67ae8584caa73bULL};
    for (WordIndex x : sorted_members) {
        f.hi = mix64(f.hi ^ (x + 0x9e3779b97f4a7c15ULL));
        f.lo = mix64(f.lo + 0x632be59bd9b4e019ULL * (std::uint64_t{x} + 1));
    }
    f.hi ^= sorted_members.size();
    return f;
}

std::string Verdict::describe(const ISetIndex& index) const
{
    const int n = index.n();
    auto set_text = [&](WordIndex u) {
        std::ostringstream s;
        s << '{';
        bool first_member = true;
        for (WordIndex c : index.members(u)) {
            s << (first_member ? "" : ",") << bitstring(c, n);
            first_member = false;
        }
        s << '}';
        return s.str();
    };
    switch (kind) {
        case VerdictKind::holds:
            return "holds";
        case VerdictKind::undominated:
            return "word " + bitstring(first, n) + " is not dominated (empty I-set)";
        case VerdictKind::collision:
            return "words " + bitstring(first, n) + " and " + bitstring(second, n) + " share the I-set " +
                   set_text(first);
    }
    return {};
}

Verdict check_dominating(const ISetIndex& index)
{
    const auto& card = index.cardinalities();
    for (std::size_t u = 0; u < card.size(); ++u)
        if (card[u] == 0)
            return {VerdictKind::undominated, static_cast<WordIndex>(u), 0};
    return {};
}

namespace {

Verdict find_collision(const ISetIndex& index, bool include_codewords)
{
    const Code& code = index.code();
    std::vector<std::pair<Fingerprint, WordIndex>> prints;
    prints.reserve(include_codewords ? code.dim().space_size() : code.dim().space_size() - code.size());
    std::vector<WordIndex> members;
    const std::uint64_t total = code.dim().space_size();
    for (std::uint64_t x = 0; x < total; ++x) {
        const auto u = static_cast<WordIndex>(x);
        if (!include_codewords && code.contains(u))
            continue;
        members = index.members(u);
        prints.emplace_back(fingerprint(members), u);
    }
    std::sort(prints.begin(), prints.end());

    Verdict found;
    for (std::size_t lo = 0; lo < prints.size();) {
        std::size_t hi = lo + 1;
        while (hi < prints.size() && prints[hi].first == prints[lo].first)
            ++hi;
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = a + 1; b < hi; ++b)
                if (index.same_iset(prints[a].second, prints[b].second)) {
                    Verdict v{VerdictKind::collision, std::min(prints[a].second, prints[b].second),
                              std::max(prints[a].second, prints[b].second)};
                    if (found.holds() || std::pair(v.first, v.second) < std::pair(found.first, found.second))
                        found = v;
                }
        lo = hi;
    }
    return found;
}

}  // namespace

Verdict check_locating_dominating(const ISetIndex& index)
{
    if (auto v = check_dominating(index); !v.holds())
        return v;
    return find_collision(index, false);
}

Verdict check_identifying(const ISetIndex& index)
{
    if (auto v = check_dominating(index); !v.holds())
        return v;
    return find_collision(index, true);
}

bool is_dominating(const Code& code) { return check_dominating(ISetIndex(code)).holds(); }
bool is_locating_dominating(const Code& code) { return check_locating_dominating(ISetIndex(code)).holds(); }
bool is_identifying(const Code& code) { return check_identifying(ISetIndex(code)).holds(); }

}  // namespace ldcode
