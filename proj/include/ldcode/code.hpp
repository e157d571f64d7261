#pragma once

// Codes in F^n, their I-sets, and the dominating / locating-dominating /
// identifying checks.

#include "ldcode/hamming.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ldcode {

class EmptyCode : public Error {
public:
    using Error::Error;
};

/// A nonempty set of words, stored both as a membership table over all 2^n
/// words and as a sorted list of codewords. Immutable once built.
class Code {
public:
    /// Duplicated indices are merged. Throws EmptyCode for an empty list and
    /// DimensionError for indices outside the space.
    static Code from_words(Dimension dim, std::span<const WordIndex> words);
    static Code from_words(std::span<const Word> words);
    /// membership[x] != 0 marks x as a codeword; size must be 2^n.
    static Code from_membership(Dimension dim, std::vector<std::uint8_t> membership);
    static Code full(Dimension dim);

    [[nodiscard]] Dimension dim() const noexcept { return dim_; }
    [[nodiscard]] int n() const noexcept { return dim_.n(); }
    [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
    [[nodiscard]] bool contains(WordIndex x) const { return member_[x] != 0; }
    [[nodiscard]] bool contains(Word w) const;
    [[nodiscard]] const std::vector<WordIndex>& words() const noexcept { return words_; }
    [[nodiscard]] const std::vector<std::uint8_t>& membership() const noexcept { return member_; }

    [[nodiscard]] Code with(WordIndex x) const;
    [[nodiscard]] Code without(WordIndex x) const;

    friend bool operator==(const Code& a, const Code& b) { return a.dim_ == b.dim_ && a.member_ == b.member_; }

private:
    Code(Dimension dim, std::vector<std::uint8_t> membership);

    Dimension dim_;
    std::vector<std::uint8_t> member_;
    std::vector<WordIndex> words_;
};

/// |I(C;u)| for every word, with the members of each I-set available on demand.
class ISetIndex {
public:
    explicit ISetIndex(Code code);

    [[nodiscard]] const Code& code() const noexcept { return code_; }
    [[nodiscard]] Dimension dim() const noexcept { return code_.dim(); }
    [[nodiscard]] int n() const noexcept { return code_.n(); }
    [[nodiscard]] int cardinality(WordIndex u) const { return card_[u]; }
    [[nodiscard]] const std::vector<std::uint8_t>& cardinalities() const noexcept { return card_; }
    /// Codewords of N[u] in ascending order.
    [[nodiscard]] std::vector<WordIndex> members(WordIndex u) const;
    [[nodiscard]] bool same_iset(WordIndex u, WordIndex v) const;

private:
    Code code_;
    std::vector<std::uint8_t> card_;
};

ISetIndex build_iset_index(const Code& code);

/// I_r(C;u) = C ∩ B_r(u), ascending. Requires 1 <= r <= n.
std::vector<Word> i_set_r(const Code& code, Word u, int r);
/// Raw version of i_set_r for radius-limited scans.
std::vector<WordIndex> i_set_r(const Code& code, WordIndex u, int r);

enum class VerdictKind {
    holds,
    undominated,  ///< first has an empty I-set
    collision,    ///< first and second (first < second) have equal I-sets
};

struct Verdict {
    VerdictKind kind = VerdictKind::holds;
    WordIndex first = 0;
    WordIndex second = 0;

    [[nodiscard]] bool holds() const noexcept { return kind == VerdictKind::holds; }
    [[nodiscard]] std::string describe(const ISetIndex& index) const;
};

Verdict check_dominating(const ISetIndex& index);
/// Non-codeword I-sets are compared through 128-bit fingerprints of the sorted
/// member lists; equal fingerprints are confirmed member by member.
Verdict check_locating_dominating(const ISetIndex& index);
/// As check_locating_dominating, over all words.
Verdict check_identifying(const ISetIndex& index);

bool is_dominating(const Code& code);
bool is_locating_dominating(const Code& code);
bool is_identifying(const Code& code);

/// 128-bit fingerprint of a sorted codeword list.
struct Fingerprint {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(std::span<const WordIndex> sorted_members);

}  // namespace ldcode
