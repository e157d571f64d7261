#pragma once

// Word taxonomy of a locating-dominating code.
//
// Every word u falls into exactly one of four classes by its I-set:
//   |I(u)| = 1             -> TypeI (an orphan when u is not a codeword)
//   I(c1) = I(c2) = {c1,c2} -> CoupleMember (two adjacent codewords)
//   |I(u)| = 2 otherwise   -> Son of the unique father whose I-set contains it
//   |I(u)| >= 3            -> Father of that degree (an F_i-father, i = |I(u)|)
//
// Codewords additionally get a profile recording the classes of their
// neighbours and the overlapping codeword types 1)-6) used by the share caps.

#include "ldcode/code.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ldcode {

/// The input is not locating-dominating; the witness says why.
class NotLocatingDominating : public Error {
public:
    NotLocatingDominating(const std::string& what, Verdict witness) : Error(what), witness_(witness) {}
    [[nodiscard]] const Verdict& witness() const noexcept { return witness_; }

private:
    Verdict witness_;
};

/// A structural consequence of the taxonomy failed on a concrete code. This
/// is either a bug or a counterexample and is never recovered from silently.
class StructuralViolation : public Error {
public:
    StructuralViolation(const std::string& what, std::optional<WordIndex> word = std::nullopt)
        : Error(what), word_(word) {}
    [[nodiscard]] std::optional<WordIndex> word() const noexcept { return word_; }

private:
    std::optional<WordIndex> word_;
};

struct TypeI {
    WordIndex sole_dominator;
};
struct CoupleMember {
    WordIndex partner;
};
struct Son {
    WordIndex father;
};
struct Father {
    int degree;
};

struct WordRole {
    std::variant<TypeI, CoupleMember, Son, Father> kind;
    bool is_orphan = false;
    bool is_special_father = false;
    bool is_sparse_father = false;

    [[nodiscard]] bool is_type_i() const { return std::holds_alternative<TypeI>(kind); }
    [[nodiscard]] bool is_couple_member() const { return std::holds_alternative<CoupleMember>(kind); }
    [[nodiscard]] bool is_son() const { return std::holds_alternative<Son>(kind); }
    [[nodiscard]] bool is_father() const { return std::holds_alternative<Father>(kind); }
    /// Degree if this is a father, 0 otherwise.
    [[nodiscard]] int father_degree() const
    {
        const auto* f = std::get_if<Father>(&kind);
        return f ? f->degree : 0;
    }
};

struct CodewordProfile {
    WordIndex codeword = 0;
    int i_set_size = 0;
    /// Sons in N[c].
    int sons_in_N = 0;
    /// Orphans in N(c); at most one for a locating-dominating code.
    int orphans_in_open_N = 0;
    /// father_histogram[i] = F_i(c), the number of F_i-fathers in N[c]; size n+2.
    std::vector<int> father_histogram;
    bool in_couple = false;
    /// Bit t set when codeword type t) applies, t in 1..6. Types overlap.
    std::uint8_t type_tags = 0;
    bool is_special = false;

    [[nodiscard]] bool has_type(int t) const { return (type_tags >> t) & 1U; }
    /// Sum over i of (i-1) * F_i(c).
    [[nodiscard]] int weighted_father_count() const;
    [[nodiscard]] std::string type_list() const;
};

struct TaxonomyCounts {
    std::size_t type_i = 0;
    std::size_t couples = 0;  ///< pairs, not members
    std::size_t couple_members = 0;
    std::size_t sons = 0;
    std::size_t fathers = 0;
    std::size_t orphans = 0;
    std::size_t special_codewords = 0;
    std::size_t special_fathers = 0;
    std::size_t sparse_fathers = 0;
};

/// A special father u with |I_3(u)| = n, the unique codeword v at distance two
/// from it, and the couple containing v.
struct SparseFather {
    WordIndex father;
    WordIndex v;
    WordIndex partner;  ///< v's couple partner, a codeword of I(u)
};

/// Roles for all 2^n words plus the codeword profiles, built once.
class Taxonomy {
public:
    /// Throws NotLocatingDominating or StructuralViolation.
    explicit Taxonomy(const Code& code);

    [[nodiscard]] const ISetIndex& index() const noexcept { return index_; }
    [[nodiscard]] const Code& code() const noexcept { return index_.code(); }
    [[nodiscard]] int n() const noexcept { return index_.n(); }
    [[nodiscard]] const WordRole& role(WordIndex u) const { return roles_[u]; }
    [[nodiscard]] const std::vector<WordRole>& roles() const noexcept { return roles_; }
    /// Profiles in ascending codeword order (parallel to code().words()).
    [[nodiscard]] const std::vector<CodewordProfile>& profiles() const noexcept { return profiles_; }
    [[nodiscard]] const CodewordProfile& profile(WordIndex c) const;
    [[nodiscard]] const std::vector<SparseFather>& sparse_fathers() const noexcept { return sparse_; }
    [[nodiscard]] TaxonomyCounts counts() const;

private:
    ISetIndex index_;
    std::vector<WordRole> roles_;
    std::vector<CodewordProfile> profiles_;
    std::vector<std::uint32_t> profile_slot_;  // word -> position in profiles_, or npos
    std::vector<SparseFather> sparse_;
};

/// Roles without the special/sparse flags. Throws NotLocatingDominating.
std::vector<WordRole> classify_all(const ISetIndex& index);
std::vector<WordRole> classify_all(const Code& code);

/// Profiles of every codeword, with their invariants checked.
std::vector<CodewordProfile> codeword_profiles(const ISetIndex& index, const std::vector<WordRole>& roles);

/// Sparse fathers among the special fathers flagged in roles, with their
/// structural consequences asserted. Throws StructuralViolation.
std::vector<SparseFather> find_sparse_fathers(const ISetIndex& index, const std::vector<WordRole>& roles);

}  // namespace ldcode
