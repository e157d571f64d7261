#include "ldcode/classify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ldcode {

namespace {

constexpr std::uint32_t kNoSlot = std::numeric_limits<std::uint32_t>::max();

std::vector<WordIndex> sorted_closed_neighborhood(WordIndex u, int n)
{
    std::vector<WordIndex> out;
    for_each_closed_neighbor(u, n, [&](WordIndex x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}

std::string word_text(WordIndex u, int n) { return bitstring(u, n); }

WordRole classify_pair_word(const ISetIndex& index, WordIndex u)
{
    const int n = index.n();
    const Code& code = index.code();
    const auto members = index.members(u);
    const WordIndex c1 = members[0];
    const WordIndex c2 = members[1];

    // Explicit N[c1] ∩ N[c2]; every word in it has both c1 and c2 in its I-set.
    const auto n1 = sorted_closed_neighborhood(c1, n);
    const auto n2 = sorted_closed_neighborhood(c2, n);
    std::vector<WordIndex> common;
    std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(), std::back_inserter(common));

    std::vector<WordIndex> fathers;
    for (WordIndex x : common)
        if (x != u && index.cardinality(x) >= 3)
            fathers.push_back(x);

    if (fathers.size() > 1)
        throw StructuralViolation("word " + word_text(u, n) + " has " + std::to_string(fathers.size()) +
                                      " candidate fathers; a son's father must be unique",
                                  u);
    if (fathers.size() == 1)
        return WordRole{Son{fathers.front()}};

    if (code.contains(u)) {
        const WordIndex partner = (u == c1) ? c2 : c1;
        if (index.cardinality(partner) == 2 && index.same_iset(u, partner))
            return WordRole{CoupleMember{partner}};
    }
    throw StructuralViolation("word " + word_text(u, n) + " has a two-element I-set but is neither a son nor in a couple",
                              u);
}

int count_non_codeword_fathers_of_degree(const ISetIndex& index, const std::vector<WordRole>& roles, WordIndex c,
                                         int degree)
{
    int count = 0;
    for (int i = 0; i < index.n(); ++i) {
        const WordIndex x = c ^ (WordIndex{1} << i);
        if (!index.code().contains(x) && roles[x].father_degree() == degree)
            ++count;
    }
    return count;
}

bool is_special_codeword(const ISetIndex& index, const std::vector<WordRole>& roles, WordIndex c)
{
    const int n = index.n();
    if (!index.code().contains(c) || index.cardinality(c) != 1)
        return false;
    int sons = 0;
    int orphans = 0;
    for (int i = 0; i < n; ++i) {
        const WordIndex x = c ^ (WordIndex{1} << i);
        sons += roles[x].is_son() ? 1 : 0;
        orphans += roles[x].is_orphan ? 1 : 0;
    }
    return orphans == 1 && sons == n - 2;
}

}  // namespace

int CodewordProfile::weighted_father_count() const
{
    int total = 0;
    for (std::size_t i = 3; i < father_histogram.size(); ++i)
        total += static_cast<int>(i - 1) * father_histogram[i];
    return total;
}

std::string CodewordProfile::type_list() const
{
    std::string s;
    for (int t = 1; t <= 6; ++t)
        if (has_type(t)) {
            if (!s.empty())
                s += ',';
            s += std::to_string(t);
        }
    return s;
}

std::vector<WordRole> classify_all(const ISetIndex& index)
{
    if (const Verdict v = check_locating_dominating(index); !v.holds())
        throw NotLocatingDominating("code is not locating-dominating: " + v.describe(index), v);

    const Code& code = index.code();
    const std::uint64_t total = code.dim().space_size();
    std::vector<WordRole> roles;
    roles.reserve(total);
    for (std::uint64_t x = 0; x < total; ++x) {
        const auto u = static_cast<WordIndex>(x);
        const int k = index.cardinality(u);
        if (k == 1) {
            WordRole r{TypeI{index.members(u).front()}};
            r.is_orphan = !code.contains(u);
            roles.push_back(r);
        } else if (k == 2) {
            roles.push_back(classify_pair_word(index, u));
        } else {
            roles.push_back(WordRole{Father{k}});
        }
    }

    // Couples are symmetric.
    for (std::uint64_t x = 0; x < total; ++x) {
        if (const auto* cm = std::get_if<CoupleMember>(&roles[x].kind)) {
            const auto* back = std::get_if<CoupleMember>(&roles[cm->partner].kind);
            if (!back || back->partner != x)
                throw StructuralViolation("couple link of " + word_text(static_cast<WordIndex>(x), index.n()) +
                                              " is not symmetric",
                                          static_cast<WordIndex>(x));
        }
    }
    return roles;
}

std::vector<WordRole> classify_all(const Code& code) { return classify_all(ISetIndex(code)); }

std::vector<CodewordProfile> codeword_profiles(const ISetIndex& index, const std::vector<WordRole>& roles)
{
    const int n = index.n();
    const Code& code = index.code();
    std::vector<CodewordProfile> out;
    out.reserve(code.size());

    for (WordIndex c : code.words()) {
        CodewordProfile p;
        p.codeword = c;
        p.i_set_size = index.cardinality(c);
        p.father_histogram.assign(static_cast<std::size_t>(n) + 2, 0);
        p.in_couple = roles[c].is_couple_member();
        int open_sons = 0;
        for_each_closed_neighbor(c, n, [&](WordIndex x) {
            const WordRole& r = roles[x];
            if (r.is_son()) {
                ++p.sons_in_N;
                if (x != c)
                    ++open_sons;
            }
            if (r.is_father())
                ++p.father_histogram[static_cast<std::size_t>(r.father_degree())];
            if (x != c && r.is_orphan)
                ++p.orphans_in_open_N;
        });

        const std::string where = "codeword " + word_text(c, n);
        if (p.orphans_in_open_N > 1)
            throw StructuralViolation(where + " has " + std::to_string(p.orphans_in_open_N) + " orphans in N(c)", c);
        if (p.weighted_father_count() < p.sons_in_N)
            throw StructuralViolation(where + " violates the father-count inequality: sum (i-1)F_i = " +
                                          std::to_string(p.weighted_father_count()) + " < " +
                                          std::to_string(p.sons_in_N) + " sons",
                                      c);

        auto tag = [&](int t) { p.type_tags = static_cast<std::uint8_t>(p.type_tags | (1U << t)); };
        if (p.orphans_in_open_N == 0)
            tag(1);
        if (p.i_set_size >= 2)
            tag(2);
        if (p.orphans_in_open_N == 1 && p.i_set_size == 1) {
            if (open_sons <= n - 4)
                tag(3);
            else if (open_sons == n - 3)
                tag(4);
            else if (open_sons == n - 2)
                tag(5);
            else
                tag(6);
        }
        if (p.type_tags == 0)
            throw StructuralViolation(where + " matches none of the codeword types 1)-6)", c);
        // For n = 1 the son-count split degenerates: {0} has no sons and still
        // exceeds n-2. From n = 2 on a type 6) codeword needs a son without a father.
        if (p.has_type(6) && n >= 2)
            throw StructuralViolation(where + " is of type 6) (more than n-2 sons with an orphan and I(c)={c})", c);
        p.is_special = p.has_type(5);

        // Special <=> exactly one non-codeword F_{n-1}-father, one orphan and
        // n-2 sons make up N(c).
        const int fn1 = n - 1 >= 3 ? count_non_codeword_fathers_of_degree(index, roles, c, n - 1) : 0;
        const bool neighbourhood_form = fn1 == 1 && p.orphans_in_open_N == 1 && open_sons == n - 2;
        if (neighbourhood_form != p.is_special)
            throw StructuralViolation(where + (p.is_special ? " is special but its neighbourhood lacks the F_{n-1}-father form"
                                                            : " has the special neighbourhood form but is not type 5)"),
                                      c);
        if (p.is_special != is_special_codeword(index, roles, c))
            throw StructuralViolation(where + ": special-codeword predicates disagree", c);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<SparseFather> find_sparse_fathers(const ISetIndex& index, const std::vector<WordRole>& roles)
{
    const int n = index.n();
    const Code& code = index.code();
    std::vector<SparseFather> out;
    if (n < 3)
        return out;

    const std::uint64_t total = code.dim().space_size();
    for (std::uint64_t x = 0; x < total; ++x) {
        const auto u = static_cast<WordIndex>(x);
        if (!roles[u].is_special_father)
            continue;
        const auto ball3 = i_set_r(code, u, 3);
        if (static_cast<int>(ball3.size()) != n)
            continue;

        const std::string where = "sparse father " + word_text(u, n);
        if (code.contains(u))
            throw StructuralViolation(where + " is a codeword", u);
        if (index.cardinality(u) != n - 1)
            throw StructuralViolation(where + " has |I(u)| = " + std::to_string(index.cardinality(u)) +
                                          ", expected n-1",
                                      u);
        int special = 0;
        for (WordIndex c : index.members(u))
            special += is_special_codeword(index, roles, c) ? 1 : 0;
        if (special != n - 2)
            throw StructuralViolation(where + " has " + std::to_string(special) +
                                          " special codewords in I(u), expected n-2",
                                      u);

        std::vector<WordIndex> at_two;
        int at_three = 0;
        for (WordIndex c : ball3) {
            const int d = raw_distance(c, u);
            if (d == 2)
                at_two.push_back(c);
            else if (d == 3)
                ++at_three;
        }
        if (at_two.size() != 1 || at_three != 0)
            throw StructuralViolation(where + " has " + std::to_string(at_two.size()) + " codewords at distance two and " +
                                          std::to_string(at_three) + " at distance three, expected 1 and 0",
                                      u);
        const WordIndex v = at_two.front();
        const auto* cm = std::get_if<CoupleMember>(&roles[v].kind);
        if (!cm || raw_distance(cm->partner, u) != 1)
            throw StructuralViolation(where + ": codeword " + word_text(v, n) +
                                          " at distance two is not coupled with a codeword of I(u)",
                                      v);
        out.push_back(SparseFather{u, v, cm->partner});
    }
    return out;
}

Taxonomy::Taxonomy(const Code& code) : index_(code)
{
    const int n = index_.n();
    roles_ = classify_all(index_);
    profiles_ = codeword_profiles(index_, roles_);

    profile_slot_.assign(code.dim().space_size(), kNoSlot);
    for (std::size_t i = 0; i < profiles_.size(); ++i)
        profile_slot_[profiles_[i].codeword] = static_cast<std::uint32_t>(i);

    for (const CodewordProfile& p : profiles_) {
        if (!p.is_special)
            continue;
        int fathers = 0;
        for (int i = 0; i < n; ++i) {
            const WordIndex x = p.codeword ^ (WordIndex{1} << i);
            if (!roles_[x].is_father())
                continue;
            ++fathers;
            if (code.contains(x) || roles_[x].father_degree() != n - 1)
                throw StructuralViolation("special father " + word_text(x, n) +
                                              " is not a non-codeword F_{n-1}-father",
                                          x);
            roles_[x].is_special_father = true;
        }
        if (fathers != 1)
            throw StructuralViolation("special codeword " + word_text(p.codeword, n) + " has " +
                                          std::to_string(fathers) + " adjacent fathers",
                                      p.codeword);
    }

    sparse_ = find_sparse_fathers(index_, roles_);
    for (const SparseFather& s : sparse_)
        roles_[s.father].is_sparse_father = true;
}

const CodewordProfile& Taxonomy::profile(WordIndex c) const
{
    const std::uint32_t slot = profile_slot_.at(c);
    if (slot == kNoSlot)
        throw std::out_of_range("profile requested for non-codeword " + word_text(c, n()));
    return profiles_[slot];
}

TaxonomyCounts Taxonomy::counts() const
{
    TaxonomyCounts t;
    for (const WordRole& r : roles_) {
        t.type_i += r.is_type_i();
        t.couple_members += r.is_couple_member();
        t.sons += r.is_son();
        t.fathers += r.is_father();
        t.orphans += r.is_orphan;
        t.special_fathers += r.is_special_father;
        t.sparse_fathers += r.is_sparse_father;
    }
    t.couples = t.couple_members / 2;
    for (const CodewordProfile& p : profiles_)
        t.special_codewords += p.is_special;
    return t;
}

}  // namespace ldcode
