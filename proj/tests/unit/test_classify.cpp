#include "ldcode/classify.hpp"
#include "ldcode/search.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ldcode;
using oracle::e;

namespace {

// Independent checks of the taxonomy on one code, from explicit I-sets.
void check_taxonomy(const Taxonomy& t)
{
    const int n = t.n();
    const auto& m = t.code().membership();
    const WordIndex size = WordIndex{1} << n;
    std::vector<oracle::Set> sets(size);
    for (WordIndex u = 0; u < size; ++u)
        sets[u] = oracle::iset(m, u, n);

    std::size_t total = 0;
    for (WordIndex u = 0; u < size; ++u) {
        const WordRole& r = t.role(u);
        const std::size_t k = sets[u].size();
        total += static_cast<std::size_t>(r.is_type_i()) + r.is_couple_member() + r.is_son() + r.is_father();
        CHECK(r.is_type_i() == (k == 1));
        CHECK(r.is_father() == (k >= 3));
        CHECK((r.is_couple_member() || r.is_son()) == (k == 2));
        CHECK(r.is_orphan == (k == 1 && !m[u]));
        if (r.is_father())
            CHECK(r.father_degree() == static_cast<int>(k));
        if (r.is_type_i())
            CHECK(std::get<TypeI>(r.kind).sole_dominator == *sets[u].begin());
        if (r.is_couple_member()) {
            const WordIndex p = std::get<CoupleMember>(r.kind).partner;
            CHECK(m[u]);
            CHECK(std::get<CoupleMember>(t.role(p).kind).partner == u);
            CHECK(sets[u] == oracle::Set{u, p});
            CHECK(sets[p] == oracle::Set{u, p});
        }
        if (r.is_son()) {
            // The unique word other than u adjacent to both codewords with |I| >= 3.
            const WordIndex a = *sets[u].begin(), b = *sets[u].rbegin();
            int fathers = 0;
            WordIndex found = 0;
            for (WordIndex w = 0; w < size; ++w)
                if (w != u && oracle::dist(w, a) <= 1 && oracle::dist(w, b) <= 1 && sets[w].size() >= 3) {
                    ++fathers;
                    found = w;
                }
            CHECK(fathers == 1);
            CHECK(std::get<Son>(r.kind).father == found);
            for (WordIndex c : sets[u])
                CHECK(sets[found].count(c) == 1);
        }
        if (r.is_special_father) {
            CHECK_FALSE(m[u]);
            CHECK(k == static_cast<std::size_t>(n - 1));
        }
        if (r.is_sparse_father) {
            CHECK(r.is_special_father);
            std::size_t within3 = 0;
            for (WordIndex c : t.code().words())
                within3 += oracle::dist(u, c) <= 3;
            CHECK(within3 == static_cast<std::size_t>(n));
        }
    }
    CHECK(total == size);

    for (const CodewordProfile& p : t.profiles()) {
        const WordIndex c = p.codeword;
        int sons = 0, orphans = 0, weighted = 0;
        for (WordIndex v : oracle::neighborhood(c, n)) {
            const std::size_t k = sets[v].size();
            if (t.role(v).is_son())
                ++sons;
            if (v != c && k == 1 && !m[v])
                ++orphans;
            if (k >= 3)
                weighted += static_cast<int>(k) - 1;
        }
        CHECK(p.sons_in_N == sons);
        CHECK(p.orphans_in_open_N == orphans);
        CHECK(orphans <= 1);
        CHECK(p.weighted_father_count() == weighted);
        CHECK(weighted >= sons);
        CHECK(p.i_set_size == static_cast<int>(sets[c].size()));
        if (n >= 2)
            CHECK_FALSE(p.has_type(6));
        CHECK(p.has_type(1) == (orphans == 0));
        CHECK(p.has_type(2) == (sets[c].size() >= 2));
        const bool lone_with_orphan = orphans == 1 && sets[c].size() == 1;
        CHECK(p.has_type(5) == (lone_with_orphan && sons == n - 2));
        CHECK(p.is_special == p.has_type(5));
    }
}

}  // namespace

TEST_SUITE("classify")
{
    TEST_CASE("full space: every word is a father of degree n+1")
    {
        for (int n = 1; n <= 8; ++n) {
            const Taxonomy t(Code::full(Dimension(n)));
            for (const WordRole& r : t.roles()) {
                REQUIRE(r.is_father() == (n >= 2));
                if (n >= 2)
                    CHECK(r.father_degree() == n + 1);
            }
            for (const CodewordProfile& p : t.profiles()) {
                CHECK(p.sons_in_N == 0);
                CHECK(p.orphans_in_open_N == 0);
                if (n >= 2)
                    CHECK(p.father_histogram[static_cast<std::size_t>(n + 1)] == n + 1);
                CHECK(p.has_type(1));
                CHECK(p.has_type(2));
            }
            CHECK(t.sparse_fathers().empty());
            CHECK(t.counts().fathers == (n >= 2 ? (std::size_t{1} << n) : 0));
        }
    }

    TEST_CASE("non locating-dominating inputs are refused with a witness")
    {
        const auto pair = Code::from_words(std::vector<Word>{Word::parse("00"), Word::parse("11")});
        CHECK_THROWS_AS(classify_all(pair), NotLocatingDominating);
        try {
            (void)Taxonomy(pair);
            FAIL("expected NotLocatingDominating");
        } catch (const NotLocatingDominating& e) {
            CHECK(e.witness().kind == VerdictKind::collision);
        }
        CHECK_THROWS_AS(classify_all(Code::from_words(std::vector<Word>{Word::parse("000"), Word::parse("011")})),
                        NotLocatingDominating);
    }

    TEST_CASE("n = 2 adjacent pair is a couple")
    {
        const Taxonomy t(Code::from_words(std::vector<Word>{Word::parse("00"), Word::parse("10")}));
        CHECK(t.role(parse_bitstring("00")).is_couple_member());
        CHECK(std::get<CoupleMember>(t.role(parse_bitstring("00")).kind).partner == parse_bitstring("10"));
        CHECK(t.role(parse_bitstring("01")).is_orphan);
        CHECK(t.role(parse_bitstring("11")).is_orphan);
        CHECK(t.counts().couples == 1);
        CHECK(t.counts().orphans == 2);
        check_taxonomy(t);
    }

    TEST_CASE("taxonomy invariants on random locating-dominating codes")
    {
        std::mt19937_64 rng(31);
        int tested = 0;
        for (int trial = 0; trial < 4000 && tested < 120; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 7);
            auto m = oracle::random_membership(n, 0.35 + 0.3 * static_cast<double>(rng() % 10) / 10.0, rng);
            if (!oracle::any(m))
                continue;
            const Code c = Code::from_membership(Dimension(n), m);
            if (!is_locating_dominating(c))
                continue;
            ++tested;
            check_taxonomy(Taxonomy(c));
        }
        CHECK(tested >= 60);
    }

    TEST_CASE("taxonomy invariants on greedy codes, n <= 10")
    {
        for (int n = 3; n <= 10; ++n)
            for (std::uint64_t seed = 0; seed < 3; ++seed)
                check_taxonomy(Taxonomy(greedy_reduce(n, seed)));
    }

    TEST_CASE("greedy codes at n = 11, 12 satisfy the counting invariants")
    {
        for (int n : {11, 12})
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const Taxonomy t(greedy_reduce(n, seed));
                const TaxonomyCounts k = t.counts();
                CHECK(k.type_i + k.couple_members + k.sons + k.fathers == (std::size_t{1} << n));
                CHECK(k.couple_members == 2 * k.couples);
                for (const CodewordProfile& p : t.profiles()) {
                    CHECK(p.orphans_in_open_N <= 1);
                    CHECK(p.weighted_father_count() >= p.sons_in_N);
                    CHECK_FALSE(p.has_type(6));
                }
            }
    }

    TEST_CASE("sparse father fixture at n = 11")
    {
        const int n = 11;
        const Code c = Code::from_membership(Dimension(n), oracle::sparse_father_fixture(n));
        REQUIRE(is_locating_dominating(c));
        const Taxonomy t(c);
        check_taxonomy(t);

        CHECK(t.role(0).is_special_father);
        CHECK(t.role(0).is_sparse_father);
        CHECK(t.role(0).father_degree() == n - 1);
        for (int i = 1; i <= n - 1; ++i)
            CHECK(t.profile(e(i)).is_special == (i != 2));
        CHECK(t.counts().special_codewords == static_cast<std::size_t>(n - 2));
        CHECK(t.counts().special_fathers == 1);
        REQUIRE(t.sparse_fathers().size() == 1);
        const SparseFather& s = t.sparse_fathers().front();
        CHECK(s.father == 0);
        CHECK(s.v == (e(2) | e(n)));
        CHECK(s.partner == e(2));
        CHECK(t.role(e(n)).is_type_i());
        CHECK(t.role(e(1) | e(n)).is_orphan);
        CHECK(t.role(e(1) | e(3)).is_son());
        CHECK(std::get<Son>(t.role(e(1) | e(3)).kind).father == 0);
    }

    TEST_CASE("fixture with a heavy distance-two codeword")
    {
        const int n = 11;
        const Code c = Code::from_membership(Dimension(n), oracle::heavy_v_fixture(n));
        REQUIRE(is_locating_dominating(c));
        const Taxonomy t(c);
        check_taxonomy(t);
        REQUIRE(t.sparse_fathers().size() == 1);
        const WordIndex v = e(2) | e(n), a = e(2) | e(3) | e(n);
        CHECK(t.role(a).father_degree() == n - 2);
        int heavy = 0;
        for (int i = 1; i <= n; ++i)
            heavy += t.role(v ^ e(i)).father_degree() == n - 2;
        CHECK(heavy == 1);
        CHECK(t.role(e(2) | e(n) | e(5)).is_son());
        CHECK(std::get<Son>(t.role(e(2) | e(n) | e(5)).kind).father == a);
    }

    TEST_CASE("special codewords are impossible for n <= 3")
    {
        for (int n = 1; n <= 3; ++n) {
            const std::uint64_t words = std::uint64_t{1} << n;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << words); ++mask) {
                std::vector<std::uint8_t> m(words);
                for (WordIndex w = 0; w < words; ++w)
                    m[w] = mask >> w & 1U;
                const Code c = Code::from_membership(Dimension(n), m);
                if (!is_locating_dominating(c))
                    continue;
                const Taxonomy t(c);
                CHECK(t.counts().special_codewords == 0);
                check_taxonomy(t);
            }
        }
    }
}
