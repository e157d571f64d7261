#include "ldcode/search.hpp"

#include "ldcode/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ldcode {

namespace {

std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Branch and bound over words in index order, with words 0..2^n-1 decided in
// turn. A word is settled once its largest neighbour is decided; its I-set is
// then final and must be nonempty, and distinct from every settled
// non-codeword if it is a non-codeword.
//
// Symmetry: translate so a codeword of largest |I| sits at 0, then permute
// coordinates so the codewords among e_1..e_n form a prefix. Hence 0 is in C,
// e_j in C implies e_{j-1} in C, and no codeword has |I| above |I(0)|.
class BranchAndBound {
public:
    BranchAndBound(int n, std::size_t k) : n_(n), size_(WordIndex{1} << n), k_(k), nbr_(size_), settles_(size_)
    {
        for (WordIndex w = 0; w < size_; ++w) {
            WordIndex top = w;
            for_each_closed_neighbor(w, n_, [&](WordIndex y) {
                nbr_[w] |= std::uint32_t{1} << y;
                top = std::max(top, y);
            });
            settles_[top].push_back(w);
        }
    }

    std::optional<Code> run()
    {
        if (!dfs(0))
            return std::nullopt;
        std::vector<WordIndex> words;
        for (WordIndex w = 0; w < size_; ++w)
            if (in_ >> w & 1U)
                words.push_back(w);
        return Code::from_words(Dimension(n_), words);
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool dfs(WordIndex i)
    {
        ++nodes_;
        if (i == size_)
            return true;
        const bool forced_in = i == 0;
        const bool forced_out = (i >= 2 && std::has_single_bit(i) && !(in_ >> (i >> 1) & 1U)) || count_ == k_;
        for (int choice = 1; choice >= 0; --choice) {
            if (choice == 1 && forced_out)
                continue;
            if (choice == 0 && forced_in)
                continue;
            if (try_choice(i, choice == 1))
                return true;
        }
        return false;
    }

    bool try_choice(WordIndex i, bool include)
    {
        if (include) {
            in_ |= std::uint32_t{1} << i;
            ++count_;
        }
        const std::size_t saved_sets = nc_sets_.size();
        const int saved_m0 = m0_;
        bool ok = settle(i) && coverable();
        if (ok && dfs(i + 1))
            return true;
        nc_sets_.resize(saved_sets);
        m0_ = saved_m0;
        if (include) {
            in_ &= ~(std::uint32_t{1} << i);
            --count_;
        }
        return false;
    }

    bool settle(WordIndex i)
    {
        for (WordIndex w : settles_[i]) {
            const std::uint32_t set = in_ & nbr_[w];
            if (set == 0)
                return false;
            if (in_ >> w & 1U) {
                const int c = std::popcount(set);
                if (w == 0)
                    m0_ = c;
                else if (m0_ >= 0 && c > m0_)
                    return false;
            } else {
                if (std::find(nc_sets_.begin(), nc_sets_.end(), set) != nc_sets_.end())
                    return false;
                nc_sets_.push_back(set);
            }
        }
        return true;
    }

    // Each further codeword dominates at most n+1 words.
    [[nodiscard]] bool coverable() const
    {
        std::size_t undominated = 0;
        for (WordIndex w = 0; w < size_; ++w)
            if ((in_ & nbr_[w]) == 0)
                ++undominated;
        return undominated <= (k_ - count_) * static_cast<std::size_t>(n_ + 1);
    }

    int n_;
    WordIndex size_;
    std::size_t k_;
    std::vector<std::uint32_t> nbr_;
    std::vector<std::vector<WordIndex>> settles_;
    std::uint32_t in_ = 0;
    std::size_t count_ = 0;
    int m0_ = -1;
    std::vector<std::uint32_t> nc_sets_;
    std::uint64_t nodes_ = 0;
};

// Every subset of F^n, for n <= 3.
std::pair<Code, std::uint64_t> smallest_by_enumeration(int n)
{
    const Dimension dim(n);
    const std::uint64_t words = dim.space_size();
    std::optional<Code> best;
    std::uint64_t visited = 0;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << words); ++subset) {
        ++visited;
        if (best && static_cast<std::size_t>(std::popcount(subset)) >= best->size())
            continue;
        std::vector<WordIndex> list;
        for (WordIndex w = 0; w < words; ++w)
            if (subset >> w & 1U)
                list.push_back(w);
        Code c = Code::from_words(dim, list);
        if (is_locating_dominating(c))
            best = std::move(c);
    }
    return {*best, visited};
}

Code sweep_removals(const Code& code, std::mt19937_64& rng)
{
    IncrementalLdState state(code);
    std::vector<WordIndex> order = code.words();
    std::shuffle(order.begin(), order.end(), rng);
    for (WordIndex w : order)
        if (state.can_remove(w))
            state.remove(w);
    return state.code();
}

}  // namespace

const char* proof_name(ProofKind p)
{
    switch (p) {
    case ProofKind::exhaustive: return "Exhaustive";
    case ProofKind::branch_and_bound: return "BranchAndBound";
    case ProofKind::heuristic_only: return "HeuristicOnly";
    }
    return "unknown";
}

std::optional<Code> find_code_of_size_at_most(int n, std::size_t k, std::uint64_t* nodes)
{
    if (n < 1 || n > kMaxExactDimension)
        throw UnsupportedDimension("exact search supports 1 <= n <= " + std::to_string(kMaxExactDimension) +
                                   ", got n = " + std::to_string(n));
    if (k == 0) {
        if (nodes)
            *nodes = 0;
        return std::nullopt;
    }
    BranchAndBound bb(n, k);
    auto found = bb.run();
    if (nodes)
        *nodes = bb.nodes();
    return found;
}

SearchResult exact_minimum(int n)
{
    if (n < 1 || n > kMaxExactDimension)
        throw UnsupportedDimension("exact search supports 1 <= n <= " + std::to_string(kMaxExactDimension) +
                                   ", got n = " + std::to_string(n));
    const auto start = std::chrono::steady_clock::now();
    std::optional<Code> code;
    std::uint64_t explored = 0;
    ProofKind proof = ProofKind::branch_and_bound;
    if (n <= 3) {
        auto [smallest, visited] = smallest_by_enumeration(n);
        code = std::move(smallest);
        explored = visited;
        proof = ProofKind::exhaustive;
    } else {
        for (auto k = static_cast<std::size_t>(best_lower_bound(n)); !code; ++k) {
            std::uint64_t nodes = 0;
            code = find_code_of_size_at_most(n, k, &nodes);
            explored += nodes;
        }
    }
    if (!is_locating_dominating(*code))
        throw std::logic_error("exact search returned a code that is not locating-dominating");
    const std::size_t size = code->size();
    return SearchResult{n, size, std::move(*code), proof, explored, std::chrono::steady_clock::now() - start};
}

IncrementalLdState::IncrementalLdState(const Code& code)
    : dim_(code.dim()),
      member_(code.membership()),
      card_(dim_.space_size(), 0),
      print_(dim_.space_size(), 0),
      word_hash_(dim_.space_size()),
      size_(code.size())
{
    if (!is_locating_dominating(code))
        throw std::invalid_argument("incremental state needs a locating-dominating code");
    const int n = dim_.n();
    for (WordIndex w = 0; w < word_hash_.size(); ++w)
        word_hash_[w] = mix64(w);
    for (WordIndex c : code.words())
        for_each_closed_neighbor(c, n, [&](WordIndex x) {
            ++card_[x];
            print_[x] ^= word_hash_[c];
        });
}

bool IncrementalLdState::same_iset_after(WordIndex x, WordIndex y, WordIndex removed) const
{
    const int n = dim_.n();
    std::array<WordIndex, 32> a{}, b{};
    std::size_t na = 0, nb = 0;
    for_each_closed_neighbor(x, n, [&](WordIndex z) {
        if (member_[z] && z != removed)
            a[na++] = z;
    });
    for_each_closed_neighbor(y, n, [&](WordIndex z) {
        if (member_[z] && z != removed)
            b[nb++] = z;
    });
    if (na != nb)
        return false;
    std::sort(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(na));
    std::sort(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(nb));
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(na), b.begin());
}

bool IncrementalLdState::can_remove(WordIndex w) const
{
    if (w >= member_.size() || !member_[w] || size_ == 1)
        return false;
    const int n = dim_.n();
    bool ok = true;
    for_each_closed_neighbor(w, n, [&](WordIndex x) {
        if (card_[x] == 1)
            ok = false;
    });
    if (!ok)
        return false;

    auto near = [&](WordIndex y) { return raw_distance(y, w) <= 1; };
    auto card_after = [&](WordIndex y) { return card_[y] - (near(y) ? 1 : 0); };
    auto print_after = [&](WordIndex y) { return print_[y] ^ (near(y) ? word_hash_[w] : 0); };
    auto member_after = [&](WordIndex y) { return member_[y] && y != w; };

    for (int i = -1; i < n && ok; ++i) {
        const WordIndex x = i < 0 ? w : w ^ (WordIndex{1} << i);
        if (member_after(x))
            continue;
        WordIndex c0 = x;
        for_each_closed_neighbor(x, n, [&](WordIndex z) {
            if (member_after(z))
                c0 = z;
        });
        const int cx = card_after(x);
        const std::uint64_t px = print_after(x);
        for_each_closed_neighbor(c0, n, [&](WordIndex y) {
            if (ok && y != x && !member_after(y) && card_after(y) == cx && print_after(y) == px &&
                same_iset_after(x, y, w))
                ok = false;
        });
    }
    return ok;
}

void IncrementalLdState::remove(WordIndex w)
{
    if (!can_remove(w))
        throw std::logic_error("removing " + bitstring(w, dim_.n()) + " breaks the locating-dominating property");
    for_each_closed_neighbor(w, dim_.n(), [&](WordIndex x) {
        --card_[x];
        print_[x] ^= word_hash_[w];
    });
    member_[w] = 0;
    --size_;
}

Code IncrementalLdState::code() const { return Code::from_membership(dim_, member_); }

Code greedy_reduce(int n, std::uint64_t seed)
{
    if (n < 1 || n > 20)
        throw UnsupportedDimension("greedy reduction supports 1 <= n <= 20, got n = " + std::to_string(n));
    const Dimension dim(n);
    std::mt19937_64 rng(seed);
    return sweep_removals(Code::full(dim), rng);
}

Code local_improve(const Code& code, std::size_t budget, std::uint64_t seed)
{
    if (budget == 0)
        return code;
    if (!is_locating_dominating(code))
        throw std::invalid_argument("local improvement needs a locating-dominating code");
    const int n = code.n();
    std::mt19937_64 rng(seed);
    Code current = sweep_removals(code, rng);
    std::uniform_int_distribution<int> coord(0, n - 1);

    for (std::size_t step = 0; step < budget; ++step) {
        const auto& words = current.words();
        if (words.size() <= 1)
            break;
        const WordIndex c = words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
        std::optional<Code> candidate;
        if (rng() % 2 == 0) {
            WordIndex x = c ^ (WordIndex{1} << coord(rng));
            if (n >= 2 && rng() % 2 == 0)
                x ^= WordIndex{1} << coord(rng);
            if (x == c || current.contains(x))
                continue;
            candidate = current.without(c).with(x);
        } else {
            std::vector<WordIndex> close;
            for (const Word& y : ball(Word(c, current.dim()), std::min(2, n)))
                if (y.index() != c && current.contains(y.index()))
                    close.push_back(y.index());
            if (close.empty())
                continue;
            const WordIndex c2 = close[std::uniform_int_distribution<std::size_t>(0, close.size() - 1)(rng)];
            std::vector<WordIndex> spots;
            for (WordIndex centre : {c, c2})
                for_each_closed_neighbor(centre, n, [&](WordIndex y) {
                    if (!current.contains(y))
                        spots.push_back(y);
                });
            if (spots.empty() || current.size() <= 2)
                continue;
            const WordIndex x = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
            candidate = current.without(c).without(c2).with(x);
        }
        if (is_locating_dominating(*candidate))
            current = sweep_removals(*candidate, rng);
    }
    return current;
}

SearchResult heuristic_minimum(int n, int seeds, std::uint64_t base_seed, std::size_t budget)
{
    if (seeds < 1)
        throw std::invalid_argument("at least one seed is needed");
    const auto start = std::chrono::steady_clock::now();
    std::optional<Code> best;
    for (int s = 0; s < seeds; ++s) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(s);
        Code c = local_improve(greedy_reduce(n, seed), budget, seed);
        if (!best || c.size() < best->size())
            best = std::move(c);
    }
    const std::size_t size = best->size();
    return SearchResult{n, size, std::move(*best), ProofKind::heuristic_only, static_cast<std::uint64_t>(seeds),
                        std::chrono::steady_clock::now() - start};
}

}  // namespace ldcode
