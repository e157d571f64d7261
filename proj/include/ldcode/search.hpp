#pragma once

// Exact minimum locating-dominating codes for tiny n, and heuristic
// constructions that produce irreducible codes for larger n.

#include "ldcode/code.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace ldcode {

enum class ProofKind { exhaustive, branch_and_bound, heuristic_only };

const char* proof_name(ProofKind p);

struct SearchResult {
    int n = 0;
    std::size_t size = 0;
    Code code;
    ProofKind proof = ProofKind::heuristic_only;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{};
};

inline constexpr int kMaxExactDimension = 5;

/// Smallest locating-dominating code in F^n, certified by branch and bound
/// from the best closed-form lower bound upwards. Requires n <= 5.
SearchResult exact_minimum(int n);

/// Is there a locating-dominating code of size <= k? Returns one if so.
/// Exposed for tests that need the refutation of k = minimum - 1.
std::optional<Code> find_code_of_size_at_most(int n, std::size_t k, std::uint64_t* nodes = nullptr);

/// Locating-dominating code with O(n^2) removal checks. Removing w only changes
/// the I-sets of N[w], and two non-codewords with the same nonempty I-set both
/// lie in N[c] for any codeword c of that set, so only those pairs are rechecked.
class IncrementalLdState {
public:
    /// Throws std::invalid_argument if code is not locating-dominating.
    explicit IncrementalLdState(const Code& code);

    [[nodiscard]] bool can_remove(WordIndex w) const;
    void remove(WordIndex w);
    [[nodiscard]] bool contains(WordIndex w) const { return member_[w] != 0; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] Code code() const;

private:
    [[nodiscard]] bool same_iset_after(WordIndex x, WordIndex y, WordIndex removed) const;

    Dimension dim_;
    std::vector<std::uint8_t> member_;
    std::vector<std::uint8_t> card_;
    std::vector<std::uint64_t> print_;
    std::vector<std::uint64_t> word_hash_;
    std::size_t size_ = 0;
};

/// Starts from F^n and drops codewords in a seeded random order while the code
/// stays locating-dominating. The result is irreducible. Requires n <= 20.
Code greedy_reduce(int n, std::uint64_t seed);

/// Swap-based descent: 1-for-1 swaps (kept when still LD) followed by removal
/// sweeps, and 2-for-1 replacements. Never returns a larger code.
Code local_improve(const Code& code, std::size_t budget, std::uint64_t seed);

/// Best of greedy_reduce + local_improve over seeds base_seed .. base_seed+seeds-1.
SearchResult heuristic_minimum(int n, int seeds, std::uint64_t base_seed, std::size_t budget);

}  // namespace ldcode
