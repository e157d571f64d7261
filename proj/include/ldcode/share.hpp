#pragma once

// Shares of codewords and the discharging rules that redistribute them.
//
// The share of a codeword c is s(c) = sum over v in N[c] of 1/|I(v)|; over a
// dominating code the shares always total 2^n. Rule 1 averages shares around
// special fathers, Rule 2 moves share away from the codeword v next to a
// sparse father, and Rule 3 averages over I_3 of each sparse father. Each
// rule conserves the total exactly, and every move is kept in an audit trace.

#include "ldcode/classify.hpp"
#include "ldcode/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ldcode {

class NotDominating : public Error {
public:
    using Error::Error;
};

/// A codeword would take part in two averagings of the same rule.
class MultipleParticipation : public StructuralViolation {
public:
    using StructuralViolation::StructuralViolation;
};

/// Rule 1 or Rule 2 moved share into the distance-two codeword of a sparse father.
class ShareRoutedToSparseV : public StructuralViolation {
public:
    using StructuralViolation::StructuralViolation;
};

enum class Stage { raw, after_rule1, after_rule2, after_rule3 };

const char* stage_name(Stage s);

struct RuleApplication {
    int rule = 0;
    WordIndex pivot_father = 0;
    std::vector<WordIndex> affected;
    /// Per-codeword change; sums to zero.
    std::vector<std::pair<WordIndex, Rational>> amounts;
};

class ShareLedger {
public:
    ShareLedger(const Code& code, std::vector<Rational> shares);

    [[nodiscard]] Dimension dim() const noexcept { return dim_; }
    [[nodiscard]] Stage stage() const noexcept { return stage_; }
    [[nodiscard]] const std::vector<WordIndex>& codewords() const noexcept { return codewords_; }
    [[nodiscard]] const std::vector<Rational>& shares() const noexcept { return shares_; }
    [[nodiscard]] const Rational& share(WordIndex c) const;
    [[nodiscard]] const std::vector<RuleApplication>& trace() const noexcept { return trace_; }

    [[nodiscard]] Rational total() const;
    /// Largest share and the smallest codeword attaining it.
    [[nodiscard]] std::pair<Rational, WordIndex> max_share() const;

    /// Applies one rule application, checking that its deltas sum to zero and
    /// that the total stays 2^n. Used by the rules and by trace replay.
    void apply(RuleApplication application);
    /// Advances the stage; only raw -> rule1 -> rule2 -> rule3 is allowed.
    void advance(Stage next);

private:
    [[nodiscard]] std::size_t slot(WordIndex c) const;

    Dimension dim_;
    Stage stage_ = Stage::raw;
    std::vector<WordIndex> codewords_;
    std::vector<Rational> shares_;
    std::vector<RuleApplication> trace_;
};

/// Exact s(c) for every codeword. Throws NotDominating.
ShareLedger raw_shares(const ISetIndex& index);
ShareLedger raw_shares(const Code& code);

/// Tightest per-codeword cap that applies to this profile: n/2+1+1/(n-1) for
/// special codewords, n/2+1 otherwise, and n/2+1+1/(n^2-5n)-2/(3n) for
/// non-special codewords when n >= 13. Requires n >= 10.
Rational codeword_share_cap(const CodewordProfile& profile, int n);

/// Cap every share satisfies after all three rules: n/2+1/2+(n-1)/(3(n-4))
/// for n in {11,12}, n/2+1+1/(n^2-5n)-2/(3n) for n >= 13.
Rational final_share_cap(int n);
/// Cap after Rule 1, n/2+1. Requires n >= 10.
Rational rule1_share_cap(int n);
/// Share threshold above which Rule 2 fires, n/2+1/3+1/(n-5).
Rational rule2_trigger(int n);
/// Amount Rule 2 moves to each recipient, (1/6+1/(n-2)-1/(n-5))/(n-3).
Rational rule2_amount(int n);

ShareLedger apply_rule1(ShareLedger ledger, const Taxonomy& taxonomy);
ShareLedger apply_rule2(ShareLedger ledger, const Taxonomy& taxonomy);
ShareLedger apply_rule3(ShareLedger ledger, const Taxonomy& taxonomy);

/// Rebuilds a ledger by replaying a trace on top of a raw ledger.
ShareLedger replay(const ShareLedger& raw, const std::vector<RuleApplication>& trace);

struct StageSummary {
    Stage stage;
    Rational total;
    Rational max_share;
    WordIndex argmax;
};

struct CapCheck {
    std::string name;
    bool holds = true;
    /// Codeword with the largest share - cap margin.
    WordIndex worst_codeword = 0;
    Rational worst_share;
    Rational cap;
};

/// A falsification event: a cap or conservation failure, or a structural
/// assertion that fired inside a rule.
struct Violation {
    Stage stage;
    std::string what;
    std::optional<WordIndex> codeword;
};

struct DischargingReport {
    int n = 0;
    std::vector<StageSummary> stages;
    std::vector<CapCheck> cap_checks;
    std::vector<Violation> violations;
    std::size_t trace_length = 0;
    std::optional<ShareLedger> final_ledger;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] const StageSummary* stage(Stage s) const;
};

/// Runs raw shares and then the rules up to last_stage, checking conservation
/// at every application and the caps that apply for this n. Rules are only
/// run where they are defined (Rule 1 for n >= 10, Rules 2-3 for n >= 11).
DischargingReport analyze_shares(const Taxonomy& taxonomy, Stage last_stage = Stage::after_rule3);

/// The full pipeline for n >= 11. Throws UnsupportedDimension below that and
/// NotLocatingDominating for inputs outside the precondition.
DischargingReport verify_discharging(const Code& code);
DischargingReport verify_discharging(const Taxonomy& taxonomy);

struct InequalityReport {
    bool ok = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

/// Exact checks of the numeric inequalities the share caps rest on, for every
/// n in [n_from, n_to].
InequalityReport verify_proof_inequalities(int n_from, int n_to);

}  // namespace ldcode
