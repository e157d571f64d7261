#include "ldcode/share.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ldcode {

namespace {

Rational half(int n) { return Rational(n, 2); }

Rational space_total(Dimension dim) { return Rational(static_cast<std::int64_t>(dim.space_size())); }

std::string word_text(WordIndex c, int n) { return bitstring(c, n); }

void require_stage(const ShareLedger& ledger, Stage expected, const char* rule)
{
    if (ledger.stage() != expected)
        throw std::logic_error(std::string(rule) + " needs a ledger at stage " + stage_name(expected) + ", got " +
                               stage_name(ledger.stage()));
}

void require_dimension(int n, int minimum, const char* what)
{
    if (n < minimum)
        throw UnsupportedDimension(std::string(what) + " is defined for n >= " + std::to_string(minimum) + ", got n = " +
                                   std::to_string(n));
}

}  // namespace

const char* stage_name(Stage s)
{
    switch (s) {
        case Stage::raw:
            return "raw";
        case Stage::after_rule1:
            return "after_rule1";
        case Stage::after_rule2:
            return "after_rule2";
        case Stage::after_rule3:
            return "after_rule3";
    }
    return "?";
}

ShareLedger::ShareLedger(const Code& code, std::vector<Rational> shares)
    : dim_(code.dim()), codewords_(code.words()), shares_(std::move(shares))
{
    if (shares_.size() != codewords_.size())
        throw std::invalid_argument("ledger needs one share per codeword");
}

std::size_t ShareLedger::slot(WordIndex c) const
{
    const auto it = std::lower_bound(codewords_.begin(), codewords_.end(), c);
    if (it == codewords_.end() || *it != c)
        throw std::out_of_range("no share recorded for word " + word_text(c, dim_.n()));
    return static_cast<std::size_t>(it - codewords_.begin());
}

const Rational& ShareLedger::share(WordIndex c) const { return shares_[slot(c)]; }

Rational ShareLedger::total() const
{
    Rational sum;
    for (const Rational& s : shares_)
        sum += s;
    return sum;
}

std::pair<Rational, WordIndex> ShareLedger::max_share() const
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < shares_.size(); ++i)
        if (shares_[i] > shares_[best])
            best = i;
    return {shares_[best], codewords_[best]};
}

void ShareLedger::apply(RuleApplication application)
{
    Rational net;
    for (const auto& [c, delta] : application.amounts)
        net += delta;
    if (net != Rational(0))
        throw StructuralViolation("rule " + std::to_string(application.rule) + " application at " +
                                      word_text(application.pivot_father, dim_.n()) + " does not conserve share (net " +
                                      net.str() + ")",
                                  application.pivot_father);
    for (const auto& [c, delta] : application.amounts)
        shares_[slot(c)] += delta;
    if (const Rational t = total(); t != space_total(dim_))
        throw StructuralViolation("total share " + t.str() + " differs from 2^n after rule " +
                                      std::to_string(application.rule) + " at " +
                                      word_text(application.pivot_father, dim_.n()),
                                  application.pivot_father);
    trace_.push_back(std::move(application));
}

void ShareLedger::advance(Stage next)
{
    if (static_cast<int>(next) != static_cast<int>(stage_) + 1)
        throw std::logic_error(std::string("ledger cannot move from ") + stage_name(stage_) + " to " + stage_name(next));
    stage_ = next;
}

ShareLedger raw_shares(const ISetIndex& index)
{
    const int n = index.n();
    if (const Verdict v = check_dominating(index); !v.holds())
        throw NotDominating("shares need a dominating code: " + v.describe(index));

    // Every I-set size divides lcm(1..n+1), which fits in 64 bits for n <= 30.
    std::int64_t lcm = 1;
    for (int k = 2; k <= n + 1; ++k)
        lcm = std::lcm(lcm, static_cast<std::int64_t>(k));

    const Code& code = index.code();
    std::vector<Rational> shares;
    shares.reserve(code.size());
    for (WordIndex c : code.words()) {
        std::int64_t numerator = 0;
        for_each_closed_neighbor(c, n, [&](WordIndex v) { numerator += lcm / index.cardinality(v); });
        shares.emplace_back(numerator, lcm);
    }
    return ShareLedger(code, std::move(shares));
}

ShareLedger raw_shares(const Code& code) { return raw_shares(ISetIndex(code)); }

Rational rule1_share_cap(int n)
{
    require_dimension(n, 10, "the Rule 1 cap");
    return half(n) + 1;
}

Rational codeword_share_cap(const CodewordProfile& profile, int n)
{
    require_dimension(n, 10, "the per-codeword share cap");
    if (profile.is_special)
        return half(n) + 1 + Rational(1, n - 1);
    if (n >= 13)
        return half(n) + 1 + Rational(1, n * n - 5 * n) - Rational(2, 3 * n);
    return half(n) + 1;
}

Rational final_share_cap(int n)
{
    require_dimension(n, 11, "the final share cap");
    if (n <= 12)
        return half(n) + Rational(1, 2) + Rational(n - 1, 3 * (n - 4));
    return half(n) + 1 + Rational(1, n * n - 5 * n) - Rational(2, 3 * n);
}

Rational rule2_trigger(int n)
{
    require_dimension(n, 11, "Rule 2");
    return half(n) + Rational(1, 3) + Rational(1, n - 5);
}

Rational rule2_amount(int n)
{
    require_dimension(n, 11, "Rule 2");
    return (Rational(1, 6) + Rational(1, n - 2) - Rational(1, n - 5)) / Rational(n - 3);
}

ShareLedger apply_rule1(ShareLedger ledger, const Taxonomy& taxonomy)
{
    require_stage(ledger, Stage::raw, "Rule 1");
    const int n = taxonomy.n();
    require_dimension(n, 10, "Rule 1");
    const ISetIndex& index = taxonomy.index();

    auto special_fathers_near = [&](WordIndex c) {
        int count = 0;
        for (int i = 0; i < n; ++i)
            count += taxonomy.role(c ^ (WordIndex{1} << i)).is_special_father ? 1 : 0;
        return count;
    };

    std::set<WordIndex> participated;
    const std::uint64_t total = taxonomy.code().dim().space_size();
    for (std::uint64_t x = 0; x < total; ++x) {
        const auto u = static_cast<WordIndex>(x);
        if (!taxonomy.role(u).is_special_father)
            continue;
        std::vector<WordIndex> averaged;
        for (WordIndex c : index.members(u))
            if (special_fathers_near(c) == 1)
                averaged.push_back(c);
        if (averaged.empty())
            throw StructuralViolation("special father " + word_text(u, n) + " has no codeword to average over", u);

        Rational sum;
        for (WordIndex c : averaged) {
            if (!participated.insert(c).second)
                throw MultipleParticipation("codeword " + word_text(c, n) + " takes part in two Rule 1 averagings", c);
            sum += ledger.share(c);
        }
        const Rational mean = sum / Rational(static_cast<std::int64_t>(averaged.size()));
        RuleApplication app{1, u, averaged, {}};
        for (WordIndex c : averaged)
            app.amounts.emplace_back(c, mean - ledger.share(c));
        ledger.apply(std::move(app));
    }
    ledger.advance(Stage::after_rule1);
    return ledger;
}

ShareLedger apply_rule2(ShareLedger ledger, const Taxonomy& taxonomy)
{
    require_stage(ledger, Stage::after_rule1, "Rule 2");
    const int n = taxonomy.n();
    require_dimension(n, 11, "Rule 2");
    const ISetIndex& index = taxonomy.index();
    const Rational trigger = rule2_trigger(n);
    const Rational amount = rule2_amount(n);
    const ShareLedger after_rule1 = ledger;

    for (const SparseFather& sf : taxonomy.sparse_fathers()) {
        const WordIndex v = sf.v;
        const Rational& sv = after_rule1.share(v);
        if (sv <= trigger)
            continue;

        std::vector<WordIndex> fathers;
        for (int i = 0; i < n; ++i) {
            const WordIndex x = v ^ (WordIndex{1} << i);
            if (taxonomy.role(x).father_degree() == n - 2)
                fathers.push_back(x);
        }
        if (fathers.size() != 1)
            throw StructuralViolation("codeword " + word_text(v, n) + " next to sparse father " +
                                          word_text(sf.father, n) + " has share " + sv.str() +
                                          " above the Rule 2 trigger but " + std::to_string(fathers.size()) +
                                          " F_{n-2}-fathers in N(v)",
                                      v);
        const WordIndex a = fathers.front();
        std::vector<WordIndex> recipients;
        for (WordIndex c : index.members(a))
            if (c != v)
                recipients.push_back(c);
        if (static_cast<int>(recipients.size()) != n - 3)
            throw StructuralViolation("F_{n-2}-father " + word_text(a, n) + " has " +
                                          std::to_string(recipients.size()) + " codewords besides v, expected n-3",
                                      a);

        RuleApplication app{2, a, {}, {}};
        app.affected.push_back(v);
        app.amounts.emplace_back(v, -(amount * Rational(n - 3)));
        for (WordIndex c : recipients) {
            app.affected.push_back(c);
            app.amounts.emplace_back(c, amount);
        }
        ledger.apply(std::move(app));
    }

    // Neither Rule 1 nor Rule 2 may have routed share into any such v.
    std::set<WordIndex> sparse_v;
    for (const SparseFather& sf : taxonomy.sparse_fathers())
        sparse_v.insert(sf.v);
    for (const RuleApplication& app : ledger.trace()) {
        if (app.rule > 2)
            continue;
        for (const auto& [c, delta] : app.amounts)
            if (delta > Rational(0) && sparse_v.count(c))
                throw ShareRoutedToSparseV("rule " + std::to_string(app.rule) + " at " +
                                               word_text(app.pivot_father, n) + " moves " + delta.str() +
                                               " into codeword " + word_text(c, n) +
                                               " at distance two from a sparse father",
                                           c);
    }

    ledger.advance(Stage::after_rule2);
    return ledger;
}

ShareLedger apply_rule3(ShareLedger ledger, const Taxonomy& taxonomy)
{
    require_stage(ledger, Stage::after_rule2, "Rule 3");
    const int n = taxonomy.n();
    require_dimension(n, 11, "Rule 3");

    std::set<WordIndex> participated;
    for (const SparseFather& sf : taxonomy.sparse_fathers()) {
        const auto group = i_set_r(taxonomy.code(), sf.father, 3);
        if (static_cast<int>(group.size()) != n)
            throw StructuralViolation("sparse father " + word_text(sf.father, n) + " has " +
                                          std::to_string(group.size()) + " codewords within distance three",
                                      sf.father);
        Rational sum;
        for (WordIndex c : group) {
            if (!participated.insert(c).second)
                throw MultipleParticipation("codeword " + word_text(c, n) + " lies within distance three of two sparse fathers",
                                            c);
            sum += ledger.share(c);
        }
        const Rational mean = sum / Rational(n);
        RuleApplication app{3, sf.father, group, {}};
        for (WordIndex c : group)
            app.amounts.emplace_back(c, mean - ledger.share(c));
        ledger.apply(std::move(app));
    }
    ledger.advance(Stage::after_rule3);
    return ledger;
}

ShareLedger replay(const ShareLedger& raw, const std::vector<RuleApplication>& trace)
{
    if (raw.stage() != Stage::raw)
        throw std::logic_error("replay starts from a raw ledger");
    ShareLedger ledger = raw;
    for (const RuleApplication& app : trace) {
        while (static_cast<int>(ledger.stage()) < app.rule - 1)
            ledger.advance(static_cast<Stage>(static_cast<int>(ledger.stage()) + 1));
        ledger.apply(app);
    }
    return ledger;
}

bool DischargingReport::ok() const
{
    return violations.empty() && std::all_of(cap_checks.begin(), cap_checks.end(), [](const CapCheck& c) { return c.holds; });
}

const StageSummary* DischargingReport::stage(Stage s) const
{
    for (const StageSummary& st : stages)
        if (st.stage == s)
            return &st;
    return nullptr;
}

namespace {

StageSummary summarize(const ShareLedger& ledger)
{
    auto [max_share, argmax] = ledger.max_share();
    return StageSummary{ledger.stage(), ledger.total(), std::move(max_share), argmax};
}

/// Checks share <= cap(c) for every codeword and records the worst margin.
template <typename CapFn>
CapCheck check_caps(const std::string& name, const ShareLedger& ledger, CapFn&& cap_of)
{
    CapCheck check;
    check.name = name;
    std::optional<Rational> worst_margin;
    const auto& words = ledger.codewords();
    const auto& shares = ledger.shares();
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Rational cap = cap_of(words[i]);
        const Rational margin = shares[i] - cap;
        if (!worst_margin || margin > *worst_margin) {
            worst_margin = margin;
            check.worst_codeword = words[i];
            check.worst_share = shares[i];
            check.cap = cap;
        }
    }
    check.holds = !worst_margin || *worst_margin <= Rational(0);
    return check;
}

void record(DischargingReport& report, CapCheck check, Stage stage, int n)
{
    if (!check.holds)
        report.violations.push_back(Violation{stage,
                                              check.name + ": share " + check.worst_share.str() + " of " +
                                                  word_text(check.worst_codeword, n) + " exceeds cap " + check.cap.str(),
                                              check.worst_codeword});
    report.cap_checks.push_back(std::move(check));
}

}  // namespace

DischargingReport analyze_shares(const Taxonomy& taxonomy, Stage last_stage)
{
    const int n = taxonomy.n();
    DischargingReport report;
    report.n = n;
    const Rational expected_total = space_total(taxonomy.code().dim());

    auto close_stage = [&](const ShareLedger& ledger) {
        report.stages.push_back(summarize(ledger));
        if (report.stages.back().total != expected_total)
            report.violations.push_back(Violation{ledger.stage(),
                                                  "total share " + report.stages.back().total.str() + " differs from 2^n",
                                                  std::nullopt});
    };

    ShareLedger ledger = raw_shares(taxonomy.index());
    close_stage(ledger);
    if (n >= 10)
        record(report,
               check_caps("raw_codeword_cap", ledger,
                          [&](WordIndex c) { return codeword_share_cap(taxonomy.profile(c), n); }),
               Stage::raw, n);

    const Stage reachable = n >= 11 ? Stage::after_rule3 : n >= 10 ? Stage::after_rule1 : Stage::raw;
    const Stage stop = std::min(last_stage, reachable);

    Stage current = Stage::raw;
    try {
        if (stop >= Stage::after_rule1) {
            current = Stage::after_rule1;
            ledger = apply_rule1(std::move(ledger), taxonomy);
            close_stage(ledger);
            const Rational cap = rule1_share_cap(n);
            record(report, check_caps("rule1_cap", ledger, [&](WordIndex) { return cap; }), Stage::after_rule1, n);
        }
        if (stop >= Stage::after_rule2) {
            current = Stage::after_rule2;
            ledger = apply_rule2(std::move(ledger), taxonomy);
            close_stage(ledger);
        }
        if (stop >= Stage::after_rule3) {
            current = Stage::after_rule3;
            ledger = apply_rule3(std::move(ledger), taxonomy);
            close_stage(ledger);
            const Rational cap = final_share_cap(n);
            record(report, check_caps("final_cap", ledger, [&](WordIndex) { return cap; }), Stage::after_rule3, n);
        }
    } catch (const StructuralViolation& e) {
        report.violations.push_back(Violation{current, e.what(), e.word()});
    }

    report.trace_length = ledger.trace().size();
    report.final_ledger = std::move(ledger);
    return report;
}

DischargingReport verify_discharging(const Taxonomy& taxonomy)
{
    require_dimension(taxonomy.n(), 11, "the discharging pipeline");
    return analyze_shares(taxonomy, Stage::after_rule3);
}

DischargingReport verify_discharging(const Code& code)
{
    require_dimension(code.n(), 11, "the discharging pipeline");
    std::optional<Taxonomy> taxonomy;
    try {
        taxonomy.emplace(code);
    } catch (const NotLocatingDominating&) {
        throw;
    } catch (const StructuralViolation& e) {
        DischargingReport report;
        report.n = code.n();
        report.violations.push_back(Violation{Stage::raw, e.what(), e.word()});
        return report;
    }
    return verify_discharging(*taxonomy);
}

InequalityReport verify_proof_inequalities(int n_from, int n_to)
{
    InequalityReport report;
    auto expect = [&](bool holds, const std::string& what) {
        ++report.checks;
        if (!holds) {
            report.ok = false;
            report.failures.push_back(what);
        }
    };

    for (int n = n_from; n <= n_to; ++n) {
        const std::string at = " at n=" + std::to_string(n);
        const Rational h = half(n);
        const Rational claim2 = h + 1;
        const Rational lower_than_claim2 = h + 1 - Rational(1, n - 1);

        // Merging two father contributions towards extreme degrees raises them.
        for (int i1 = 2; i1 <= n + 1; ++i1)
            for (int i2 = 2; i2 <= i1; ++i2)
                expect(Rational(1, i1) + Rational(1, i2) < Rational(1, i1 + 1) + Rational(1, i2 - 1),
                       "1/i1+1/i2 < 1/(i1+1)+1/(i2-1) for i1=" + std::to_string(i1) + ", i2=" + std::to_string(i2) + at);

        if (n >= 10) {
            // Types 1) and 2), and type 3) with four or more fathers.
            expect(h + Rational(5, 6) < lower_than_claim2, "n/2+5/6 < n/2+1-1/(n-1)" + at);
            // Special codeword averaging with the coupled codeword of I(u).
            for (int k = 1; k <= n - 1; ++k)
                expect(Rational(k - 1) * (h + 1 + Rational(1, n - 1)) + h + Rational(1, n - 1) <= Rational(k) * claim2,
                       "Rule 1 averaging over " + std::to_string(k) + " codewords stays within n/2+1" + at);
        }
        if (n >= 10 && n <= 12)
            expect(h + Rational(1, 2) + Rational(n - 1, 3 * (n - 4)) <= claim2,
                   "n/2+1/2+(n-1)/(3(n-4)) <= n/2+1 (n-3 sons case)" + at);

        if (n >= 11) {
            const Rational claim3 = h + 1 + Rational(1, n * n - 5 * n) - Rational(2, 3 * n);
            const Rational cap = final_share_cap(n);
            const Rational amount = rule2_amount(n);
            const Rational trigger = rule2_trigger(n);

            expect(h + Rational(11, 12) <= claim3, "n/2+11/12 <= n/2+1+1/(n^2-5n)-2/(3n)" + at);
            for (int k = 1; k <= n - 3; ++k)
                expect(Rational(k) * amount < Rational(1, 6),
                       "h*(1/6+1/(n-2)-1/(n-5))/(n-3) < 1/6 for h=" + std::to_string(k) + at);
            // Rule 2 takes v from its largest possible share down to the trigger.
            expect(Rational(2) + Rational(1, n - 2) + Rational(n - 3, 2) - Rational(n - 3) * amount == trigger,
                   "2+1/(n-2)+(n-3)/2-(n-3)*amount = n/2+1/3+1/(n-5)" + at);
            // Recipient without a special father (subcase A) and with several F_{n-2}-fathers (subcase B).
            expect(h + Rational(5, 6) + Rational(1, n - 2) + amount <= cap,
                   "n/2+5/6+1/(n-2)+amount <= final cap" + at);
            expect(h + Rational(2, 3) + Rational(2, n - 2) < h + Rational(5, 6) + Rational(1, n - 2),
                   "n/2+2/3+2/(n-2) < n/2+5/6+1/(n-2)" + at);
            // Recipient adjacent to exactly one special father (subcase C).
            for (int k = 1; k <= n - 3; ++k) {
                const Rational sc = h + Rational(1, n - 1) + Rational(2, 3) + Rational(k) * amount;
                expect(n <= 12 ? sc <= cap : sc <= h + Rational(5, 6) + Rational(1, n - 1),
                       "subcase C bound for h=" + std::to_string(k) + at);
            }
            if (n >= 13)
                expect(h + Rational(5, 6) + Rational(1, n - 1) <= claim3, "n/2+5/6+1/(n-1) <= claim 3 cap" + at);
            // v with two or three fathers stays under the trigger.
            expect(h + Rational(1, 6) + Rational(1, n - 8) <= trigger, "n/2+1/6+1/(n-8) <= n/2+1/3+1/(n-5)" + at);
            expect(Rational(1, 3) + Rational(1, n - 5) + Rational(2) + Rational(n - 4, 2) <= trigger,
                   "two-father share of v <= trigger" + at);
            // Rule 3 averaging identity.
            expect(Rational(n - 1) * claim2 + trigger == Rational(n) * claim3,
                   "(n-1)(n/2+1)+n/2+1/3+1/(n-5) = n*(claim 3 cap)" + at);
            expect(cap > lower_than_claim2, "final cap > n/2+1-1/(n-1)" + at);
            if (n <= 12)
                expect(claim3 < cap, "claim 3 cap < n/2+1/2+(n-1)/(3(n-4))" + at);
        }
        if (n >= 13) {
            const Rational claim3 = h + 1 + Rational(1, n * n - 5 * n) - Rational(2, 3 * n);
            expect(lower_than_claim2 <= claim3, "n/2+1-1/(n-1) <= n/2+1+1/(n^2-5n)-2/(3n)" + at);
            expect(h + Rational(1, 2) + Rational(n - 1, 3 * (n - 4)) <= claim3,
                   "n/2+1/2+(n-1)/(3(n-4)) <= claim 3 cap (n-3 sons case)" + at);
        }
    }
    return report;
}

}  // namespace ldcode
