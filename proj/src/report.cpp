#include "ldcode/report.hpp"

#include <iomanip>
#include <sstream>

namespace ldcode {

namespace {

using nlohmann::json;

json optional_number(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::string cell(const std::optional<std::int64_t>& v, const char* absent)
{
    return v ? std::to_string(*v) : std::string(absent);
}

struct Column {
    const char* name;
    std::optional<std::int64_t> (*get)(const BoundReport&);
};

const std::vector<Column>& columns()
{
    static const std::vector<Column> cols{
        {"n", [](const BoundReport& r) -> std::optional<std::int64_t> { return r.n; }},
        {"slater", [](const BoundReport& r) -> std::optional<std::int64_t> { return r.slater; }},
        {"honkala", [](const BoundReport& r) -> std::optional<std::int64_t> { return r.honkala; }},
        {"rule1", [](const BoundReport& r) { return r.rule1; }},
        {"main", [](const BoundReport& r) { return r.main; }},
        {"best", [](const BoundReport& r) -> std::optional<std::int64_t> { return r.best; }},
        {"old", [](const BoundReport& r) { return r.table1_old; }},
        {"new", [](const BoundReport& r) { return r.table1_new; }},
        {"exact", [](const BoundReport& r) { return r.known_exact; }},
        {"upper", [](const BoundReport& r) { return r.reference_upper; }},
    };
    return cols;
}

json verdict_json(const Verdict& v, const ISetIndex& index)
{
    if (v.holds())
        return nullptr;
    const int n = index.n();
    json w{{"kind", v.kind == VerdictKind::undominated ? "undominated" : "collision"},
           {"first", bitstring(v.first, n)},
           {"description", v.describe(index)}};
    if (v.kind == VerdictKind::collision)
        w["second"] = bitstring(v.second, n);
    json members = json::array();
    for (WordIndex c : index.members(v.first))
        members.push_back(bitstring(c, n));
    w["iset"] = members;
    return w;
}

json not_applicable() { return "not applicable"; }

}  // namespace

json to_json(const BoundReport& r)
{
    return json{{"n", r.n},
                {"slater", r.slater},
                {"honkala", r.honkala},
                {"rule1", optional_number(r.rule1)},
                {"main", optional_number(r.main)},
                {"best", r.best},
                {"table1_old", optional_number(r.table1_old)},
                {"table1_new", optional_number(r.table1_new)},
                {"known_exact", optional_number(r.known_exact)},
                {"reference_upper", optional_number(r.reference_upper)}};
}

json to_json(const TaxonomyCounts& c)
{
    return json{{"typeI", c.type_i},
                {"couples", c.couples},
                {"sons", c.sons},
                {"fathers", c.fathers},
                {"orphans", c.orphans},
                {"special_codewords", c.special_codewords},
                {"special_fathers", c.special_fathers},
                {"sparse_fathers", c.sparse_fathers}};
}

json to_json(const CapCheck& check, int n)
{
    return json{{"cap_name", check.name},
                {"holds", check.holds},
                {"worst_codeword", bitstring(check.worst_codeword, n)},
                {"worst_share", check.worst_share.str()},
                {"cap", check.cap.str()}};
}

json to_json(const DischargingReport& report)
{
    const int n = report.n;
    json stages = json::object();
    for (Stage s : {Stage::raw, Stage::after_rule1, Stage::after_rule2, Stage::after_rule3}) {
        const StageSummary* st = report.stage(s);
        stages[stage_name(s)] = st ? json{{"max_share", st->max_share.str()},
                                          {"argmax", bitstring(st->argmax, n)},
                                          {"total", st->total.str()}}
                                   : not_applicable();
    }
    json caps = json::array();
    for (const CapCheck& c : report.cap_checks)
        caps.push_back(to_json(c, n));
    json violations = json::array();
    for (const Violation& v : report.violations)
        violations.push_back(json{{"stage", stage_name(v.stage)},
                                  {"what", v.what},
                                  {"codeword", v.codeword ? json(bitstring(*v.codeword, n)) : json(nullptr)}});
    return json{{"share_stages", stages},
                {"cap_checks", caps},
                {"violations", violations},
                {"trace_length", report.trace_length},
                {"verdict", report.ok() ? "caps hold" : "falsified"}};
}

std::string format_bounds_table(const std::vector<BoundReport>& rows)
{
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const Column& c : columns())
        width.push_back(std::string(c.name).size());
    for (const BoundReport& r : rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < columns().size(); ++i) {
            line.push_back(cell(columns()[i].get(r), "n/a"));
            width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < columns().size(); ++i)
        out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << columns()[i].name;
    out << '\n';
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i)
            out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << line[i];
        out << '\n';
    }
    return out.str();
}

std::string format_bounds_csv(const std::vector<BoundReport>& rows)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < columns().size(); ++i)
        out << (i ? "," : "") << columns()[i].name;
    out << '\n';
    for (const BoundReport& r : rows) {
        for (std::size_t i = 0; i < columns().size(); ++i)
            out << (i ? "," : "") << cell(columns()[i].get(r), "");
        out << '\n';
    }
    return out.str();
}

json bounds_json(const std::vector<BoundReport>& rows)
{
    json out = json::array();
    for (const BoundReport& r : rows)
        out.push_back(to_json(r));
    return out;
}

Analysis analyze_code(const Code& code, bool run_discharging)
{
    const int n = code.n();
    const ISetIndex index(code);
    const Verdict dom = check_dominating(index);
    const Verdict ld = check_locating_dominating(index);
    const Verdict id = check_identifying(index);

    Analysis a;
    json& r = a.report;
    r["n"] = n;
    r["code_size"] = code.size();
    r["verdicts"] = json{{"dominating", dom.holds()}, {"locating_dominating", ld.holds()}, {"identifying", id.holds()}};
    r["witness"] = verdict_json(ld, index);
    r["bounds"] = to_json(bound_report(n));
    r["taxonomy_counts"] = nullptr;
    r["share_stages"] = nullptr;
    r["cap_checks"] = json::array();
    r["violations"] = json::array();
    r["discharging"] = run_discharging && n >= 11 ? "run" : "not applicable";

    if (!ld.holds()) {
        r["verdict"] = "not locating-dominating";
        a.exit_code = 1;
        return a;
    }

    std::optional<Taxonomy> taxonomy;
    try {
        taxonomy.emplace(code);
    } catch (const StructuralViolation& e) {
        r["violations"].push_back(json{{"stage", "taxonomy"},
                                       {"what", e.what()},
                                       {"codeword", e.word() ? json(bitstring(*e.word(), n)) : json(nullptr)}});
        r["verdict"] = "falsified";
        a.exit_code = 3;
        return a;
    }
    r["taxonomy_counts"] = to_json(taxonomy->counts());

    const Stage last = run_discharging && n >= 11 ? Stage::after_rule3 : Stage::raw;
    const DischargingReport shares = analyze_shares(*taxonomy, last);
    json d = to_json(shares);
    r["share_stages"] = d["share_stages"];
    r["cap_checks"] = d["cap_checks"];
    r["violations"] = d["violations"];
    r["trace_length"] = d["trace_length"];
    r["verdict"] = d["verdict"];
    a.exit_code = shares.ok() ? 0 : 3;
    return a;
}

}  // namespace ldcode
