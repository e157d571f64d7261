// ldcode: bounds tables, code verification, share analysis and code search
// for locating-dominating codes in binary Hamming spaces.
//
// Exit codes: 0 success or property holds, 1 property fails, 2 usage or
// parse error, 3 falsification event.

#include "ldcode/bounds.hpp"
#include "ldcode/ldc_io.hpp"
#include "ldcode/report.hpp"
#include "ldcode/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ldcode;

namespace {

constexpr int kUsage = 2;

int cmd_bounds(int from, int to, const std::string& format)
{
    std::vector<BoundReport> rows;
    try {
        rows = bound_table(from, to);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (format == "csv")
        std::cout << format_bounds_csv(rows);
    else if (format == "json")
        std::cout << bounds_json(rows).dump(2) << '\n';
    else
        std::cout << format_bounds_table(rows);
    return 0;
}

std::optional<Code> load(const std::string& path)
{
    try {
        return read_ldc(path);
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return std::nullopt;
    }
}

int cmd_verify(const std::string& path, bool identifying)
{
    const auto code = load(path);
    if (!code)
        return kUsage;
    const ISetIndex index(*code);
    const Verdict v = identifying ? check_identifying(index) : check_locating_dominating(index);
    const char* property = identifying ? "identifying" : "locating-dominating";
    std::cout << property << ": " << (v.holds() ? "yes" : "no") << " (n = " << code->n() << ", |C| = " << code->size()
              << ")\n";
    if (v.holds())
        return 0;
    std::cout << "witness: " << v.describe(index) << '\n';
    return 1;
}

int cmd_analyze(const std::string& path, const std::string& out, bool skip_discharging)
{
    const auto code = load(path);
    if (!code)
        return kUsage;
    const Analysis a = analyze_code(*code, !skip_discharging);
    std::ofstream file(out);
    if (!file) {
        std::cerr << "error: cannot write " << out << '\n';
        return kUsage;
    }
    file << a.report.dump(2) << '\n';
    std::cout << "n = " << code->n() << ", |C| = " << code->size() << ": " << a.report["verdict"].get<std::string>()
              << '\n';
    if (!a.report["witness"].is_null())
        std::cout << "witness: " << a.report["witness"]["description"].get<std::string>() << '\n';
    for (const auto& v : a.report["violations"])
        std::cerr << "FALSIFICATION [" << v["stage"].get<std::string>() << "] " << v["what"].get<std::string>() << '\n';
    return a.exit_code;
}

int cmd_search(int n, bool exact, int seeds, std::uint64_t seed, std::size_t budget, const std::string& out)
{
    std::optional<SearchResult> result;
    try {
        result = exact ? exact_minimum(n) : heuristic_minimum(n, seeds, seed, budget);
    } catch (const UnsupportedDimension& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    std::cout << "n = " << result->n << ", size = " << result->size << ", proof = " << proof_name(result->proof)
              << ", nodes = " << result->nodes_explored << ", elapsed = " << result->elapsed.count() << " s\n";
    if (!out.empty()) {
        const std::string comment = "n = " + std::to_string(n) + ", size " + std::to_string(result->size) +
                                    ", proof " + proof_name(result->proof);
        write_ldc(out, result->code, comment);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Locating-dominating codes in binary Hamming spaces"};
    app.require_subcommand(1);

    int from = 1, to = 14;
    std::string format = "table";
    auto* bounds = app.add_subcommand("bounds", "Lower-bound table");
    bounds->add_option("--from", from, "First dimension")->capture_default_str();
    bounds->add_option("--to", to, "Last dimension")->capture_default_str();
    bounds->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();

    std::string file;
    bool identifying = false;
    auto* verify = app.add_subcommand("verify", "Check a .ldc code");
    verify->add_option("file", file, "Code file")->required();
    verify->add_flag("--identifying", identifying, "Check the identifying property instead");

    std::string out;
    bool skip_discharging = false;
    auto* analyze = app.add_subcommand("analyze", "Write a JSON analysis report for a .ldc code");
    analyze->add_option("file", file, "Code file")->required();
    analyze->add_option("--out", out, "Report path")->required();
    analyze->add_flag("--skip-discharging", skip_discharging, "Stop after raw shares");

    int n = 0, seeds = 10;
    bool exact = false;
    std::uint64_t seed = 0;
    std::size_t budget = 200;
    auto* search = app.add_subcommand("search", "Find a small locating-dominating code");
    search->add_option("--n", n, "Dimension")->required();
    search->add_flag("--exact", exact, "Certified minimum (n <= 5)");
    search->add_option("--seeds", seeds, "Number of heuristic runs")->check(CLI::PositiveNumber)->capture_default_str();
    search->add_option("--seed", seed, "First seed")->capture_default_str();
    search->add_option("--budget", budget, "Local improvement steps per run")->capture_default_str();
    search->add_option("--out", out, "Write the best code as .ldc");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*bounds)
            return cmd_bounds(from, to, format);
        if (*verify)
            return cmd_verify(file, identifying);
        if (*analyze)
            return cmd_analyze(file, out, skip_discharging);
        return cmd_search(n, exact, seeds, seed, budget, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
