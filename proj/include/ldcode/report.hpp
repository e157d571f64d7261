#pragma once

// JSON and text renderings shared by the command-line tool and the tests.
// Rationals are always "p/q" strings and words are bitstrings.

#include "ldcode/bounds.hpp"
#include "ldcode/share.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ldcode {

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const TaxonomyCounts& counts);
nlohmann::json to_json(const CapCheck& check, int n);
nlohmann::json to_json(const DischargingReport& report);

/// Aligned text table, one row per dimension; absent values print as "n/a".
std::string format_bounds_table(const std::vector<BoundReport>& rows);
/// Same columns as the table, comma separated with empty cells for absent values.
std::string format_bounds_csv(const std::vector<BoundReport>& rows);
nlohmann::json bounds_json(const std::vector<BoundReport>& rows);

struct Analysis {
    nlohmann::json report;
    /// 0 all checks hold, 1 not locating-dominating, 3 falsification event.
    int exit_code = 0;
};

/// Full analysis of a code: verdicts, witness, taxonomy counts, share stages,
/// cap checks and bounds. The rules run only when n >= 11 and discharging is
/// requested; other stages are recorded as "not applicable".
Analysis analyze_code(const Code& code, bool run_discharging = true);

}  // namespace ldcode
