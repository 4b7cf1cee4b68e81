#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace blossomspin {

// One verified identity.  paper_anchor names the mathematical fact the check
// certifies; passed is exactly max_error <= tolerance.
struct ReportEntry {
    std::string check_name;
    std::string paper_anchor;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct Report {
    int degree = 0;
    std::uint64_t seed = 0;
    std::vector<ReportEntry> entries; // sorted by check_name

    bool all_passed() const;
};

// Built-in tolerance per check; the keys double as the set of valid check
// names.
std::map<std::string, double> default_tolerances();

// Parses a JSON object {check_name: tolerance} and overlays it on the
// defaults.  Unknown names or non-numeric values throw std::invalid_argument.
std::map<std::string, double> load_tolerances(const std::string& path);

// Runs every check at the given degree (checks with a smaller supported
// ceiling clamp internally) with randomness derived only from `seed`.
// Deterministic: equal inputs give equal reports, byte for byte.
Report run_report(int degree, std::uint64_t seed,
                  const std::map<std::string, double>& tolerances);

// Canonical JSON rendering, 17 significant digits, no volatile fields.
std::string report_to_json(const Report& report);

// Two-column human rendering at 6 significant digits.
std::string report_to_text(const Report& report);

} // namespace blossomspin
