#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace grtoda {

// Runtime configuration shared by the subcommands. Command-line flags
// override file values; epsilon enters all symbolic output through
// vs = (-1)^epsilon.
struct RunConfig {
    int m = 1;
    int n = 2;
    std::vector<double> lambda; // empty means zeros of length n
    double hbar = 1.0;
    int epsilon = 0;
    double tol = 1e-8;
    std::string emit = "text"; // text | json

    void validate(bool numeric = false) const;
    int vs_sign() const { return (epsilon % 2 == 0) ? 1 : -1; }
};

// line-oriented key=value file
RunConfig load_config(const std::string& path);
std::vector<double> parse_csv_doubles(const std::string& s);
void apply_config_line(RunConfig& cfg, const std::string& line);

// conformance report
struct ConformanceCheck {
    std::string check_id;
    std::string statement; // which published statement the check verifies
    std::string status;    // match | sign-deviation | fail
    std::string detail;
};

struct ConformanceReport {
    std::vector<ConformanceCheck> checks;
    bool any_fail() const {
        for (const auto& c : checks)
            if (c.status == "fail") return true;
        return false;
    }
};

// runs every conformance check once; max_n bounds the symbolic sweeps
// (clamped to the documented per-check ranges), heavy enables the
// four-dimensional quadrature consistency check
ConformanceReport build_conformance_report(int max_n = 5, bool heavy = false,
                                           const std::string& inject_fail = "");

nlohmann::json to_json(const ConformanceReport& rep);

// minimal structural JSON-schema check (type/properties/required/items/enum)
bool validate_against_schema(const nlohmann::json& value, const nlohmann::json& schema,
                             std::string* error = nullptr);

// CLI entry point; returns the process exit status
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace grtoda
