#pragma once

#include <optional>
#include <string>
#include <vector>

namespace msdual {

struct CheckResult {
    std::string id;   // "C1" ... "C12"
    std::string name;
    bool pass = false;
    long long cases = 0;
    double seconds = 0.0;
    std::string detail; // first failure or summary
};

struct VerifyOptions {
    unsigned long long seed = 20240501;
    // Reduced bounds for a fast smoke run.
    bool quick = false;
    // Scoping overrides; unset means the built-in acceptance bounds.
    std::optional<int> max_degree;     // degree sweeps
    std::optional<int> max_dim;        // module-dimension sweeps
    std::optional<int> modulus;        // restrict cyclic rings to one n
    std::optional<std::string> ring;   // "z" or "zmod:N" restricts ring families
};

// Runs acceptance criterion k (1-based); throws std::invalid_argument for an
// unknown criterion.
CheckResult run_criterion(int k, const VerifyOptions& opt = {});

// Suites: involution {1,2,3}, mullineux {4,5}, hall {6,7,8}, crystal {9},
// canonical {10}, geometry {11,12}, all {1..12}.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt = {});

std::string report_json(const std::vector<CheckResult>& results);

} // namespace msdual
