#pragma once

// Self-check suite behind `zitter verify`. Each check reports its tolerance
// and the worst deviation it observed; a check passes iff
// observed <= tolerance.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace zitter {

enum class VerifyLevel { fast, full };

VerifyLevel parse_verify_level(std::string_view text);
std::string_view to_string(VerifyLevel level) noexcept;

struct CheckResult {
    std::string name;
    std::string description;
    double tolerance;
    double observed;
    bool passed;
};

struct VerificationReport {
    VerifyLevel level;
    std::uint64_t seed;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::fast;
    std::uint64_t seed = 20140704;
    /// Replaces the default tolerance of the named checks.
    std::map<std::string, double, std::less<>> tolerance_overrides;
};

/// Names of all checks in execution order.
std::vector<std::string> verification_check_names();

/// Throws InvalidArgument for an override naming an unknown check.
VerificationReport run_verification(const VerifyOptions& options);

} // namespace zitter
