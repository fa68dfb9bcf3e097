#pragma once

#include <string>
#include <vector>

namespace zkern {

struct VerifyEntry {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string details;
};

// Deterministic self-check suite plus the settings it ran with.
struct VerifyReport {
    std::vector<VerifyEntry> suite;
    std::string profile;
    int n = 0;
    int steps = 0;
    double truncation = 0.0;
    std::string versions;

    bool all_passed() const;
};

VerifyReport run_verification();

// Fixed-layout JSON, floats printed with 17 significant digits; byte-identical
// across repeated runs.
std::string report_json(const VerifyReport& report);

}  // namespace zkern
