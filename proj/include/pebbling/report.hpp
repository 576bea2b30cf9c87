#pragma once

#include <string>
#include <vector>

namespace pebbling {

// One verified identity / equality suite: pass-fail plus the first
// counterexample when there is one.
struct CheckResult {
    std::string name;
    bool passed = true;
    long checked = 0;    // number of instances actually verified
    std::string detail;  // first counterexample, or a note on the verified range
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

}  // namespace pebbling
