#pragma once

#include <string>
#include <vector>

namespace khopf {

struct VerifyCase {
    std::string name;
    bool ok = false;
    std::string detail;  // first counterexample when not ok
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    bool ok() const {
        for (const auto& c : cases)
            if (!c.ok) return false;
        return true;
    }
};

struct SuiteInfo {
    std::string name;
    std::string description;
    int default_max_size;
    int cap;  // sizes above this are clamped to keep desk-scale runtimes
};

const std::vector<SuiteInfo>& verify_suites();

/// Runs one documented invariant suite; throws std::invalid_argument for
/// an unknown name.
VerifyReport run_suite(const std::string& name, int max_size);

}  // namespace khopf
