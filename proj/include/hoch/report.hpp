#pragma once

#include <string>
#include <vector>

namespace hoch {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when passing, or when skipped
    bool skipped = false;
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        checks.push_back({name, pass, witness, false});
    }
    void skip(const std::string& name, const std::string& why) {
        checks.push_back({name, true, why, true});
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks) {
            CheckResult r = c;
            r.name = other.title.empty() ? c.name : other.title + "/" + c.name;
            checks.push_back(r);
        }
    }
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string text() const;
};

}  // namespace hoch
