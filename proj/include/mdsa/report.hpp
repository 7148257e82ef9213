#pragma once

#include <string>
#include <vector>

namespace mdsa {

// Result of a verification sweep: pass/fail with failure witnesses.
struct CheckReport {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    void fail(const std::string& witness) { failures.push_back(witness); }
    void note(const std::string& msg) { notes.push_back(msg); }
    void count() { ++checks; }

    void merge(const CheckReport& o) {
        checks += o.checks;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }

    std::string summary() const {
        std::string s = name + ": " + (passed() ? "pass" : "FAIL") + " (" +
                        std::to_string(checks) + " checks";
        if (!failures.empty()) s += ", " + std::to_string(failures.size()) + " failures";
        s += ")";
        for (const auto& f : failures) s += "\n  witness: " + f;
        for (const auto& n : notes) s += "\n  note: " + n;
        return s;
    }
};

} // namespace mdsa
