#pragma once

#include <string>
#include <vector>

namespace ospq {

struct CheckResult {
    std::string id;      // stable, unique per suite run
    std::string anchor;  // the identity or construction the check certifies
    std::string status;  // pass | fail | skip
    std::string witness; // short detail, empty when passing
    long micros = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool aborted = false; // resource budget ran out; report is partial

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return !aborted;
    }

    size_t failures() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == "fail") ++n;
        return n;
    }

    // one check per line, tab-separated; diff-friendly and stable apart from
    // the timing column
    std::string tsv(bool with_times = true) const {
        std::string out;
        for (const auto& c : checks) {
            out += suite + "\t" + c.id + "\t" + c.anchor + "\t" + c.status + "\t" +
                   (c.witness.empty() ? "-" : c.witness);
            if (with_times) out += "\t" + std::to_string(c.micros) + "us";
            out += "\n";
        }
        return out;
    }
};

} // namespace ospq
