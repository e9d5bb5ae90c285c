#pragma once

#include "qalcove/verify.hpp"

#include <string>

namespace qalcove {

// One fully-specified command input. The canonical string form round-trips
// through parse().
struct CaseSpec {
    std::string type = "A2";
    std::string lambda = "0,0";
    std::string w = "e"; // a Weyl word or "all"
    std::string order = "auto"; // "auto" or a path to a JSON order file
    std::string format = "markdown"; // markdown | json | dot
    int truncate_par = 0;
    std::string sweep; // "min..max", empty for single-case commands
    int cap = 24;

    std::string str() const;
    static CaseSpec parse(const std::string &text);

    friend bool operator==(const CaseSpec &a, const CaseSpec &b) {
        return a.str() == b.str();
    }
};

// rendered tables for the four table kinds: admissible statistics, the
// forgetful image, the image conditions, and the xi/Deg statistics
std::string cmd_table(const std::string &kind, const CaseSpec &spec);

// deterministic streams: iqls, ils, qbg, chain, inversions
std::string cmd_enumerate(const std::string &kind, const CaseSpec &spec);

// single-case or sweep verification; the report is JSON and the exit status
// is nonzero exactly when a check failed
struct VerifyOutcome {
    int exit_code;
    std::string report;
};
VerifyOutcome cmd_verify(const CaseSpec &spec);

} // namespace qalcove
