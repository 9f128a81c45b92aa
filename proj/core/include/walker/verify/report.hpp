#pragma once

#include <string>
#include <utility>
#include <vector>

#include "walker/parse/scenario.hpp"
#include "walker/verify/zero_test.hpp"

namespace walker {

enum class Overall { Pass, Fail, Conditional };

const char* to_string(Overall o);

// Pass iff every verdict is a zero verdict; Fail if any is NonZero; Conditional otherwise.
Overall combine(const std::vector<Overall>& parts);
Overall overall_of(const std::vector<std::pair<std::string, Verdict>>& components);

struct CheckResult {
    Check check;
    std::vector<std::pair<std::string, Verdict>> components;  // "11".."33" or "scalar"
    Overall overall = Overall::Pass;
};

struct VerificationReport {
    std::string name;
    std::vector<CheckResult> checks;
    Overall overall = Overall::Pass;
    SamplingPolicy sampling;
};

// The residual expressions a check produces, keyed like the report components.
std::vector<std::pair<std::string, Expr>> check_residuals(const Scenario& s, Check c);

SamplingPolicy policy_for(const Scenario& s);
VerificationReport run_scenario(const Scenario& s, const SamplingPolicy& policy);
VerificationReport run_scenario(const Scenario& s);

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r, bool color);

}  // namespace walker
