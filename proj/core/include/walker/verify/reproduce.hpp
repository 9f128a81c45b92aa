#pragma once

#include <string>
#include <vector>

#include "walker/families/catalog.hpp"
#include "walker/verify/report.hpp"

namespace walker {

struct IdentityResult {
    std::string label;
    Verdict verdict;
    bool expect_zero = true;
    bool matched = true;
};

struct ReproduceResult {
    std::string name;
    VerificationReport report;
    bool expect_pass = true;
    bool report_gated = true;
    std::vector<IdentityResult> identities;
    std::vector<IdentityResult> diagnostics;  // never affect `matched`
    bool matched = true;
};

// Runs the entry's scenario checks and identities under `policy` and compares them
// with the recorded expectations.
ReproduceResult reproduce(const CatalogEntry& entry, const SamplingPolicy& policy);
ReproduceResult reproduce(const CatalogEntry& entry);

std::string reproduce_to_json(const std::vector<ReproduceResult>& results);
std::string reproduce_to_text(const std::vector<ReproduceResult>& results, bool color);

}  // namespace walker
