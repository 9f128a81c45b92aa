#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "walker/families/families.hpp"

namespace walker {

// A named expression with its expected zero-test outcome.
struct Identity {
    std::string label;
    Expr expr;
    bool expect_zero = true;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    BuiltScenario built;
    bool expect_pass = true;    // expected overall outcome of the scenario checks
    bool report_gated = true;   // whether that outcome counts toward reproduction
    std::vector<Identity> identities;   // gated
    std::vector<Identity> diagnostics;  // reported only
};

// The reference scenarios, in a fixed order. Built once on first use.
const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_names();

// Throws UnknownName on a miss.
const CatalogEntry& lookup(std::string_view name);

}  // namespace walker
