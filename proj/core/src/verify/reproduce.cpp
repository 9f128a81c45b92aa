#include "walker/verify/reproduce.hpp"

#include <sstream>

#include "verdict_json.hpp"
#include "walker/version.hpp"

namespace walker {
namespace {

IdentityResult check_identity(const Identity& id, const SamplingPolicy& policy, std::uint64_t stream) {
    IdentityResult r;
    r.label = id.label;
    r.expect_zero = id.expect_zero;
    r.verdict = is_zero(id.expr, policy, {}, stream);
    r.matched = id.expect_zero ? r.verdict.is_zero() : r.verdict.kind == Verdict::Kind::NonZero;
    return r;
}

ojson identities_json(const std::vector<IdentityResult>& ids) {
    ojson out = ojson::object();
    for (const auto& r : ids) {
        ojson j;
        j["expected"] = r.expect_zero ? "zero" : "nonzero";
        j["verdict"] = verdict_json(r.verdict);
        j["matched"] = r.matched;
        out[r.label] = j;
    }
    return out;
}

}  // namespace

ReproduceResult reproduce(const CatalogEntry& entry, const SamplingPolicy& policy) {
    ReproduceResult r;
    r.name = entry.name;
    r.expect_pass = entry.expect_pass;
    r.report_gated = entry.report_gated;
    r.report = run_scenario(entry.built.scenario, policy);
    if (r.report_gated) r.matched = (r.report.overall == Overall::Pass) == entry.expect_pass;
    std::uint64_t stream = 100;
    for (const auto& id : entry.identities) {
        r.identities.push_back(check_identity(id, policy, stream++));
        r.matched = r.matched && r.identities.back().matched;
    }
    for (const auto& id : entry.diagnostics) r.diagnostics.push_back(check_identity(id, policy, stream++));
    return r;
}

ReproduceResult reproduce(const CatalogEntry& entry) { return reproduce(entry, policy_for(entry.built.scenario)); }

std::string reproduce_to_json(const std::vector<ReproduceResult>& results) {
    ojson doc;
    ojson entries = ojson::array();
    int matched = 0;
    for (const auto& r : results) {
        ojson e;
        e["name"] = r.name;
        e["matched"] = r.matched;
        e["report"] = to_string(r.report.overall);
        e["expected"] = r.expect_pass ? "pass" : "fail";
        e["gated"] = r.report_gated;
        e["identities"] = identities_json(r.identities);
        e["diagnostics"] = identities_json(r.diagnostics);
        entries.push_back(e);
        matched += r.matched;
    }
    doc["entries"] = entries;
    doc["matched"] = std::to_string(matched) + "/" + std::to_string(results.size());
    doc["version"] = kVersion;
    return doc.dump(2) + "\n";
}

std::string reproduce_to_text(const std::vector<ReproduceResult>& results, bool color) {
    std::ostringstream out;
    int matched = 0;
    for (const auto& r : results) {
        matched += r.matched;
        out << r.name << ": " << (r.matched ? "match" : "MISMATCH") << "\n";
        out << "  checks " << paint(r.report.overall, color) << " (expected " << (r.expect_pass ? "pass" : "fail")
            << (r.report_gated ? "" : ", diagnostic") << ")\n";
        for (const auto& id : r.identities)
            out << "  " << id.label << "  " << to_string(id.verdict.kind) << (id.matched ? "" : "  (unexpected)") << "\n";
        for (const auto& id : r.diagnostics) {
            out << "  diagnostic " << id.label << "  " << to_string(id.verdict.kind);
            if (id.verdict.kind == Verdict::Kind::NonZero) out << " (value " << id.verdict.value << ")";
            out << "\n";
        }
    }
    out << matched << "/" << results.size() << " expected verdicts matched\n";
    return out.str();
}

}  // namespace walker
