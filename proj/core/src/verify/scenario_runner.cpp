#include <sstream>

#include "verdict_json.hpp"
#include "walker/geometry/walker_metric.hpp"
#include "walker/parse/render.hpp"
#include "walker/soliton/soliton.hpp"
#include "walker/symcore/simplify.hpp"
#include "walker/verify/report.hpp"
#include "walker/version.hpp"

namespace walker {

ojson verdict_json(const Verdict& v) {
    ojson j;
    j["kind"] = to_string(v.kind);
    switch (v.kind) {
        case Verdict::Kind::ProvedZero: break;
        case Verdict::Kind::NumericallyZero:
            j["samples"] = v.samples;
            j["max_abs"] = v.max_abs;
            break;
        case Verdict::Kind::NonZero: {
            j["value"] = v.value;
            ojson w;
            w["point"] = ojson::array({v.witness.point[0], v.witness.point[1], v.witness.point[2]});
            ojson params = ojson::object();
            for (const auto& [k, x] : v.witness.params) params[k] = x;
            w["params"] = params;
            ojson fns = ojson::object();
            for (const auto& [k, e] : v.witness.functions) fns[k] = render(e);
            w["functions"] = fns;
            j["witness"] = w;
            break;
        }
        case Verdict::Kind::Conditional: j["residual"] = render(v.residual); break;
    }
    return j;
}

std::string paint(Overall o, bool color) {
    std::string word = to_string(o);
    if (!color) return word;
    const char* code = o == Overall::Pass ? "\x1b[32m" : o == Overall::Fail ? "\x1b[31m" : "\x1b[33m";
    return std::string(code) + word + "\x1b[0m";
}

const char* to_string(Overall o) {
    switch (o) {
        case Overall::Pass: return "pass";
        case Overall::Fail: return "fail";
        case Overall::Conditional: return "conditional";
    }
    return "?";
}

Overall combine(const std::vector<Overall>& parts) {
    bool conditional = false;
    for (Overall o : parts) {
        if (o == Overall::Fail) return Overall::Fail;
        if (o == Overall::Conditional) conditional = true;
    }
    return conditional ? Overall::Conditional : Overall::Pass;
}

Overall overall_of(const std::vector<std::pair<std::string, Verdict>>& components) {
    std::vector<Overall> parts;
    for (const auto& [k, v] : components) {
        if (v.is_zero())
            parts.push_back(Overall::Pass);
        else if (v.kind == Verdict::Kind::NonZero)
            parts.push_back(Overall::Fail);
        else
            parts.push_back(Overall::Conditional);
    }
    return combine(parts);
}

std::vector<std::pair<std::string, Expr>> check_residuals(const Scenario& s, Check c) {
    Params p = s.params();
    WalkerMetric w(s.resolve(s.f), s.epsilon);
    auto tensor = [](const SymTensor2& t) {
        std::vector<std::pair<std::string, Expr>> out;
        for (int k = 0; k < 6; ++k) out.emplace_back(SymTensor2::label(k), t.at_slot(k));
        return out;
    };
    VectorField field(s.resolve(s.field.vector(1)), s.resolve(s.field.vector(2)), s.resolve(s.field.vector(3)));
    Expr F = s.has_potential() ? s.resolve(s.field.potential) : Expr();
    switch (c) {
        case Check::Ry: {
            VectorField v = field;
            if (s.field.type == FieldSpec::Type::Gradient) v = gradient(w, F);
            if (s.field.type == FieldSpec::Type::Hodge) v = field + gradient(w, F);
            return tensor(ry_residual(w, v, p));
        }
        case Check::GradientRy: return tensor(gradient_ry_residual(w, F, p));
        case Check::Trace: return {{"scalar", trace_condition_residual(w, F, p)}};
        case Check::Divergence: return {{"scalar", divergence(w, field)}};
    }
    return {};
}

SamplingPolicy policy_for(const Scenario& s) {
    SamplingPolicy p;
    p.count = s.sampling.count;
    p.lo = s.sampling.lo;
    p.hi = s.sampling.hi;
    p.seed = s.sampling.seed;
    p.tol = s.sampling.tol;
    for (const auto& n : s.free_constants()) p.conditional_symbols.insert(n);
    return p;
}

VerificationReport run_scenario(const Scenario& s, const SamplingPolicy& policy) {
    VerificationReport r;
    r.name = s.name;
    r.sampling = policy;
    std::vector<Overall> parts;
    for (Check c : s.checks) {
        CheckResult cr;
        cr.check = c;
        std::uint64_t stream = 0;
        for (auto& [label, e] : check_residuals(s, c))
            cr.components.emplace_back(label, is_zero(e, policy, {}, stream++));
        cr.overall = overall_of(cr.components);
        parts.push_back(cr.overall);
        r.checks.push_back(std::move(cr));
    }
    r.overall = combine(parts);
    return r;
}

VerificationReport run_scenario(const Scenario& s) { return run_scenario(s, policy_for(s)); }

std::string report_to_json(const VerificationReport& r) {
    ojson doc;
    doc["name"] = r.name;
    ojson checks = ojson::object();
    for (const auto& c : r.checks) {
        ojson comps = ojson::object();
        for (const auto& [label, v] : c.components) comps[label] = verdict_json(v);
        ojson entry;
        entry["components"] = comps;
        entry["overall"] = to_string(c.overall);
        checks[to_string(c.check)] = entry;
    }
    doc["checks"] = checks;
    doc["overall"] = to_string(r.overall);
    ojson sampling;
    sampling["seed"] = r.sampling.seed;
    sampling["count"] = r.sampling.count;
    sampling["range"] = ojson::array({r.sampling.lo, r.sampling.hi});
    sampling["tol"] = r.sampling.tol;
    doc["sampling"] = sampling;
    doc["version"] = kVersion;
    return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r, bool color) {
    std::ostringstream out;
    out << r.name << ": " << paint(r.overall, color) << "\n";
    for (const auto& c : r.checks) {
        out << "  " << to_string(c.check) << ": " << paint(c.overall, color) << "\n";
        for (const auto& [label, v] : c.components) {
            out << "    " << label << "  " << to_string(v.kind);
            if (v.kind == Verdict::Kind::NumericallyZero) out << " (" << v.samples << " samples, max " << v.max_abs << ")";
            if (v.kind == Verdict::Kind::NonZero) out << " (value " << v.value << ")";
            if (v.kind == Verdict::Kind::Conditional) out << " (" << render(v.residual) << ")";
            out << "\n";
        }
    }
    out << "  sampling: seed " << r.sampling.seed << ", " << r.sampling.count << " samples in [" << r.sampling.lo
        << ", " << r.sampling.hi << "], tol " << r.sampling.tol << "\n";
    return out.str();
}

}  // namespace walker
