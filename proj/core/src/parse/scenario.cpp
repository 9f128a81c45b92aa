#include "walker/parse/scenario.hpp"

#include <json.hpp>
#include <set>

#include "walker/errors.hpp"
#include "walker/parse/expr_parser.hpp"
#include "walker/parse/render.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

void require_keys(const json& obj, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
    if (!obj.is_object()) throw SchemaError(where + " must be an object");
    for (const auto& [k, v] : obj.items())
        if (!required.count(k) && !optional.count(k)) throw SchemaError("unknown key '" + k + "' in " + where);
    for (const auto& k : required)
        if (!obj.contains(k)) throw SchemaError("missing key '" + k + "' in " + where);
}

std::string string_at(const json& obj, const std::string& key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw SchemaError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

Expr expr_at(const json& obj, const std::string& key, const std::string& where) {
    return parse_expr(string_at(obj, key, where));
}

VectorField triple(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 3) throw SchemaError(where + " must be an array of three strings");
    std::array<Expr, 3> out;
    for (int i = 0; i < 3; ++i) {
        if (!v[i].is_string()) throw SchemaError(where + " entries must be strings");
        out[i] = parse_expr(v[i].get<std::string>());
    }
    return VectorField(out[0], out[1], out[2]);
}

std::optional<Expr> constant_at(const json& obj, const std::string& key) {
    std::string s = string_at(obj, key, "scenario");
    if (s == "free") return std::nullopt;
    return parse_expr(s);
}

double number_at(const json& v, const std::string& where) {
    if (!v.is_number()) throw SchemaError(where + " must be a number");
    return v.get<double>();
}

Sampling parse_sampling(const json& obj) {
    require_keys(obj, "sampling", {}, {"count", "range", "seed", "tol"});
    Sampling s;
    if (obj.contains("count")) {
        if (!obj["count"].is_number_integer()) throw SchemaError("sampling.count must be an integer");
        long long c = obj["count"].get<long long>();
        if (c < 1 || c > 1000000) throw ValueError("sampling.count must be at least 1");
        s.count = static_cast<int>(c);
    }
    if (obj.contains("range")) {
        const json& r = obj["range"];
        if (!r.is_array() || r.size() != 2) throw SchemaError("sampling.range must be [lo, hi]");
        s.lo = number_at(r[0], "sampling.range[0]");
        s.hi = number_at(r[1], "sampling.range[1]");
        if (!(s.lo < s.hi)) throw ValueError("sampling.range needs lo < hi");
    }
    if (obj.contains("seed")) {
        const json& v = obj["seed"];
        if (!v.is_number_integer()) throw SchemaError("sampling.seed must be an integer");
        if (v.is_number_unsigned())
            s.seed = v.get<std::uint64_t>();
        else if (v.get<long long>() < 0)
            throw ValueError("sampling.seed must be nonnegative");
        else
            s.seed = static_cast<std::uint64_t>(v.get<long long>());
    }
    if (obj.contains("tol")) {
        s.tol = number_at(obj["tol"], "sampling.tol");
        if (!(s.tol > 0)) throw ValueError("sampling.tol must be positive");
    }
    return s;
}

ojson triple_json(const VectorField& v) {
    ojson a = ojson::array();
    for (int i = 1; i <= 3; ++i) a.push_back(render(v(i)));
    return a;
}

}  // namespace

const char* to_string(Check c) {
    switch (c) {
        case Check::Ry: return "ry";
        case Check::GradientRy: return "gradient_ry";
        case Check::Trace: return "trace";
        case Check::Divergence: return "divergence";
    }
    return "?";
}

std::optional<Check> check_from_string(std::string_view s) {
    for (Check c : {Check::Ry, Check::GradientRy, Check::Trace, Check::Divergence})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

Params Scenario::params() const {
    Bindings b;
    b.params["eps"] = integer(epsilon);
    if (beta) b.params["beta"] = *beta;
    if (lambda) b.params["lambda"] = *lambda;
    if (mu) b.params["mu"] = *mu;
    // Constants may refer to each other (mu = 2*beta); resolve to a fixed point.
    auto close = [&](Expr e) {
        for (int i = 0; i < 4; ++i) {
            Expr next = substitute(e, b);
            if (next == e) return next;
            e = next;
        }
        throw ValueError("scenario constants refer to each other cyclically");
    };
    Params p;
    p.epsilon = integer(epsilon);
    p.beta = beta ? close(*beta) : param("beta");
    p.lambda = lambda ? close(*lambda) : param("lambda");
    p.mu = mu ? close(*mu) : param("mu");
    return p;
}

Expr Scenario::resolve(const Expr& e) const { return substitute(e, params().bindings()); }

std::vector<std::string> Scenario::free_constants() const {
    std::vector<std::string> out;
    if (!beta) out.emplace_back("beta");
    if (!lambda) out.emplace_back("lambda");
    if (!mu) out.emplace_back("mu");
    return out;
}

Scenario parse_scenario(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    require_keys(doc, "scenario", {"name", "epsilon", "beta", "lambda", "mu", "f", "field", "checks"}, {"sampling"});
    Scenario s;
    s.name = string_at(doc, "name", "scenario");
    if (!doc["epsilon"].is_number_integer()) throw SchemaError("scenario.epsilon must be an integer");
    long long eps = doc["epsilon"].get<long long>();
    if (eps != 1 && eps != -1) throw ValueError("epsilon must be +1 or -1");
    s.epsilon = static_cast<int>(eps);
    s.beta = constant_at(doc, "beta");
    s.lambda = constant_at(doc, "lambda");
    s.mu = constant_at(doc, "mu");
    s.f = expr_at(doc, "f", "scenario");

    const json& field = doc["field"];
    if (!field.is_object() || field.size() != 1) throw SchemaError("field must have exactly one of vector, gradient, hodge");
    if (field.contains("vector")) {
        s.field.type = FieldSpec::Type::Vector;
        s.field.vector = triple(field["vector"], "field.vector");
    } else if (field.contains("gradient")) {
        s.field.type = FieldSpec::Type::Gradient;
        s.field.potential = expr_at(field, "gradient", "field");
    } else if (field.contains("hodge")) {
        const json& h = field["hodge"];
        require_keys(h, "field.hodge", {"potential", "y"});
        s.field.type = FieldSpec::Type::Hodge;
        s.field.potential = expr_at(h, "potential", "field.hodge");
        s.field.vector = triple(h["y"], "field.hodge.y");
    } else {
        throw SchemaError("unknown key '" + field.begin().key() + "' in field");
    }

    const json& checks = doc["checks"];
    if (!checks.is_array()) throw SchemaError("checks must be an array");
    if (checks.empty()) throw ValueError("checks must not be empty");
    for (const auto& c : checks) {
        if (!c.is_string()) throw SchemaError("checks entries must be strings");
        auto k = check_from_string(c.get<std::string>());
        if (!k) throw SchemaError("unknown check '" + c.get<std::string>() + "'");
        if (std::find(s.checks.begin(), s.checks.end(), *k) != s.checks.end())
            throw ValueError("duplicate check '" + c.get<std::string>() + "'");
        s.checks.push_back(*k);
    }
    for (Check c : s.checks) {
        if ((c == Check::GradientRy || c == Check::Trace) && !s.has_potential())
            throw ValueError(std::string(to_string(c)) + " needs a gradient or hodge field");
        if (c == Check::Divergence && s.field.type == FieldSpec::Type::Gradient)
            throw ValueError("divergence needs a vector or hodge field");
        if (c == Check::Trace && !s.mu) throw ValueError("trace needs a concrete mu, not \"free\"");
    }
    if (doc.contains("sampling")) s.sampling = parse_sampling(doc["sampling"]);
    return s;
}

std::string scenario_to_json(const Scenario& s) {
    ojson doc;
    doc["name"] = s.name;
    doc["epsilon"] = s.epsilon;
    doc["beta"] = s.beta ? render(*s.beta) : "free";
    doc["lambda"] = s.lambda ? render(*s.lambda) : "free";
    doc["mu"] = s.mu ? render(*s.mu) : "free";
    doc["f"] = render(s.f);
    ojson field;
    switch (s.field.type) {
        case FieldSpec::Type::Vector: field["vector"] = triple_json(s.field.vector); break;
        case FieldSpec::Type::Gradient: field["gradient"] = render(s.field.potential); break;
        case FieldSpec::Type::Hodge:
            field["hodge"]["potential"] = render(s.field.potential);
            field["hodge"]["y"] = triple_json(s.field.vector);
            break;
    }
    doc["field"] = field;
    ojson checks = ojson::array();
    for (Check c : s.checks) checks.push_back(to_string(c));
    doc["checks"] = checks;
    ojson sampling;
    sampling["count"] = s.sampling.count;
    sampling["range"] = ojson::array({s.sampling.lo, s.sampling.hi});
    sampling["seed"] = s.sampling.seed;
    sampling["tol"] = s.sampling.tol;
    doc["sampling"] = sampling;
    return doc.dump(2) + "\n";
}

}  // namespace walker
