#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "walker/errors.hpp"
#include "walker/families/catalog.hpp"
#include "walker/families/families.hpp"
#include "walker/parse/expr_parser.hpp"
#include "walker/parse/render.hpp"
#include "walker/parse/scenario.hpp"
#include "walker/verify/reproduce.hpp"
#include "walker/version.hpp"

namespace walker::cli {
namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

struct Globals {
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<double> tol;
    std::string format = "json";
    bool quiet = false;
    std::string out_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream o(path, std::ios::binary);
    if (!o) throw std::runtime_error("cannot write " + path);
    o << text;
    if (!o) throw std::runtime_error("cannot write " + path);
}

SamplingPolicy apply(SamplingPolicy p, const Globals& g) {
    if (g.seed) p.seed = *g.seed;
    if (g.samples) p.count = *g.samples;
    if (g.tol) p.tol = *g.tol;
    return p;
}

void emit(const Globals& g, std::ostream& out, const std::string& text) {
    if (!g.out_path.empty())
        write_file(g.out_path, text);
    else if (!g.quiet)
        out << text;
}

int cmd_check(const Globals& g, const std::string& path, std::ostream& out, bool color) {
    Scenario s = parse_scenario(read_file(path));
    VerificationReport r = run_scenario(s, apply(policy_for(s), g));
    emit(g, out, g.format == "json" ? report_to_json(r) : report_to_text(r, color));
    switch (r.overall) {
        case Overall::Pass: return kPass;
        case Overall::Fail: return kFail;
        case Overall::Conditional: return kConditional;
    }
    return kFail;
}

Expr constant_field(const json& doc, const char* key, const char* symbol) {
    if (!doc.contains(key)) return param(symbol);
    if (!doc[key].is_string()) throw SchemaError(std::string(key) + " must be a string");
    std::string s = doc[key].get<std::string>();
    return s == "free" ? param(symbol) : parse_expr(s);
}

// {"epsilon": 1 | -1 | "eps", "beta": .., "lambda": .., "mu": .., "form": "printed" | "corrected",
//  "name": .., "inputs": {role: expr}}
FamilySpec parse_build_inputs(const std::string& family, const std::string& text) {
    auto theorem = theorem_from_string(family);
    if (!theorem) throw UnknownName(family);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("build inputs must be an object");
    static const std::set<std::string> known{"epsilon", "beta", "lambda", "mu", "form", "name", "inputs"};
    for (const auto& [k, v] : doc.items())
        if (!known.count(k)) throw SchemaError("unknown key '" + k + "' in build inputs");
    FamilySpec spec;
    spec.theorem = *theorem;
    Expr eps = sign_param("eps");
    if (doc.contains("epsilon")) {
        const json& e = doc["epsilon"];
        if (e.is_number_integer()) {
            long long v = e.get<long long>();
            if (v != 1 && v != -1) throw ValueError("epsilon must be +1 or -1");
            eps = integer(static_cast<long>(v));
        } else if (!(e.is_string() && e.get<std::string>() == "eps")) {
            throw SchemaError("epsilon must be 1, -1 or \"eps\"");
        }
    }
    spec.params = Params(constant_field(doc, "beta", "beta"), constant_field(doc, "lambda", "lambda"),
                         constant_field(doc, "mu", "mu"), eps);
    if (doc.contains("form")) {
        std::string f = doc["form"].is_string() ? doc["form"].get<std::string>() : "";
        if (f == "corrected")
            spec.form = Form::Corrected;
        else if (f != "printed")
            throw ValueError("form must be \"printed\" or \"corrected\"");
    }
    if (doc.contains("inputs")) {
        if (!doc["inputs"].is_object()) throw SchemaError("inputs must be an object");
        for (const auto& [role, v] : doc["inputs"].items()) {
            if (!v.is_string()) throw SchemaError("inputs." + role + " must be a string");
            spec.inputs[role] = parse_expr(v.get<std::string>());
        }
    }
    return spec;
}

int cmd_build(const Globals& g, const std::string& family, const std::string& inputs_path, std::ostream& out) {
    std::string text = read_file(inputs_path);
    FamilySpec spec = parse_build_inputs(family, text);
    BuiltScenario b = build(spec);
    json doc = json::parse(text);
    if (doc.contains("name") && doc["name"].is_string()) b.scenario.name = doc["name"].get<std::string>();
    std::string scenario = scenario_to_json(b.scenario);

    ojson cs = ojson::object();
    for (const auto& [label, e] : b.constraints) cs[label] = render(e);
    ojson report;
    report["family"] = family;
    report["constraints"] = cs;
    if (g.out_path.empty()) {
        report["scenario"] = ojson::parse(scenario);
        if (!g.quiet) out << report.dump(2) << "\n";
    } else {
        write_file(g.out_path, scenario);
        report["scenario_path"] = g.out_path;
        if (!g.quiet) out << report.dump(2) << "\n";
    }
    return kPass;
}

int cmd_reproduce(const Globals& g, const std::string& name, std::ostream& out, bool color) {
    std::vector<const CatalogEntry*> entries;
    if (name == "all")
        for (const auto& e : catalog()) entries.push_back(&e);
    else
        entries.push_back(&lookup(name));
    std::vector<ReproduceResult> results;
    for (const CatalogEntry* e : entries) results.push_back(reproduce(*e, apply(policy_for(e->built.scenario), g)));
    emit(g, out, g.format == "json" ? reproduce_to_json(results) : reproduce_to_text(results, color));
    for (const auto& r : results)
        if (!r.matched) return kFail;
    return kPass;
}

int cmd_list(const Globals& g, const std::string& export_dir, std::ostream& out) {
    if (!export_dir.empty()) {
        std::filesystem::create_directories(export_dir);
        for (const auto& e : catalog())
            write_file((std::filesystem::path(export_dir) / (e.name + ".json")).string(), scenario_to_json(e.built.scenario));
    }
    if (g.quiet) return kPass;
    if (g.format == "json") {
        ojson names = ojson::array();
        for (const auto& e : catalog()) names.push_back({{"name", e.name}, {"summary", e.summary}});
        out << names.dump(2) << "\n";
    } else {
        for (const auto& e : catalog()) out << e.name << "  " << e.summary << "\n";
    }
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    CLI::App app{"Walker 3-manifold soliton verifier", "walkerry"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Globals g;
    app.add_option("--seed", g.seed, "Sampling seed");
    app.add_option("--samples", g.samples, "Samples per zero test")->check(CLI::PositiveNumber);
    app.add_option("--tol", g.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--quiet", g.quiet, "Print nothing to stdout, report through the exit code");
    app.add_option("--out", g.out_path, "Write the report (or built scenario) to this path");

    std::string check_path, family, inputs_path, target, export_dir;
    auto* check = app.add_subcommand("check", "Run the checks of a scenario file");
    check->add_option("scenario", check_path, "Scenario JSON")->required();
    auto* buildc = app.add_subcommand("build", "Build a family from an inputs file");
    buildc->add_option("family", family, "Family name")->required();
    buildc->add_option("inputs", inputs_path, "Inputs JSON")->required();
    auto* repro = app.add_subcommand("reproduce", "Check catalog entries against their expected verdicts");
    repro->add_option("name", target, "Entry name or \"all\"")->required();
    auto* list = app.add_subcommand("list", "List catalog entries");
    list->add_option("--export", export_dir, "Also write every entry as scenario JSON into this directory");
    for (auto* sub : {check, buildc, repro, list}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*check) return cmd_check(g, check_path, out, color);
        if (*buildc) return cmd_build(g, family, inputs_path, out);
        if (*repro) return cmd_reproduce(g, target, out, color);
        if (*list) return cmd_list(g, export_dir, out);
    } catch (const ParseError& e) {
        err << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
    err << app.help();
    return kUsage;
}

}  // namespace walker::cli
