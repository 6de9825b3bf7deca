#include "sharphardy/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sharphardy/catalog.hpp"
#include "sharphardy/error.hpp"
#include "sharphardy/lorentz.hpp"
#include "sharphardy/numfmt.hpp"
#include "sharphardy/parse.hpp"
#include "sharphardy/special.hpp"

namespace sharphardy::cli {

namespace {

// Everything a run can be configured with; flags override the config file.
struct RunConfig {
    std::string case_id;
    std::map<std::string, std::string> params;  // p, q, alpha, beta, a, ell as given
    std::string function;
    std::optional<double> tol;
    std::string log_weight = "corrected";
    std::string bliss_form = "corrected";
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string out_path;
    std::string c;
    std::string which;
    std::string id;
    unsigned threads = 0;
};

const char* const kParamNames[] = {"p", "q", "alpha", "beta", "a", "ell"};

void load_config(const std::string& path, RunConfig& cfg, const std::map<std::string, bool>& given) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ParameterError("config file '" + path + "' is not valid JSON: " + ex.what());
    }
    if (!j.is_object()) throw ParameterError("config file must hold a JSON object");
    auto text = [](const nlohmann::json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number()) return fmt_num(v.get<double>());
        throw ParameterError("config values must be numbers or strings");
    };
    auto unset = [&given](const std::string& k) {
        auto it = given.find(k);
        return it == given.end() || !it->second;
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const nlohmann::json& v = it.value();
        if (k == "params") {
            if (!v.is_object()) throw ParameterError("config 'params' must be an object");
            for (auto pi = v.begin(); pi != v.end(); ++pi)
                if (unset(pi.key())) cfg.params[pi.key()] = text(pi.value());
            continue;
        }
        if (!unset(k == "case_id" ? "case" : k)) continue;
        if (k == "case" || k == "case_id") cfg.case_id = text(v);
        else if (k == "p" || k == "q" || k == "alpha" || k == "beta" || k == "a" || k == "ell") cfg.params[k] = text(v);
        else if (k == "f" || k == "function") cfg.function = text(v);
        else if (k == "tol") cfg.tol = parse_num(text(v));
        else if (k == "log_weight" || k == "log-weight") cfg.log_weight = text(v);
        else if (k == "bliss_form" || k == "bliss-form") cfg.bliss_form = text(v);
        else if (k == "seed") cfg.seed = v.get<std::uint64_t>();
        else if (k == "format") cfg.format = text(v);
        else if (k == "out") cfg.out_path = text(v);
        else if (k == "c") cfg.c = text(v);
        else if (k == "which") cfg.which = text(v);
        else if (k == "id") cfg.id = text(v);
        else throw ParameterError("unknown config key '" + k + "'");
    }
    for (const auto& [k, v] : cfg.params) {
        bool known = false;
        for (const char* n : kParamNames) known = known || k == n;
        if (!known) throw ParameterError("unknown parameter '" + k + "' in config");
    }
}

Format format_of(const RunConfig& cfg) {
    const auto f = format_from_string(cfg.format);
    if (!f) throw ParameterError("--format must be json or csv, got '" + cfg.format + "'");
    return *f;
}

catalog::Options options_of(const RunConfig& cfg) {
    catalog::Options o;
    if (cfg.tol) o.tol = *cfg.tol;
    const auto lv = log_variant_from_string(cfg.log_weight);
    if (!lv) throw ParameterError("--log-weight must be corrected or as-printed, got '" + cfg.log_weight + "'");
    o.log_variant = *lv;
    if (cfg.bliss_form == "corrected")
        o.bliss_form = special::BlissForm::Corrected;
    else if (cfg.bliss_form == "printed" || cfg.bliss_form == "as-printed")
        o.bliss_form = special::BlissForm::Printed;
    else
        throw ParameterError("--bliss-form must be corrected or printed, got '" + cfg.bliss_form + "'");
    o.seed = cfg.seed;
    return o;
}

// A single value per parameter; lists are only for scan.
Params params_of(const RunConfig& cfg) {
    Params p;
    auto get = [&cfg](const char* name) -> std::optional<double> {
        auto it = cfg.params.find(name);
        if (it == cfg.params.end()) return std::nullopt;
        if (it->second.find(',') != std::string::npos)
            throw ParameterError(std::string("--") + name + " takes one value outside scan");
        return parse_num(it->second);
    };
    if (auto v = get("p")) p.e.p = *v;
    if (auto v = get("q")) p.e.q = *v;
    if (auto v = get("alpha")) p.e.alpha = *v;
    if (auto v = get("beta")) p.e.beta = *v;
    if (auto v = get("a")) p.e.a = *v;
    if (auto v = get("ell")) p.ell = *v;
    return p;
}

const catalog::InequalityCase& case_of(const RunConfig& cfg) {
    if (cfg.case_id.empty()) throw ParameterError("--case is required");
    const catalog::InequalityCase& c = catalog::find_case(cfg.case_id);
    for (const char* name : kParamNames) {
        if (!cfg.params.count(name) || catalog::takes_parameter(c, name)) continue;
        std::string regimes;
        for (const catalog::Regime& r : c.regimes) regimes += (regimes.empty() ? "" : "; ") + r.name + ": " + r.condition;
        throw ParameterError("case " + c.id + " has no parameter " + name + " (regimes: " + regimes + ")");
    }
    return c;
}

FuncExpr function_of(const RunConfig& cfg, const catalog::InequalityCase& c, const Params& p) {
    if (cfg.function.empty()) throw ParameterError("--f is required");
    const double ell = catalog::resolve_ell(c, p.ell);
    if (cfg.function == "random") return catalog::random_admissible(c, ell, cfg.seed.value_or(0));
    Exponents e = p.e;
    if (c.id == "PQ" || c.id == "PQd") e.alpha = e.q * e.beta / e.p;
    return parse_function(cfg.function, bindings_for(e, ell));
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_num(item));
    if (out.empty()) throw ParameterError("empty value list '" + text + "'");
    return out;
}

int exit_for(bool pass) { return pass ? kPass : kFail; }

int cmd_list(const RunConfig& cfg, std::ostream& out) {
    const Format fmt = format_of(cfg);
    if (fmt == Format::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const catalog::InequalityCase& c : catalog::all_cases()) {
            nlohmann::ordered_json regs = nlohmann::ordered_json::array();
            for (const catalog::Regime& r : c.regimes)
                regs.push_back({{"name", r.name}, {"condition", r.condition}, {"direction", to_string(r.direction)}});
            arr.push_back({{"id", c.id},
                           {"label", c.label},
                           {"domain", c.domain == Domain::Kind::Lower ? "(0,ell)" : "(ell,inf)"},
                           {"constant", c.constant},
                           {"cone", to_string(c.cone)},
                           {"regimes", regs}});
        }
        out << arr.dump(2) << '\n';
        return kPass;
    }
    out << "id,label\n";
    for (const catalog::InequalityCase& c : catalog::all_cases()) out << c.id << ",\"" << c.label << "\"\n";
    return kPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const catalog::InequalityCase& c = case_of(cfg);
    const Params p = params_of(cfg);
    const catalog::Options o = options_of(cfg);
    const Format fmt = format_of(cfg);
    const VerificationReport r = catalog::verify(c.id, function_of(cfg, c, p), p, o);
    emit_reports(out, {r}, fmt);
    return exit_for(r.pass);
}

int cmd_equality(const RunConfig& cfg, std::ostream& out) {
    const catalog::InequalityCase& c = case_of(cfg);
    const Params p = params_of(cfg);
    const catalog::Options o = options_of(cfg);
    const Format fmt = format_of(cfg);
    if (cfg.c.empty()) throw ParameterError("--c (the family point) is required");
    std::vector<VerificationReport> rs;
    for (double cv : parse_list(cfg.c)) rs.push_back(catalog::equality_check(c.id, p, cv, cfg.tol, o));
    emit_reports(out, rs, fmt);
    bool pass = true;
    for (const auto& r : rs) pass = pass && r.pass;
    return exit_for(pass);
}

int cmd_probe(const RunConfig& cfg, std::ostream& out) {
    const catalog::InequalityCase& c = case_of(cfg);
    const Params p = params_of(cfg);
    const catalog::Options o = options_of(cfg);
    const Format fmt = format_of(cfg);
    const catalog::ProbeResult r = catalog::sharpness_probe(c.id, p, o);
    catalog::emit_probe(out, r, fmt);
    return exit_for(r.pass);
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    const catalog::InequalityCase& c = case_of(cfg);
    const catalog::Options o = options_of(cfg);
    const Format fmt = format_of(cfg);
    if (cfg.function.empty()) throw ParameterError("--f is required");
    std::vector<Params> grid{Params{}};
    for (const char* name : kParamNames) {
        auto it = cfg.params.find(name);
        if (it == cfg.params.end()) continue;
        const std::vector<double> values = parse_list(it->second);
        std::vector<Params> next;
        for (const Params& base : grid)
            for (double v : values) {
                Params q = base;
                const std::string n = name;
                if (n == "p") q.e.p = v;
                else if (n == "q") q.e.q = v;
                else if (n == "alpha") q.e.alpha = v;
                else if (n == "beta") q.e.beta = v;
                else if (n == "a") q.e.a = v;
                else q.ell = v;
                next.push_back(q);
            }
        grid = std::move(next);
    }
    const std::vector<VerificationReport> rs = catalog::scan(c.id, grid, cfg.function, o, cfg.threads);
    emit_reports(out, rs, fmt);
    bool pass = true;
    for (const auto& r : rs) pass = pass && r.pass;
    return exit_for(pass);
}

int cmd_constants(const RunConfig& cfg, std::ostream& out) {
    if (cfg.id.empty()) throw ParameterError("--id is required; one of hardy_classic, hardy_weighted, ...");
    const auto id = special::constant_id_from_string(cfg.id);
    if (!id) {
        std::string known;
        for (special::ConstantId k : special::all_constant_ids()) known += (known.empty() ? "" : ", ") + special::to_string(k);
        throw ParameterError("unknown constant id '" + cfg.id + "'; known: " + known);
    }
    const Params p = params_of(cfg);
    const special::SharpConstant k = special::sharp_constant(*id, p.e, options_of(cfg).bliss_form);
    if (format_of(cfg) == Format::Json) {
        nlohmann::ordered_json j;
        j["id"] = special::to_string(*id);
        j["value"] = k.value;
        j["second"] = k.second ? nlohmann::ordered_json(*k.second) : nlohmann::ordered_json(nullptr);
        j["version"] = kToolVersion;
        out << j.dump(2) << '\n';
    } else {
        out << "id,value,second,version\n"
            << special::to_string(*id) << ',' << fmt_num(k.value) << ',' << (k.second ? fmt_num(*k.second) : "")
            << ',' << kToolVersion << '\n';
    }
    return kPass;
}

int cmd_lorentz(const RunConfig& cfg, std::ostream& out) {
    const std::string which = cfg.which.empty() ? "plain" : cfg.which;
    const auto cmp = lorentz::comparison_from_string(which);
    if (!cmp) throw ParameterError("--which must be plain, target or dual, got '" + which + "'");
    const Params p = params_of(cfg);
    const Format fmt = format_of(cfg);
    if (cfg.function.empty()) throw ParameterError("--f is required (step:[m:v;...] or an indicator/sampled function)");
    lorentz::LorentzParams lp{p.e.p, p.e.q, std::isnan(p.ell) ? kInf : p.ell};
    const lorentz::StepFunction f = cfg.function.rfind("step:", 0) == 0
                                        ? lorentz::parse_step(cfg.function)
                                        : lorentz::step_from_function(parse_function(cfg.function));
    VerificationReport r = lorentz::compare(f, lp, *cmp, cfg.tol.value_or(1e-5));
    r.seed = cfg.seed;
    emit_reports(out, {r}, fmt);
    return exit_for(r.pass);
}

int cmd_equiv(const RunConfig& cfg, std::ostream& out) {
    const std::string which = cfg.which.empty() ? "substitution" : cfg.which;
    const auto eq = catalog::equivalence_from_string(which);
    if (!eq) throw ParameterError("--which must be substitution, inversion or bennett-inversion, got '" + which + "'");
    const Params p = params_of(cfg);
    const Format fmt = format_of(cfg);
    if (cfg.function.empty()) throw ParameterError("--f is required");
    const FuncExpr f = parse_function(cfg.function, bindings_for(p.e, std::isnan(p.ell) ? 1.0 : p.ell));
    const catalog::EquivalenceReport r =
        catalog::equivalence_check(*eq, f, p, options_of(cfg), cfg.tol.value_or(1e-6));
    catalog::emit_equivalence(out, r, fmt);
    return exit_for(r.pass);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of sharp Hardy-type inequalities", "sharphardy"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string config_path;
    std::string seed_text, tol_text;
    std::map<std::string, std::string> param_text;
    app.add_option("--config", config_path, "JSON file with run settings; flags override it");
    app.add_option("--case", cfg.case_id, "catalog case id (see list)");
    for (const char* name : kParamNames)
        app.add_option(std::string("--") + name, param_text[name],
                       std::string("value of ") + name + (std::string(name) == "ell" ? " (inf allowed)" : ""));
    app.add_option("--f", cfg.function, "function spec, or 'random' with --seed");
    app.add_option("--tol", tol_text, "tolerance override");
    app.add_option("--log-weight", cfg.log_weight, "corrected | as-printed");
    app.add_option("--bliss-form", cfg.bliss_form, "corrected | printed");
    app.add_option("--seed", seed_text, "seed recorded in reports and used by --f random");
    app.add_option("--format", cfg.format, "json | csv");
    app.add_option("--out", cfg.out_path, "write the report here instead of stdout");
    app.add_option("--c", cfg.c, "family point(s) for equality, comma separated");
    app.add_option("--which", cfg.which, "lorentz: plain | target | dual; equiv: substitution | inversion | bennett-inversion");
    app.add_option("--id", cfg.id, "constant id for constants");
    app.add_option("--threads", cfg.threads, "scan worker threads (0 = hardware count)");

    const std::vector<std::pair<std::string, std::string>> subs = {
        {"list", "list catalog cases"},
        {"verify", "check one inequality at one function"},
        {"equality", "check the equality family at --c"},
        {"probe", "estimate the sharp constant by maximizing over the probe family"},
        {"scan", "verify over a grid of comma-separated parameter lists"},
        {"constants", "evaluate a sharp constant"},
        {"lorentz", "compare Lorentz quasi-norms of a step function"},
        {"equiv", "check a change-of-variable identity"},
    };
    for (const auto& [name, help] : subs) app.add_subcommand(name, help);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return kInput;
    }

    try {
        std::map<std::string, bool> given;
        for (const CLI::Option* o : app.get_options()) given[o->get_name(false, true)] = o->count() > 0;
        for (const auto& [k, v] : param_text)
            if (given["--" + k]) cfg.params[k] = v;
        if (!tol_text.empty()) cfg.tol = parse_num(tol_text);
        if (!seed_text.empty()) {
            try {
                cfg.seed = std::stoull(seed_text);
            } catch (const std::exception&) {
                throw ParameterError("--seed must be a non-negative integer, got '" + seed_text + "'");
            }
        }
        if (!config_path.empty()) {
            std::map<std::string, bool> plain;
            for (const auto& [k, v] : given) plain[k.substr(k.rfind('-') + 1)] = v;
            plain["log-weight"] = given["--log-weight"];
            plain["log_weight"] = given["--log-weight"];
            plain["bliss-form"] = given["--bliss-form"];
            plain["bliss_form"] = given["--bliss-form"];
            plain["function"] = given["--f"];
            load_config(config_path, cfg, plain);
        }

        std::ostringstream buffer;
        std::ostream& sink = cfg.out_path.empty() ? out : buffer;
        const std::string sub = app.get_subcommands().front()->get_name();
        int code = kPass;
        if (sub == "list") code = cmd_list(cfg, sink);
        else if (sub == "verify") code = cmd_verify(cfg, sink);
        else if (sub == "equality") code = cmd_equality(cfg, sink);
        else if (sub == "probe") code = cmd_probe(cfg, sink);
        else if (sub == "scan") code = cmd_scan(cfg, sink);
        else if (sub == "constants") code = cmd_constants(cfg, sink);
        else if (sub == "lorentz") code = cmd_lorentz(cfg, sink);
        else if (sub == "equiv") code = cmd_equiv(cfg, sink);

        if (!cfg.out_path.empty()) {
            std::ofstream file(cfg.out_path);
            file << buffer.str();
            if (!file) {
                err << "error: cannot write '" << cfg.out_path << "'\n";
                return kNumeric;
            }
        }
        return code;
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << '\n';
        return kInput;
    } catch (const NumericError& ex) {
        err << "numerical failure: " << ex.what() << '\n';
        return kNumeric;
    } catch (const std::exception& ex) {
        err << "failure: " << ex.what() << '\n';
        return kNumeric;
    }
}

}  // namespace sharphardy::cli
