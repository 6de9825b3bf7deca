#include "sharphardy/report.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "sharphardy/numfmt.hpp"

namespace sharphardy {

namespace {

using ojson = nlohmann::ordered_json;

ojson num(double v) {
    if (std::isfinite(v)) return v;
    return fmt_num(v);
}

ojson opt_num(const std::optional<double>& v) { return v ? num(*v) : ojson(nullptr); }

ojson to_json(const VerificationReport& r) {
    ojson j;
    j["case_id"] = r.case_id;
    j["regime"] = r.regime;
    j["params"] = {{"p", num(r.params.e.p)},         {"q", num(r.params.e.q)},
                   {"alpha", num(r.params.e.alpha)}, {"beta", num(r.params.e.beta)},
                   {"a", num(r.params.e.a)},         {"ell", num(r.params.ell)}};
    j["function"] = r.function;
    j["direction"] = to_string(r.direction);
    j["lhs"] = num(r.lhs);
    j["rhs"] = num(r.rhs);
    j["constant"] = num(r.constant);
    j["constant2"] = opt_num(r.constant2);
    j["ratio"] = num(r.ratio);
    j["margin"] = num(r.margin);
    j["margin2"] = opt_num(r.margin2);
    j["pass"] = r.pass;
    j["tol"] = num(r.tol);
    j["quad_error"] = num(r.quad_error);
    j["error"] = r.error.empty() ? ojson(nullptr) : ojson(r.error);
    j["seed"] = r.seed ? ojson(*r.seed) : ojson(nullptr);
    j["version"] = kToolVersion;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_opt(const std::optional<double>& v) { return v ? fmt_num(*v) : std::string(); }

}  // namespace

std::string to_string(Direction d) {
    switch (d) {
        case Direction::LEQ: return "LEQ";
        case Direction::GEQ: return "GEQ";
        case Direction::EQ: return "EQ";
    }
    return "?";
}

double relative_slack(double small, double big) {
    const double scale = std::max(std::abs(small), std::abs(big));
    if (scale == 0.0) return 0.0;
    return (big - small) / scale;
}

namespace {

double eq_margin(double a, double b) { return -std::abs(relative_slack(a, b)); }

void finish(VerificationReport& r) {
    r.pass = r.error.empty() && r.margin >= -r.tol && (!r.margin2 || *r.margin2 >= -r.tol);
}

}  // namespace

void score(VerificationReport& r) {
    const double lo = r.constant * r.rhs;
    r.ratio = lo != 0.0 ? r.lhs / lo : (r.lhs == 0.0 ? 1.0 : kInf);
    if (r.constant2) {
        const double hi = *r.constant2 * r.rhs;
        switch (r.direction) {
            case Direction::LEQ:
                r.margin = relative_slack(lo, r.lhs);
                r.margin2 = relative_slack(r.lhs, hi);
                break;
            case Direction::GEQ:
                r.margin = relative_slack(r.lhs, lo);
                r.margin2 = relative_slack(hi, r.lhs);
                break;
            case Direction::EQ:
                r.margin = eq_margin(lo, r.lhs);
                r.margin2 = eq_margin(r.lhs, hi);
                break;
        }
    } else {
        switch (r.direction) {
            case Direction::LEQ: r.margin = relative_slack(r.lhs, lo); break;
            case Direction::GEQ: r.margin = relative_slack(lo, r.lhs); break;
            case Direction::EQ: r.margin = eq_margin(r.lhs, lo); break;
        }
    }
    finish(r);
}

void score_folded(VerificationReport& r) {
    r.ratio = r.rhs != 0.0 ? r.lhs / r.rhs : (r.lhs == 0.0 ? 1.0 : kInf);
    switch (r.direction) {
        case Direction::LEQ: r.margin = relative_slack(r.lhs, r.rhs); break;
        case Direction::GEQ: r.margin = relative_slack(r.rhs, r.lhs); break;
        case Direction::EQ: r.margin = eq_margin(r.lhs, r.rhs); break;
    }
    r.margin2.reset();
    finish(r);
}

std::optional<Format> format_from_string(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return std::nullopt;
}

void emit_reports(std::ostream& out, const std::vector<VerificationReport>& reports, Format fmt) {
    if (fmt == Format::Json) {
        ojson arr = ojson::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
        return;
    }
    out << "case_id,regime,p,q,alpha,beta,a,ell,function,direction,lhs,rhs,constant,constant2,"
           "ratio,margin,margin2,pass,tol,quad_error,error,seed,version\n";
    for (const auto& r : reports) {
        const Exponents& e = r.params.e;
        out << csv_field(r.case_id) << ',' << csv_field(r.regime) << ',' << fmt_num(e.p) << ','
            << fmt_num(e.q) << ',' << fmt_num(e.alpha) << ',' << fmt_num(e.beta) << ',' << fmt_num(e.a)
            << ',' << fmt_num(r.params.ell) << ',' << csv_field(r.function) << ','
            << to_string(r.direction) << ',' << fmt_num(r.lhs) << ',' << fmt_num(r.rhs) << ','
            << fmt_num(r.constant) << ',' << csv_opt(r.constant2) << ',' << fmt_num(r.ratio) << ','
            << fmt_num(r.margin) << ',' << csv_opt(r.margin2) << ',' << (r.pass ? "true" : "false")
            << ',' << fmt_num(r.tol) << ',' << fmt_num(r.quad_error) << ',' << csv_field(r.error) << ','
            << (r.seed ? std::to_string(*r.seed) : std::string()) << ',' << kToolVersion << '\n';
    }
}

}  // namespace sharphardy
