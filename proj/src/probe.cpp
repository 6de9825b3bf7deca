#include <cmath>
#include <functional>
#include <limits>

#include "json.hpp"

#include "sharphardy/catalog.hpp"
#include "sharphardy/error.hpp"
#include "sharphardy/numfmt.hpp"

namespace sharphardy::catalog {

namespace {

constexpr double kGolden = 0.6180339887498949;

struct Search {
    const InequalityCase& c;
    const Params& params;
    const Options& opt;
    ProbeResult& out;
    bool inverted;  // two-bound lower constant: the chain runs C rhs <= lhs under LEQ

    double ratio(const FuncExpr& f, std::vector<double> at) {
        const VerificationReport r = verify(c.id, f, params, opt);
        out.constant = r.constant;
        const double crhs = r.constant * r.rhs;
        bool lhs_over = r.direction != Direction::GEQ;
        if (inverted) lhs_over = !lhs_over;
        const double v = lhs_over ? r.lhs / crhs : crhs / r.lhs;
        out.trace.push_back({at, v});
        if (out.argmax.empty() || v > out.sup_ratio) {
            out.sup_ratio = v;
            out.argmax = std::move(at);
            out.argmax_function = f.to_string();
        }
        return v;
    }
};

// Maximizes phi over [lo, hi] by golden-section search.
double golden_max(const std::function<double(double)>& phi, double lo, double hi, int iterations) {
    double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
    double f1 = phi(x1), f2 = phi(x2);
    for (int i = 0; i < iterations; ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = phi(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = phi(x1);
        }
    }
    return f1 > f2 ? x1 : x2;
}

// Ratio along eps_k = 2^-k until it settles to 1e-6.
void boundary_sequence(Search& s, const std::function<FuncExpr(double)>& member) {
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int k = 1; k <= 40; ++k) {
        const double eps = std::ldexp(1.0, -k);
        double v;
        try {
            v = s.ratio(member(eps), {eps});
        } catch (const NumericError&) {
            if (s.out.trace.empty()) throw;
            break;
        }
        if (std::abs(v - prev) < 1e-6) break;
        prev = v;
    }
}

void equality_family_search(Search& s, double ell) {
    const bool lower = s.c.domain == Domain::Kind::Lower;
    double lo, hi;
    if (lower) {
        lo = std::isfinite(ell) ? std::log(ell * 1e-3) : std::log(1e-3);
        hi = std::isfinite(ell) ? std::log(ell * (1.0 - 1e-3)) : std::log(1e3);
    } else {
        lo = ell > 0.0 ? std::log(ell * (1.0 + 1e-3)) : std::log(1e-3);
        hi = ell > 0.0 ? std::log(ell * 1e3) : std::log(1e3);
    }
    golden_max(
        [&](double t) {
            const double c = std::exp(t);
            return s.ratio(equality_member(s.c.id, s.params, c), {c});
        },
        lo, hi, 24);
}

void bliss_search(Search& s, const Exponents& e) {
    const bool dual = s.c.id == "PQd";
    const double m_min = 1.0 - e.beta / e.p;
    auto member = [dual, m_min](double log_b, double t) {
        const double b = std::exp(log_b);
        const double m = m_min + std::exp(t);
        const FuncExpr f = FuncExpr::bliss(1.0, b, m / b);
        return dual ? FuncExpr::warp(f, -1.0) : f;
    };
    auto value = [&](double log_b, double t) {
        const double b = std::exp(log_b);
        const double c = (m_min + std::exp(t)) / b;
        try {
            return s.ratio(member(log_b, t), {b, c});
        } catch (const NumericError&) {
            return 0.0;
        }
    };
    double log_b = 0.0, t = 0.0;
    for (int round = 0; round < 3; ++round) {
        log_b = golden_max([&](double x) { return value(x, t); }, std::log(0.2), std::log(5.0), 16);
        t = golden_max([&](double x) { return value(log_b, x); }, std::log(0.05), std::log(8.0), 16);
    }
}

}  // namespace

ProbeResult sharpness_probe(const std::string& case_id, const Params& params, const Options& opt) {
    const InequalityCase& c = find_case(case_id);
    if (!c.probe_family)
        throw UnsupportedCase("case " + c.id + " has no registered sharpness probe family");
    const double ell = resolve_ell(c, params.ell);
    Params pp{params.e, ell};
    if (c.id == "PQ" || c.id == "PQd") pp.e.alpha = pp.e.q * pp.e.beta / pp.e.p;
    const Regime& reg = select_regime(c, pp.e);

    ProbeResult out;
    out.case_id = c.id;
    out.regime = reg.name;
    out.params = pp;
    out.family = *c.probe_family;
    Search s{c, pp, opt, out, c.two_bounds};

    const Exponents& e = pp.e;
    const double p = e.p;
    const std::string& id = c.id;
    if (id == "H1" || id == "H2") {
        if (!(p > 1.0)) throw UnsupportedCase("the " + id + " probe family needs p > 1");
        const double a = id == "H1" ? 0.0 : e.a;
        const double sigma = -(1.0 + a) / p;
        boundary_sequence(s, [sigma](double eps) {
            return FuncExpr::log_power(1.0, sigma + eps, 0.0, LogForm::LOverX, 1.0);
        });
    } else if (id == "H3") {
        const double sigma = -(1.0 + e.a) / p;
        boundary_sequence(s, [sigma](double eps) { return FuncExpr::power(1.0, sigma + eps); });
    } else if (id == "C1") {
        boundary_sequence(s, [](double eps) { return FuncExpr::log_power(1.0, eps, 0.0, LogForm::LOverX, 1.0); });
    } else if (id == "C2") {
        const double sign = p > 0.0 ? 1.0 : -1.0;
        boundary_sequence(s, [sign](double eps) { return FuncExpr::power(1.0, sign * eps); });
    } else if (id == "E1" || id == "E2") {
        if (id == "E2" && ell == 0.0) throw UnsupportedCase("the E2 probe family needs ell > 0");
        const double al = e.alpha;
        const bool dual = id == "E2";
        boundary_sequence(s, [al, p, dual](double eps) {
            const double sigma = (al + std::abs(al) * eps) / p;
            return FuncExpr::power(1.0, dual ? -sigma - 1.0 : sigma - 1.0);
        });
    } else if (id == "PQ" || id == "PQd") {
        bliss_search(s, e);
    } else if (c.equality_family) {
        equality_family_search(s, ell);
    } else {
        throw UnsupportedCase("case " + id + " has no registered sharpness probe family");
    }
    out.pass = out.sup_ratio <= 1.0 + out.tol;
    return out;
}

void emit_probe(std::ostream& out, const ProbeResult& r, Format fmt) {
    const Exponents& e = r.params.e;
    if (fmt == Format::Json) {
        using ojson = nlohmann::ordered_json;
        auto num = [](double v) -> ojson {
            if (std::isfinite(v)) return v;
            return fmt_num(v);
        };
        ojson j;
        j["case_id"] = r.case_id;
        j["regime"] = r.regime;
        j["params"] = {{"p", num(e.p)},         {"q", num(e.q)}, {"alpha", num(e.alpha)},
                       {"beta", num(e.beta)}, {"a", num(e.a)}, {"ell", num(r.params.ell)}};
        j["family"] = r.family;
        j["sup_ratio"] = num(r.sup_ratio);
        j["constant"] = num(r.constant);
        ojson am = ojson::array();
        for (double v : r.argmax) am.push_back(num(v));
        j["argmax"] = am;
        j["argmax_function"] = r.argmax_function;
        ojson tr = ojson::array();
        for (const ProbePoint& pt : r.trace) {
            ojson at = ojson::array();
            for (double v : pt.at) at.push_back(num(v));
            tr.push_back({{"at", at}, {"ratio", num(pt.ratio)}});
        }
        j["trace"] = tr;
        j["tol"] = num(r.tol);
        j["pass"] = r.pass;
        j["version"] = kToolVersion;
        out << j.dump(2) << '\n';
        return;
    }
    out << "case_id,regime,p,q,alpha,beta,a,ell,family,sup_ratio,constant,argmax,argmax_function,tol,pass,version\n";
    std::string am;
    for (double v : r.argmax) am += (am.empty() ? "" : ";") + fmt_num(v);
    out << r.case_id << ',' << r.regime << ',' << fmt_num(e.p) << ',' << fmt_num(e.q) << ',' << fmt_num(e.alpha)
        << ',' << fmt_num(e.beta) << ',' << fmt_num(e.a) << ',' << fmt_num(r.params.ell) << ",\"" << r.family
        << "\"," << fmt_num(r.sup_ratio) << ',' << fmt_num(r.constant) << ",\"" << am << "\",\"" << r.argmax_function
        << "\"," << fmt_num(r.tol) << ',' << (r.pass ? "true" : "false") << ',' << kToolVersion << '\n';
}

}  // namespace sharphardy::catalog
