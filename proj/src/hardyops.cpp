#include "sharphardy/hardyops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "sharphardy/error.hpp"
#include "sharphardy/numfmt.hpp"
#include "sharphardy/special.hpp"

namespace sharphardy {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();
constexpr double kFunctionalRtol = 1e-10;

double s_lo(const Domain& d) { return d.lo() > 0.0 ? std::log(d.lo()) : kNegInf; }
double s_hi(const Domain& d) { return std::isfinite(d.hi()) ? std::log(d.hi()) : kPosInf; }

// a * b with the convention 0 * (+-inf) = 0, so that a zero exponent
// switches a factor off even where its base vanishes.
double times(double a, double b) { return a == 0.0 ? 0.0 : a * b; }

// Integral of exp(logh(s)) over (s0, s1). The integrand is rescaled by its
// largest sampled value first, so the quadrature works on O(1) numbers and
// the relative tolerance is meaningful however small the functional is.
FunctionalValue integrate_log(const std::function<double(double)>& logh, double s0, double s1,
                              std::vector<double> cuts) {
    FunctionalValue out;
    if (!(s1 > s0)) return out;
    std::vector<double> probes = cuts;
    const double mid = std::isfinite(s0) && std::isfinite(s1) ? 0.5 * (s0 + s1)
                       : std::isfinite(s1)                    ? s1 - 1.0
                       : std::isfinite(s0)                    ? s0 + 1.0
                                                              : 0.0;
    probes.push_back(mid);
    for (double step = 1.0 / 64; step <= 2048.0; step *= 2.0) {
        probes.push_back(mid - step);
        probes.push_back(mid + step);
    }
    // Every piece between cuts gets probes of its own, so a support that is
    // narrow next to the wide sweep above is still seen.
    std::vector<double> ends = cuts;
    ends.push_back(s0);
    ends.push_back(s1);
    std::sort(ends.begin(), ends.end());
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
        const double a = ends[i], b = ends[i + 1];
        if (std::isfinite(a) && std::isfinite(b)) {
            for (double frac : {0.01, 0.5, 0.99}) probes.push_back(a + frac * (b - a));
        } else if (std::isfinite(b)) {
            probes.push_back(b - 1.0);
        } else if (std::isfinite(a)) {
            probes.push_back(a + 1.0);
        }
    }
    double ref = kNegInf;
    for (double t : probes) {
        if (!(t > s0) || !(t < s1)) continue;
        const double v = logh(t);
        if (std::isnan(v)) continue;
        if (v == kPosInf) throw DivergenceError("functional integrand is infinite at x=" + fmt_num(std::exp(t)));
        ref = std::max(ref, v);
    }
    if (ref == kNegInf) {
        // Probes may all miss a narrow support; fall back to the cut points'
        // neighbourhoods before declaring the integrand zero.
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double v = logh(0.5 * (cuts[i] + cuts[i + 1]));
            if (std::isfinite(v)) ref = std::max(ref, v);
        }
        if (ref == kNegInf) return out;
    }
    auto g = [&logh, ref](double s) {
        const double v = logh(s);
        if (v == kNegInf) return 0.0;
        return std::exp(v - ref);
    };
    std::sort(cuts.begin(), cuts.end());
    // A jump located a few ulps off in s moves about 1e-15 of the rescaled
    // integral, so there is no point asking for less absolute error.
    const quad::QuadResult r = quad::integrate_interval(g, s0, s1, kFunctionalRtol, 1e-14, cuts);
    const double scale = std::exp(ref);
    out.value = r.value * scale;
    out.abs_error = r.abs_error_estimate * scale;
    if (!std::isfinite(out.value)) throw DivergenceError("functional value overflows");
    return out;
}

std::vector<double> log_cuts(const FuncExpr& f, const Domain& dom) {
    std::vector<double> out;
    for (double b : f.breakpoints())
        if (b > dom.lo() && b < dom.hi()) out.push_back(std::log(b));
    return out;
}

// log L(s) for the Bennett logarithm on the given domain.
double bennett_log(double s, const Domain& dom, LogVariant v) {
    const double ll = std::log(dom.ell());
    if (dom.kind() == Domain::Kind::Upper) return std::log(s + 1.0 - ll);
    const double L = v == LogVariant::Corrected ? 1.0 + ll - s : ll - s;
    return L > 0.0 ? std::log(L) : kNegInf;
}

void check_common(const FuncExpr& f, const Exponents& e, const Domain& dom) {
    if (e.p == 0.0 || !std::isfinite(e.p)) throw ParameterError("p must be finite and non-zero");
    if (e.p < 0.0 && !strictly_positive(f, dom))
        throw ParameterError("p < 0 requires a strictly positive function on " + dom.describe() +
                             "; indicator inputs are refused");
}

}  // namespace

std::string to_string(LogVariant v) { return v == LogVariant::Corrected ? "corrected" : "as-printed"; }

std::optional<LogVariant> log_variant_from_string(const std::string& s) {
    if (s == "corrected") return LogVariant::Corrected;
    if (s == "as-printed" || s == "as_printed") return LogVariant::AsPrinted;
    return std::nullopt;
}

double TargetWeight::log_value(double s, const Exponents& e, const Domain& dom) const {
    const double ell = dom.ell();
    switch (kind) {
        case Kind::One:
        case Kind::LogBennett: return 0.0;
        case Kind::OneMinusLinear:
        case Kind::OneMinusPower: {
            if (std::isinf(ell)) return 0.0;
            const double k = kind == Kind::OneMinusLinear ? 1.0 : kappa;
            const double d = s - std::log(ell);
            if (d >= 0.0) return kNegInf;
            return std::log(-std::expm1(k * d));
        }
        case Kind::DualOneMinusPower: {
            if (ell == 0.0) return 0.0;
            const double d = std::log(ell) - s;
            if (d >= 0.0) return kNegInf;
            return std::log(-std::expm1(kappa * d));
        }
        case Kind::TruncBetaT: {
            const double u = e.alpha - e.p + 1.0, v = e.p;
            if (std::isinf(ell)) return std::log(e.alpha) + special::log_beta(u, v);
            const double d = s - std::log(ell);
            if (d >= 0.0) return kNegInf;
            const double comp = -std::expm1(d);
            const double b = comp > 0.5 ? special::trunc_beta(std::exp(d), u, v)
                                        : special::trunc_beta_complement(comp, u, v);
            return std::log(e.alpha) + std::log(b);
        }
        case Kind::TruncBetaT0:
        case Kind::TruncBetaB0: {
            const double u = e.alpha, v = e.p;
            const double lead = kind == Kind::TruncBetaT0 ? std::log(e.alpha) : 0.0;
            if (ell == 0.0) return lead + special::log_beta(u, v);
            const double d = std::log(ell) - s;
            if (d >= 0.0) return kNegInf;
            const double comp = -std::expm1(d);
            const double b = comp > 0.5 ? special::trunc_beta(std::exp(d), u, v)
                                        : special::trunc_beta_complement(comp, u, v);
            return lead + std::log(b);
        }
    }
    return 0.0;
}

std::string TargetWeight::describe() const {
    switch (kind) {
        case Kind::One: return "1";
        case Kind::OneMinusLinear: return "1-x/ell";
        case Kind::OneMinusPower: return "1-(x/ell)^" + fmt_num(kappa);
        case Kind::TruncBetaT: return "alpha*beta_{x/ell}(alpha-p+1,p)";
        case Kind::TruncBetaT0: return "alpha*beta_{ell/x}(alpha,p)";
        case Kind::TruncBetaB0: return "beta_{ell/x}(alpha,p)";
        case Kind::DualOneMinusPower: return "1-(ell/x)^" + fmt_num(kappa);
        case Kind::LogBennett: return "log-bennett(" + to_string(log_variant) + ")";
    }
    return "?";
}

std::string to_string(FunctionalKind k) {
    switch (k) {
        case FunctionalKind::LhsAvg: return "LhsAvg";
        case FunctionalKind::LhsCum: return "LhsCum";
        case FunctionalKind::LhsDual: return "LhsDual";
        case FunctionalKind::RhsWeighted: return "RhsWeighted";
        case FunctionalKind::RhsLebesgue: return "RhsLebesgue";
        case FunctionalKind::BennettLhsPair: return "BennettLhsPair";
        case FunctionalKind::BennettRhs: return "BennettRhs";
    }
    return "?";
}

FunctionalValue weighted_functional(FunctionalKind kind, const FuncExpr& f, const Exponents& e, const Domain& dom,
                                    const TargetWeight& target) {
    check_common(f, e, dom);
    const double p = e.p, al = e.alpha;
    const double s0 = s_lo(dom), s1 = s_hi(dom);
    const double lebesgue = dom.measure() == Measure::Lebesgue ? 1.0 : 0.0;
    const std::vector<double> cuts = log_cuts(f, dom);
    if ((kind == FunctionalKind::BennettLhsPair || kind == FunctionalKind::BennettRhs) &&
        (dom.ell() == 0.0 || std::isinf(dom.ell())))
        throw ParameterError("Bennett functionals need 0 < ell < inf");

    auto w = [&](double s) { return target.kind == TargetWeight::Kind::One ? 0.0 : target.log_value(s, e, dom); };

    std::function<double(double)> logh;
    switch (kind) {
        case FunctionalKind::LhsAvg:
            logh = [&](double s) {
                return times(p, log_cumulative(f, s) - s) + e.a * s + lebesgue * s + w(s);
            };
            break;
        case FunctionalKind::LhsCum:
            logh = [&](double s) { return times(p, log_cumulative(f, s)) - al * s + w(s); };
            break;
        case FunctionalKind::LhsDual:
            logh = [&](double s) { return times(p, log_tail(f, s)) + al * s + w(s); };
            break;
        case FunctionalKind::RhsWeighted: {
            const double sign = dom.kind() == Domain::Kind::Lower ? -1.0 : 1.0;
            logh = [&, sign](double s) {
                const double wt = w(s);
                if (wt == kNegInf) return kNegInf;
                return times(p, s + log_evaluate(f, s)) + sign * al * s + wt;
            };
            break;
        }
        case FunctionalKind::RhsLebesgue:
            logh = [&](double s) {
                const double wt = w(s);
                if (wt == kNegInf) return kNegInf;
                return times(p, log_evaluate(f, s)) + e.a * s + lebesgue * s + wt;
            };
            break;
        case FunctionalKind::BennettLhsPair: {
            const bool upper = dom.kind() == Domain::Kind::Upper;
            const double ll = std::log(dom.ell());
            const double total_log = upper ? log_tail(f, ll) : log_cumulative(f, ll);
            FunctionalValue out;
            out.value = total_log == kNegInf ? 0.0 : std::exp(p * total_log);
            const LogVariant v = target.kind == TargetWeight::Kind::LogBennett ? target.log_variant
                                                                                : LogVariant::Corrected;
            auto h = [&, upper, v](double s) {
                const double inner = upper ? log_tail(f, s) : log_cumulative(f, s);
                return times(al * p - 1.0, bennett_log(s, dom, v)) + times(p, inner);
            };
            const FunctionalValue second = integrate_log(h, s0, s1, cuts);
            out.second = second.value;
            out.abs_error = second.abs_error;
            return out;
        }
        case FunctionalKind::BennettRhs: {
            const LogVariant v = target.kind == TargetWeight::Kind::LogBennett ? target.log_variant
                                                                                : LogVariant::Corrected;
            logh = [&, v](double s) {
                return times(p, s + log_evaluate(f, s)) + times((1.0 + al) * p - 1.0, bennett_log(s, dom, v));
            };
            break;
        }
    }
    return integrate_log(logh, s0, s1, cuts);
}

quad::Integrand hardy_avg(const FuncExpr& f) {
    quad::Integrand g;
    g.eval = [f](double x) { return cumulative(f, x) / x; };
    g.eval_log = [f](double s) {
        const double v = log_cumulative(f, s);
        return v == kNegInf ? 0.0 : std::exp(v - s);
    };
    g.breakpoints = f.breakpoints();
    return g;
}

quad::Integrand dual_hardy(const FuncExpr& f) {
    quad::Integrand g;
    g.eval = [f](double x) { return tail(f, x); };
    g.eval_log = [f](double s) {
        const double v = log_tail(f, s);
        return v == kNegInf ? 0.0 : std::exp(v);
    };
    g.breakpoints = f.breakpoints();
    return g;
}

}  // namespace sharphardy
