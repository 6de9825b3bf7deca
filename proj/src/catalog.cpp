#include "sharphardy/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "json.hpp"

#include "sharphardy/error.hpp"
#include "sharphardy/lorentz.hpp"
#include "sharphardy/numfmt.hpp"
#include "sharphardy/parse.hpp"
#include "sharphardy/quad.hpp"

namespace sharphardy::catalog {

namespace {

using special::ConstantId;
using TK = TargetWeight::Kind;
using FK = FunctionalKind;

Regime regime(std::string name, std::string condition, std::function<bool(const Exponents&)> holds,
              Direction d) {
    return {std::move(name), std::move(condition), std::move(holds), d};
}

// Regimes shared by the cases whose direction flips at p = 1.
std::vector<Regime> flip_at_one(Direction above, std::function<bool(const Exponents&)> extra,
                                const std::string& extra_text) {
    const Direction below = above == Direction::LEQ ? Direction::GEQ : Direction::LEQ;
    auto with = [extra](std::function<bool(double)> on_p) {
        return [extra, on_p](const Exponents& e) { return on_p(e.p) && extra(e); };
    };
    const std::string tail = extra_text.empty() ? "" : ", " + extra_text;
    return {
        regime("p>1", "p > 1" + tail, with([](double p) { return p > 1.0; }), above),
        regime("p=1", "p = 1" + tail, with([](double p) { return p == 1.0; }), Direction::EQ),
        regime("0<p<1", "0 < p < 1" + tail, with([](double p) { return p > 0.0 && p < 1.0; }), below),
    };
}

auto any_exponents = [](const Exponents&) { return true; };
auto alpha_below_p = [](const Exponents& e) { return e.alpha > 0.0 && e.alpha < e.p; };

std::vector<InequalityCase> build_cases() {
    std::vector<InequalityCase> v;

    {
        InequalityCase c;
        c.id = "H1";
        c.label = "classical Hardy inequality, dx form";
        c.measure = Measure::Lebesgue;
        c.default_ell = kInf;
        c.regimes = {
            regime("p>1", "p > 1", [](const Exponents& e) { return e.p > 1.0; }, Direction::LEQ),
            regime("0<p<1", "0 < p < 1", [](const Exponents& e) { return e.p > 0.0 && e.p < 1.0; }, Direction::GEQ),
            regime("p<0", "p < 0, f > 0", [](const Exponents& e) { return e.p < 0.0; }, Direction::LEQ),
        };
        c.lhs = FK::LhsAvg;
        c.rhs = FK::RhsLebesgue;
        c.target = TK::One;
        c.constant_id = ConstantId::HardyClassic;
        c.constant = "|p/(p-1)|^p";
        c.probe_family = "x^(eps-1/p) on (0,1), eps -> 0";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "H2";
        c.label = "Hardy inequality with power weight x^a, dx form";
        c.measure = Measure::Lebesgue;
        c.default_ell = kInf;
        c.regimes = {
            regime("p>1", "p > 1, a < p-1", [](const Exponents& e) { return e.p > 1.0 && e.a < e.p - 1.0; },
                   Direction::LEQ),
            regime("0<p<1", "0 < p < 1, a > p-1",
                   [](const Exponents& e) { return e.p > 0.0 && e.p < 1.0 && e.a > e.p - 1.0; }, Direction::GEQ),
            regime("p<0", "p < 0, a > p-1, f > 0", [](const Exponents& e) { return e.p < 0.0 && e.a > e.p - 1.0; },
                   Direction::LEQ),
        };
        c.lhs = FK::LhsAvg;
        c.rhs = FK::RhsLebesgue;
        c.target = TK::One;
        c.constant_id = ConstantId::HardyWeighted;
        c.constant = "|p/(p-1-a)|^p";
        c.probe_family = "x^(eps-(1+a)/p) on (0,1), eps -> 0";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "H3";
        c.label = "Hardy inequality with power weight on (0,ell), target 1-(x/ell)^((p-1-a)/p)";
        c.measure = Measure::Lebesgue;
        c.regimes = {regime("p>1", "p > 1, a < p-1",
                            [](const Exponents& e) { return e.p > 1.0 && e.a < e.p - 1.0; }, Direction::LEQ)};
        c.lhs = FK::LhsAvg;
        c.rhs = FK::RhsLebesgue;
        c.target = TK::OneMinusPower;
        c.constant_id = ConstantId::HardyWeighted;
        c.constant = "(p/(p-1-a))^p";
        c.probe_family = "x^(eps-(1+a)/p), eps -> 0";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "C1";
        c.label = "Hardy inequality in dx/x form on (0,inf), constant 1";
        c.ell_rule = EllRule::FixedInfinite;
        c.default_ell = kInf;
        c.regimes = flip_at_one(Direction::LEQ, any_exponents, "");
        c.regimes.push_back(
            regime("p<0", "p < 0, f > 0", [](const Exponents& e) { return e.p < 0.0; }, Direction::LEQ));
        c.lhs = FK::LhsAvg;
        c.rhs = FK::RhsLebesgue;
        c.target = TK::One;
        c.constant = "1";
        c.equality_family = "A chi_(c/2,c) at p = 1";
        c.probe_family = "x^eps chi_(0,1), eps -> 0";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "C2";
        c.label = "Hardy inequality in dx/x form on (0,ell), target 1-x/ell";
        c.regimes = flip_at_one(Direction::LEQ, any_exponents, "");
        c.regimes.push_back(
            regime("p<0", "p < 0, f > 0", [](const Exponents& e) { return e.p < 0.0; }, Direction::LEQ));
        c.lhs = FK::LhsAvg;
        c.rhs = FK::RhsLebesgue;
        c.target = TK::OneMinusLinear;
        c.constant = "1";
        c.probe_family = "x^(+-eps), eps -> 0";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "E1";
        c.label = "weighted Hardy inequality for int_0^x f on (0,ell), target 1-(x/ell)^(alpha/p)";
        c.regimes = {
            regime("a1", "p >= 1, alpha > 0", [](const Exponents& e) { return e.p >= 1.0 && e.alpha > 0.0; },
                   Direction::LEQ),
            regime("a2", "p < 0, alpha < 0, f > 0", [](const Exponents& e) { return e.p < 0.0 && e.alpha < 0.0; },
                   Direction::LEQ),
            regime("b", "0 < p < 1, alpha > 0",
                   [](const Exponents& e) { return e.p > 0.0 && e.p < 1.0 && e.alpha > 0.0; }, Direction::GEQ),
        };
        c.lhs = FK::LhsCum;
        c.rhs = FK::RhsWeighted;
        c.target = TK::OneMinusPower;
        c.constant_id = ConstantId::HardyReversedFrac;
        c.constant = "(p/alpha)^p";
        c.probe_family = "x^(sigma-1), sigma = (alpha+|alpha| eps)/p, eps -> 0";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "E2";
        c.label = "weighted dual Hardy inequality for int_x^inf f on (ell,inf), target 1-(ell/x)^(alpha/p)";
        c.domain = Domain::Kind::Upper;
        c.regimes = {
            regime("c1,d", "p = 1, alpha > 0", [](const Exponents& e) { return e.p == 1.0 && e.alpha > 0.0; },
                   Direction::EQ),
            regime("c1", "p > 1, alpha > 0", [](const Exponents& e) { return e.p > 1.0 && e.alpha > 0.0; },
                   Direction::LEQ),
            regime("c2", "p < 0, alpha < 0, f > 0", [](const Exponents& e) { return e.p < 0.0 && e.alpha < 0.0; },
                   Direction::LEQ),
            regime("d", "0 < p < 1, alpha > 0",
                   [](const Exponents& e) { return e.p > 0.0 && e.p < 1.0 && e.alpha > 0.0; }, Direction::GEQ),
        };
        c.lhs = FK::LhsDual;
        c.rhs = FK::RhsWeighted;
        c.target = TK::DualOneMinusPower;
        c.constant_id = ConstantId::HardyReversedFrac;
        c.constant = "(p/alpha)^p";
        c.probe_family = "x^(-sigma-1), sigma = (alpha+|alpha| eps)/p, eps -> 0";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "L1";
        c.label = "power inequality (int_0^b f)^p vs p int_0^b y^(p-1) f^p, f non-increasing";
        c.measure = Measure::Lebesgue;
        c.regimes = flip_at_one(Direction::GEQ, any_exponents, "");
        c.cone = Cone::NonIncreasing;
        c.constant = "p";
        c.equality_family = "A chi_(0,c), 0 < c < ell";
        c.probe_family = "equality family over c";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "L2";
        c.label = "power inequality (int_0^b f)^p vs p int_0^b (b-y)^(p-1) f^p, f non-decreasing";
        c.measure = Measure::Lebesgue;
        c.regimes = flip_at_one(Direction::GEQ, any_exponents, "");
        c.cone = Cone::NonDecreasing;
        c.constant = "p";
        c.equality_family = "A chi_(c,ell), 0 < c < ell";
        c.probe_family = "equality family over c";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "R1";
        c.label = "reversed Hardy inequality, f non-increasing on (0,ell), target 1-(x/ell)^alpha";
        c.regimes = flip_at_one(Direction::GEQ, alpha_below_p, "0 < alpha < p");
        c.cone = Cone::NonIncreasing;
        c.lhs = FK::LhsCum;
        c.rhs = FK::RhsWeighted;
        c.target = TK::OneMinusPower;
        c.constant_id = ConstantId::HardyReversedFrac;
        c.constant = "p/alpha";
        c.equality_family = "A chi_(0,c), 0 < c < ell";
        c.probe_family = "equality family over c";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "R2";
        c.label = "reversed Hardy inequality, f non-decreasing on (0,ell), truncated-beta target";
        c.regimes = flip_at_one(
            Direction::GEQ, [](const Exponents& e) { return e.alpha >= e.p; }, "alpha >= p");
        c.cone = Cone::NonDecreasing;
        c.lhs = FK::LhsCum;
        c.rhs = FK::RhsWeighted;
        c.target = TK::TruncBetaT;
        c.constant_id = ConstantId::HardyReversedFrac;
        c.constant = "p/alpha";
        c.equality_family = "A chi_(c,ell), 0 < c < ell";
        c.probe_family = "equality family over c";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "R3";
        c.label = "reversed dual Hardy inequality, f non-increasing on (ell,inf), truncated-beta target";
        c.domain = Domain::Kind::Upper;
        c.regimes = flip_at_one(
            Direction::GEQ, [](const Exponents& e) { return e.alpha > 0.0; }, "alpha > 0");
        c.cone = Cone::NonIncreasing;
        c.lhs = FK::LhsDual;
        c.rhs = FK::RhsWeighted;
        c.target = TK::TruncBetaT0;
        c.constant_id = ConstantId::HardyReversedFrac;
        c.constant = "p/alpha";
        c.equality_family = "A chi_(ell,c), c > ell";
        c.probe_family = "equality family over c";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "R3∞";
        c.label = "reversed dual Hardy inequality on (0,inf), f non-increasing, constant p B(p,alpha)";
        c.domain = Domain::Kind::Upper;
        c.ell_rule = EllRule::FixedZero;
        c.default_ell = 0.0;
        c.regimes = flip_at_one(
            Direction::GEQ, [](const Exponents& e) { return e.alpha > 0.0; }, "alpha > 0");
        c.cone = Cone::NonIncreasing;
        c.lhs = FK::LhsDual;
        c.rhs = FK::RhsWeighted;
        c.target = TK::One;
        c.constant_id = ConstantId::TruncTargetT0;
        c.constant = "p B(p,alpha)";
        c.equality_family = "A chi_(0,c), c > 0";
        c.probe_family = "equality family over c";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "TS";
        c.label = "two-sided estimate (p/alpha)^(1/p) I1 <= I2 <= (p/alpha) I1, f non-increasing on (0,ell)";
        c.regimes = {
            regime("p>1", "p > 1, 0 < alpha < p", [](const Exponents& e) { return e.p > 1.0 && alpha_below_p(e); },
                   Direction::LEQ),
            regime("0<p<=1", "0 < p <= 1, 0 < alpha < p",
                   [](const Exponents& e) { return e.p > 0.0 && e.p <= 1.0 && alpha_below_p(e); }, Direction::GEQ),
        };
        c.cone = Cone::NonIncreasing;
        c.lhs = FK::LhsCum;
        c.rhs = FK::RhsWeighted;
        c.target = TK::OneMinusPower;
        c.constant_id = ConstantId::HardyReversedFrac;
        c.constant = "(p/alpha)^(1/p) and p/alpha";
        c.equality_family = "A chi_(0,c) (lower bound), 0 < c < ell";
        c.probe_family = "equality family over c (lower bound)";
        c.two_bounds = true;
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "DP";
        c.label = "dual Hardy inequality for non-increasing f, 0<p<1, constant pi p / sin(pi p) at ell = 0";
        c.domain = Domain::Kind::Upper;
        c.default_ell = 0.0;
        c.regimes = {regime("0<p<1", "0 < p < 1", [](const Exponents& e) { return e.p > 0.0 && e.p < 1.0; },
                            Direction::LEQ)};
        c.cone = Cone::NonIncreasing;
        c.lhs = FK::LhsDual;
        c.rhs = FK::RhsLebesgue;
        c.target = TK::TruncBetaB0;
        c.constant_id = ConstantId::DualPi;
        c.constant = "pi p/sin(pi p) at ell = 0, p otherwise";
        c.equality_family = "A chi_(ell,c), c > ell";
        c.probe_family = "equality family over c";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "B1";
        c.label = "Bennett-type logarithmic inequality on (0,ell)";
        c.ell_rule = EllRule::Finite;
        c.regimes = flip_at_one(
            Direction::LEQ, [](const Exponents& e) { return e.alpha > 0.0; }, "alpha > 0");
        c.lhs = FK::BennettLhsPair;
        c.rhs = FK::BennettRhs;
        c.target = TK::LogBennett;
        c.constant_id = ConstantId::BennettPair;
        c.constant = "alpha^(p-1) and alpha^p, inside the left side";
        c.equality_family = "A chi_(0,c) at p = 1";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "B2";
        c.label = "dual Bennett-type logarithmic inequality on (ell,inf)";
        c.domain = Domain::Kind::Upper;
        c.ell_rule = EllRule::Finite;
        c.regimes = {
            regime("p>1", "p > 1, alpha > 0", [](const Exponents& e) { return e.p > 1.0 && e.alpha > 0.0; },
                   Direction::LEQ),
            regime("0<p<=1", "0 < p <= 1, alpha > 0",
                   [](const Exponents& e) { return e.p > 0.0 && e.p <= 1.0 && e.alpha > 0.0; }, Direction::GEQ),
        };
        c.lhs = FK::BennettLhsPair;
        c.rhs = FK::BennettRhs;
        c.target = TK::LogBennett;
        c.constant_id = ConstantId::BennettPair;
        c.constant = "alpha^(p-1) and alpha^p, inside the left side";
        v.push_back(c);
    }
    auto pq_regimes = [] {
        return std::vector<Regime>{
            regime("1<p<q", "1 < p < q < inf, beta > 0",
                   [](const Exponents& e) { return e.p > 1.0 && e.q > e.p && std::isfinite(e.q) && e.beta > 0.0; },
                   Direction::LEQ),
            regime("1<p=q", "1 < p = q, beta > 0",
                   [](const Exponents& e) { return e.p > 1.0 && e.q == e.p && e.beta > 0.0; }, Direction::LEQ),
        };
    };
    {
        InequalityCase c;
        c.id = "PQ";
        c.label = "(p,q) weighted Hardy inequality on (0,inf), alpha = q beta/p";
        c.ell_rule = EllRule::FixedInfinite;
        c.default_ell = kInf;
        c.regimes = pq_regimes();
        c.lhs = FK::LhsCum;
        c.rhs = FK::RhsWeighted;
        c.target = TK::One;
        c.constant_id = ConstantId::BlissStar;
        c.constant = "C*(p,q,beta) for p < q, p/beta for p = q";
        c.probe_family = "(1+x^b)^(-c), coordinate search over b and c b";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "PQd";
        c.label = "dual (p,q) weighted Hardy inequality on (0,inf), alpha = q beta/p";
        c.domain = Domain::Kind::Upper;
        c.ell_rule = EllRule::FixedZero;
        c.default_ell = 0.0;
        c.regimes = pq_regimes();
        c.lhs = FK::LhsDual;
        c.rhs = FK::RhsWeighted;
        c.target = TK::One;
        c.constant_id = ConstantId::BlissStar;
        c.constant = "C*(p,q,beta) for p < q, p/beta for p = q";
        c.probe_family = "x^-2 (1+x^-b)^(-c), coordinate search over b and c b";
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "D1";
        c.label = "reversed dual inequality on (ell,inf) for f with f(x) x^2 non-decreasing";
        c.domain = Domain::Kind::Upper;
        c.regimes = flip_at_one(Direction::GEQ, alpha_below_p, "0 < alpha < p");
        c.cone = Cone::NonDecreasing;
        c.cone_on_x2 = true;
        c.lhs = FK::LhsDual;
        c.rhs = FK::RhsWeighted;
        c.target = TK::DualOneMinusPower;
        c.constant_id = ConstantId::HardyReversedFrac;
        c.constant = "p/alpha";
        c.equality_family = "A x^-2 chi_(c,inf), c > ell";
        c.probe_family = "equality family over c";
        v.push_back(c);
    }
    auto lorentz_regimes = [](bool dual) {
        auto p_ok = [dual](double p) { return dual ? p > 0.0 && p < 1.0 : p > 1.0; };
        const std::string pt = dual ? "0 < p < 1" : "p > 1";
        return std::vector<Regime>{
            regime("q>1", pt + ", q > 1", [p_ok](const Exponents& e) { return p_ok(e.p) && e.q > 1.0; },
                   Direction::LEQ),
            regime("q=1", pt + ", q = 1", [p_ok](const Exponents& e) { return p_ok(e.p) && e.q == 1.0; },
                   Direction::EQ),
            regime("0<q<1", pt + ", 0 < q < 1",
                   [p_ok](const Exponents& e) { return p_ok(e.p) && e.q > 0.0 && e.q < 1.0; }, Direction::GEQ),
        };
    };
    {
        InequalityCase c;
        c.id = "LZ1";
        c.label = "Lorentz quasi-norms (p')^(1/q) |f|* <= |f|** <= p' |f|*, p > 1";
        c.ell_rule = EllRule::FixedInfinite;
        c.default_ell = kInf;
        c.regimes = lorentz_regimes(false);
        c.constant_id = ConstantId::LorentzLower;
        c.constant = "(p')^(1/q) and p'";
        c.two_bounds = true;
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "LZ2";
        c.label = "Lorentz quasi-norms on (0,ell) with target 1-(t/ell)^(q/p'), p > 1";
        c.regimes = lorentz_regimes(false);
        c.constant_id = ConstantId::LorentzLower;
        c.constant = "(p')^(1/q) and p'";
        c.two_bounds = true;
        v.push_back(c);
    }
    {
        InequalityCase c;
        c.id = "LZ3";
        c.label = "Lorentz quasi-norms with the dual Hardy operator, 0 < p < 1";
        c.ell_rule = EllRule::FixedInfinite;
        c.default_ell = kInf;
        c.regimes = lorentz_regimes(true);
        c.constant_id = ConstantId::LorentzDualLower;
        c.constant = "(q B(q,-q/p'))^(1/q) and -p'";
        c.two_bounds = true;
        v.push_back(c);
    }
    return v;
}

std::string describe(const Exponents& e) {
    return "p=" + fmt_num(e.p) + ", q=" + fmt_num(e.q) + ", alpha=" + fmt_num(e.alpha) + ", beta=" +
           fmt_num(e.beta) + ", a=" + fmt_num(e.a);
}

Domain domain_of(const InequalityCase& c, double ell, Measure m) {
    return c.domain == Domain::Kind::Lower ? Domain::lower(ell, m) : Domain::upper(ell, m);
}

// PQ and PQd tie alpha to the other exponents.
Exponents effective(const InequalityCase& c, Exponents e) {
    if (c.id == "PQ" || c.id == "PQd") e.alpha = e.q * e.beta / e.p;
    return e;
}

struct Sides {
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 1.0;
    std::optional<double> constant2;
    double err = 0.0;
    bool folded = false;
};

// v^k with the absolute error carried along.
std::pair<double, double> powered(const FunctionalValue& fv, double k) {
    const double v = std::pow(fv.value, k);
    const double err = fv.value > 0.0 ? std::abs(k) * v * fv.abs_error / fv.value : 0.0;
    return {v, err};
}

FunctionalValue fv(FK kind, const FuncExpr& f, const Exponents& e, const Domain& dom,
                   const TargetWeight& t = TargetWeight::one()) {
    return weighted_functional(kind, f, e, dom, t);
}

Sides simple(const FunctionalValue& l, const FunctionalValue& r, double c) {
    Sides s;
    s.lhs = l.value;
    s.rhs = r.value;
    s.constant = c;
    s.err = l.abs_error + c * r.abs_error;
    return s;
}

double constant_of(ConstantId id, const Exponents& e) { return special::sharp_constant(id, e).value; }

// The pointwise power cases are checked at ten upper limits b; the worst one is kept.
Sides pointwise_power(bool reflected, const FuncExpr& f, const Exponents& e, double ell, Direction d) {
    const double p = e.p;
    std::vector<double> bps = f.breakpoints();
    Sides worst;
    worst.constant = p;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 10; ++k) {
        const double b = std::isfinite(ell) ? ell * k / 10.0 : std::ldexp(1.0, k - 5);
        const double F = cumulative(f, b);
        const double lhs = std::pow(F, p);
        std::vector<double> cuts;
        for (double x : bps)
            if (x > 0.0 && x < b) cuts.push_back(reflected ? b - x : x);
        auto g = [&f, p, b, reflected](double y) {
            const double fy = evaluate(f, reflected ? b - y : y);
            if (fy == 0.0) return 0.0;
            return std::pow(y, p - 1.0) * std::pow(fy, p);
        };
        const double rtol = p < 1.0 ? quad::kSingularRtol : quad::kSmoothRtol;
        const quad::QuadResult q = quad::integrate_interval(g, 0.0, b, rtol, 1e-300, cuts);
        // Both sides vanish below the support: nothing is tested there.
        if (lhs == 0.0 && q.value == 0.0) continue;
        VerificationReport tmp;
        tmp.lhs = lhs;
        tmp.rhs = q.value;
        tmp.constant = p;
        tmp.direction = d;
        score(tmp);
        if (tmp.margin < worst_margin) {
            worst_margin = tmp.margin;
            worst.lhs = lhs;
            worst.rhs = q.value;
            worst.constant = p;
            worst.err = p * q.abs_error_estimate;
        }
    }
    return worst;
}

Sides evaluate_sides(const InequalityCase& c, const FuncExpr& f, const Exponents& e, const Domain& dom,
                     Direction d, const Options& o) {
    const std::string& id = c.id;
    const double p = e.p, al = e.alpha;
    const Domain haar = dom.with_measure(Measure::Haar);
    if (id == "H1" || id == "H2" || id == "H3") {
        Exponents ee = e;
        if (id == "H1") ee.a = 0.0;
        const TargetWeight t =
            id == "H3" ? TargetWeight::one_minus_power((p - 1.0 - ee.a) / p) : TargetWeight::one();
        return simple(fv(FK::LhsAvg, f, ee, dom), fv(FK::RhsLebesgue, f, ee, dom, t),
                      constant_of(id == "H1" ? ConstantId::HardyClassic : ConstantId::HardyWeighted, ee));
    }
    if (id == "C1" || id == "C2") {
        Exponents ee = e;
        ee.a = 0.0;
        const TargetWeight t = id == "C2" ? TargetWeight::one_minus_linear() : TargetWeight::one();
        return simple(fv(FK::LhsAvg, f, ee, dom), fv(FK::RhsLebesgue, f, ee, dom, t), 1.0);
    }
    if (id == "E1")
        return simple(fv(FK::LhsCum, f, e, dom), fv(FK::RhsWeighted, f, e, dom, TargetWeight::one_minus_power(al / p)),
                      std::pow(p / al, p));
    if (id == "E2")
        return simple(fv(FK::LhsDual, f, e, dom),
                      fv(FK::RhsWeighted, f, e, dom, TargetWeight::dual_one_minus_power(al / p)), std::pow(p / al, p));
    if (id == "L1" || id == "L2") return pointwise_power(id == "L2", f, e, dom.ell(), d);
    if (id == "R1")
        return simple(fv(FK::LhsCum, f, e, dom), fv(FK::RhsWeighted, f, e, dom, TargetWeight::one_minus_power(al)),
                      constant_of(ConstantId::HardyReversedFrac, e));
    if (id == "R2")
        return simple(fv(FK::LhsCum, f, e, dom), fv(FK::RhsWeighted, f, e, dom, TargetWeight::trunc_beta_T()),
                      constant_of(ConstantId::HardyReversedFrac, e));
    if (id == "R3")
        return simple(fv(FK::LhsDual, f, e, dom), fv(FK::RhsWeighted, f, e, dom, TargetWeight::trunc_beta_T0()),
                      constant_of(ConstantId::HardyReversedFrac, e));
    if (id == "R3∞")
        return simple(fv(FK::LhsDual, f, e, dom), fv(FK::RhsWeighted, f, e, dom),
                      constant_of(ConstantId::TruncTargetT0, e));
    if (id == "TS") {
        const auto [l, le] = powered(fv(FK::LhsCum, f, e, dom), 1.0 / p);
        const auto [r, re] = powered(fv(FK::RhsWeighted, f, e, dom, TargetWeight::one_minus_power(al)), 1.0 / p);
        Sides s;
        s.lhs = l;
        s.rhs = r;
        s.constant = std::pow(p / al, 1.0 / p);
        s.constant2 = p / al;
        s.err = le + *s.constant2 * re;
        return s;
    }
    if (id == "DP") {
        Exponents ee = e;
        ee.alpha = 1.0 - p;
        ee.a = 0.0;
        const Domain leb = dom.with_measure(Measure::Lebesgue);
        const FunctionalValue l = fv(FK::LhsDual, f, ee, haar);
        if (dom.ell() == 0.0)
            return simple(l, fv(FK::RhsLebesgue, f, ee, leb), constant_of(ConstantId::DualPi, ee));
        return simple(l, fv(FK::RhsLebesgue, f, ee, leb, TargetWeight::trunc_beta_B0()), p);
    }
    if (id == "B1" || id == "B2") {
        const TargetWeight t = TargetWeight::log_bennett(id == "B1" ? o.log_variant : LogVariant::Corrected);
        const special::SharpConstant k = special::sharp_constant(ConstantId::BennettPair, e);
        const FunctionalValue pair = fv(FK::BennettLhsPair, f, e, dom, t);
        const FunctionalValue r = fv(FK::BennettRhs, f, e, dom, t);
        Sides s;
        s.lhs = k.value * pair.value + *k.second * pair.second.value_or(0.0);
        s.rhs = r.value;
        s.constant = k.value;
        s.constant2 = k.second;
        s.err = *k.second * pair.abs_error + r.abs_error;
        s.folded = true;
        return s;
    }
    if (id == "PQ" || id == "PQd") {
        Exponents el = e;
        el.p = e.q;
        Exponents er = e;
        er.alpha = e.beta;
        const FK lk = id == "PQ" ? FK::LhsCum : FK::LhsDual;
        const auto [l, le] = powered(fv(lk, f, el, dom), 1.0 / e.q);
        const auto [r, re] = powered(fv(FK::RhsWeighted, f, er, dom), 1.0 / p);
        Sides s;
        s.lhs = l;
        s.rhs = r;
        s.constant = e.q > p ? special::bliss_star(p, e.q, e.beta, o.bliss_form) : p / e.beta;
        s.err = le + s.constant * re;
        return s;
    }
    if (id == "D1")
        return simple(fv(FK::LhsDual, f, e, dom),
                      fv(FK::RhsWeighted, f, e, dom, TargetWeight::dual_one_minus_power(al)),
                      constant_of(ConstantId::HardyReversedFrac, e));
    throw UnsupportedCase("no evaluator for case " + id);
}

void check_cone(const InequalityCase& c, const FuncExpr& f, const Domain& dom) {
    if (c.cone == Cone::Unrestricted) return;
    bool ok;
    std::string what;
    if (c.cone_on_x2) {
        // f(x) x^2 non-decreasing on (ell, inf) is f(1/u) u^-2 non-increasing on (0, 1/ell).
        const double top = dom.ell() == 0.0 ? kInf : 1.0 / dom.ell();
        ok = cone_check(transform_inverse(f), Cone::NonIncreasing, Domain::lower(top));
        what = "f(x) x^2 to be non-decreasing";
    } else {
        ok = cone_check(f, c.cone, dom);
        what = "a " + to_string(c.cone) + " function";
    }
    if (!ok) throw ConeError("case " + c.id + " requires " + what + " on " + dom.describe() + "; got " + f.to_string());
}

VerificationReport verify_lorentz(const InequalityCase& c, const FuncExpr& f, const Exponents& e, double ell,
                                  const Regime& reg, const Options& o) {
    const lorentz::Comparison which = c.id == "LZ1"   ? lorentz::Comparison::Plain
                                      : c.id == "LZ2" ? lorentz::Comparison::Target
                                                      : lorentz::Comparison::Dual;
    VerificationReport r = lorentz::compare(lorentz::step_from_function(f), {e.p, e.q, ell}, which, o.tol);
    r.params.e = e;
    r.regime = reg.name;
    r.function = f.to_string();
    return r;
}

}  // namespace

const std::vector<InequalityCase>& all_cases() {
    static const std::vector<InequalityCase> cases = build_cases();
    return cases;
}

const InequalityCase& find_case(const std::string& id) {
    const std::string key = id == "R3inf" ? "R3∞" : id;
    for (const InequalityCase& c : all_cases())
        if (c.id == key) return c;
    std::string known;
    for (const InequalityCase& c : all_cases()) known += (known.empty() ? "" : ", ") + c.id;
    throw UnsupportedCase("unknown case id '" + id + "'; known ids: " + known);
}

const Regime& select_regime(const InequalityCase& c, const Exponents& e) {
    for (const Regime& r : c.regimes)
        if (r.holds(e)) return r;
    std::string list;
    for (const Regime& r : c.regimes) list += (list.empty() ? "" : "; ") + r.name + " (" + r.condition + ")";
    throw ParameterError("case " + c.id + ": parameters " + describe(e) + " violate every regime: " + list);
}

bool takes_parameter(const InequalityCase& c, const std::string& name) {
    const std::string& id = c.id;
    if (name == "p" || name == "ell") return true;
    if (name == "q" || name == "beta") {
        if (id == "PQ" || id == "PQd") return true;
        return name == "q" && id.rfind("LZ", 0) == 0;
    }
    if (name == "a") return id == "H2" || id == "H3";
    if (name == "alpha")
        return id == "E1" || id == "E2" || id == "R1" || id == "R2" || id == "R3" || id == "R3∞" || id == "TS" ||
               id == "B1" || id == "B2" || id == "D1";
    return false;
}

double resolve_ell(const InequalityCase& c, double ell) {
    if (std::isnan(ell)) return c.default_ell;
    const bool lower = c.domain == Domain::Kind::Lower;
    auto fail = [&c](const std::string& why) -> double {
        throw ParameterError("case " + c.id + ": " + why);
    };
    switch (c.ell_rule) {
        case EllRule::FixedInfinite:
            if (!std::isinf(ell) || ell < 0) return fail("lives on (0, inf); ell must be inf");
            return ell;
        case EllRule::FixedZero:
            if (ell != 0.0) return fail("lives on (0, inf); ell must be 0");
            return ell;
        case EllRule::Finite:
            if (!(ell > 0.0) || std::isinf(ell)) return fail("needs 0 < ell < inf, got " + fmt_num(ell));
            return ell;
        case EllRule::Any:
            if (lower && !(ell > 0.0)) return fail("needs ell > 0 on (0, ell), got " + fmt_num(ell));
            if (!lower && (!(ell >= 0.0) || std::isinf(ell)))
                return fail("needs 0 <= ell < inf on (ell, inf), got " + fmt_num(ell));
            return ell;
    }
    return ell;
}

VerificationReport verify(const std::string& case_id, const FuncExpr& f, const Params& params, const Options& opt) {
    const InequalityCase& c = find_case(case_id);
    const double ell = resolve_ell(c, params.ell);
    const Exponents e = effective(c, params.e);
    const Regime& reg = select_regime(c, e);
    if (c.id.rfind("LZ", 0) == 0) {
        VerificationReport r = verify_lorentz(c, f, e, ell, reg, opt);
        r.seed = opt.seed;
        return r;
    }
    const Domain dom = domain_of(c, ell, c.measure);
    check_cone(c, f, dom);

    VerificationReport r;
    r.case_id = c.id;
    r.regime = reg.name;
    r.params = {e, ell};
    r.function = f.to_string();
    r.direction = reg.direction;
    r.tol = opt.tol;
    r.seed = opt.seed;
    const Sides s = evaluate_sides(c, f, e, dom, reg.direction, opt);
    r.lhs = s.lhs;
    r.rhs = s.rhs;
    r.constant = s.constant;
    r.constant2 = s.constant2;
    r.quad_error = s.err;
    if (s.folded)
        score_folded(r);
    else
        score(r);
    return r;
}

FuncExpr equality_member(const std::string& case_id, const Params& params, double c, double A) {
    const InequalityCase& k = find_case(case_id);
    if (!k.equality_family) throw UnsupportedCase("case " + k.id + " has no registered equality family");
    const double ell = resolve_ell(k, params.ell);
    if (!(A > 0.0) || !std::isfinite(A)) throw ParameterError("family height A must be positive");
    const bool lower = k.domain == Domain::Kind::Lower;
    // Families of the form A chi_(0,c) may fill the whole interval.
    const bool left_end = k.id == "L2" || k.id == "R2";
    if (lower && !(c > 0.0 && (c < ell || (c == ell && !left_end && std::isfinite(ell)))))
        throw ParameterError("family point c must lie in (0, " + fmt_num(ell) + (left_end ? ")" : "]") + ", got " +
                             fmt_num(c));
    if (!lower && (!(c > ell) || std::isinf(c)))
        throw ParameterError("family point c must lie in (" + fmt_num(ell) + ", inf), got " + fmt_num(c));
    const std::string& id = k.id;
    if (id == "L2" || id == "R2") return FuncExpr::indicator(c, ell, A);
    if (id == "R3" || id == "DP") return FuncExpr::indicator(ell, c, A);
    if (id == "D1") return FuncExpr::warp(FuncExpr::indicator(0.0, 1.0 / c, A), -1.0);
    if (id == "C1") return FuncExpr::indicator(c / 2.0, c, A);
    return FuncExpr::indicator(0.0, c, A);
}

double equality_tolerance(const std::string& case_id, const Params& params) {
    const InequalityCase& k = find_case(case_id);
    const double ell = resolve_ell(k, params.ell);
    const bool trunc_beta = k.id == "R2" || ((k.id == "R3" || k.id == "DP") && ell > 0.0);
    return trunc_beta ? 1e-6 : 1e-8;
}

VerificationReport equality_check(const std::string& case_id, const Params& params, double c,
                                  std::optional<double> tol, const Options& opt) {
    const InequalityCase& k = find_case(case_id);
    const Exponents e = effective(k, params.e);
    const Regime& reg = select_regime(k, e);
    if ((k.id == "C1" || k.id == "B1") && reg.direction != Direction::EQ)
        throw ParameterError("case " + k.id + " attains equality only at p = 1");
    const FuncExpr f = equality_member(k.id, params, c);
    VerificationReport r = verify(k.id, f, params, opt);
    r.constant2.reset();
    r.margin2.reset();
    r.direction = Direction::EQ;
    r.tol = tol.value_or(equality_tolerance(k.id, params));
    const double target = k.id == "B1" ? r.rhs : r.constant * r.rhs;
    const double gap = r.lhs != 0.0 ? std::abs(r.lhs - target) / std::abs(r.lhs) : std::abs(target);
    r.ratio = target != 0.0 ? r.lhs / target : 1.0;
    r.margin = -gap;
    r.pass = r.error.empty() && gap <= r.tol;
    return r;
}

std::string to_string(Equivalence e) {
    switch (e) {
        case Equivalence::Substitution: return "substitution";
        case Equivalence::Inversion: return "inversion";
        case Equivalence::BennettInversion: return "bennett-inversion";
    }
    return "?";
}

std::optional<Equivalence> equivalence_from_string(const std::string& s) {
    for (Equivalence e : {Equivalence::Substitution, Equivalence::Inversion, Equivalence::BennettInversion})
        if (to_string(e) == s) return e;
    return std::nullopt;
}

EquivalenceReport equivalence_check(Equivalence which, const FuncExpr& f, const Params& params, const Options& opt,
                                    double tol) {
    EquivalenceReport r;
    r.which = to_string(which);
    r.function = f.to_string();
    r.tol = tol;
    const Exponents& e = params.e;
    const double p = e.p;
    r.params = params;
    switch (which) {
        case Equivalence::Substitution: {
            if (!(p > 1.0)) throw ParameterError("the substitution needs p > 1");
            r.params.ell = kInf;
            Exponents ee = e;
            ee.a = 0.0;
            const FuncExpr g = transform_substitution(f, p);
            r.transformed = g.to_string();
            const Domain leb = Domain::lower(kInf, Measure::Lebesgue);
            const Domain haar = Domain::lower(kInf, Measure::Haar);
            const double c = special::sharp_constant(ConstantId::HardyClassic, ee).value;
            r.lhs_transformed = fv(FK::LhsAvg, g, ee, leb).value;
            r.rhs_transformed = c * fv(FK::RhsLebesgue, g, ee, leb).value;
            r.lhs_original = fv(FK::LhsAvg, f, ee, haar).value;
            r.rhs_original = fv(FK::RhsLebesgue, f, ee, haar).value;
            r.factor = std::pow(p / (p - 1.0), p + 1.0);
            break;
        }
        case Equivalence::Inversion:
        case Equivalence::BennettInversion: {
            const double ell = std::isnan(params.ell) ? 1.0 : params.ell;
            if (!(ell > 0.0) || std::isinf(ell)) throw ParameterError("the inversion needs 0 < ell < inf");
            r.params.ell = ell;
            const FuncExpr g = transform_inverse(f);
            r.transformed = g.to_string();
            const Domain lo = Domain::lower(ell);
            const Domain up = Domain::upper(1.0 / ell);
            if (which == Equivalence::Inversion) {
                if (p == 0.0 || e.alpha == 0.0) throw ParameterError("the inversion needs p != 0 and alpha != 0");
                r.lhs_original = fv(FK::LhsCum, f, e, lo).value;
                r.rhs_original = fv(FK::RhsWeighted, f, e, lo, TargetWeight::one_minus_power(e.alpha / p)).value;
                r.lhs_transformed = fv(FK::LhsDual, g, e, up).value;
                r.rhs_transformed =
                    fv(FK::RhsWeighted, g, e, up, TargetWeight::dual_one_minus_power(e.alpha / p)).value;
            } else {
                if (!(p > 0.0) || !(e.alpha > 0.0))
                    throw ParameterError("the Bennett inversion needs p > 0 and alpha > 0");
                const TargetWeight t = TargetWeight::log_bennett(LogVariant::Corrected);
                const special::SharpConstant k = special::sharp_constant(ConstantId::BennettPair, e);
                auto lhs = [&](const FuncExpr& h, const Domain& d) {
                    const FunctionalValue v = fv(FK::BennettLhsPair, h, e, d, t);
                    return k.value * v.value + *k.second * v.second.value_or(0.0);
                };
                r.lhs_original = lhs(f, lo);
                r.rhs_original = fv(FK::BennettRhs, f, e, lo, t).value;
                r.lhs_transformed = lhs(g, up);
                r.rhs_transformed = fv(FK::BennettRhs, g, e, up, t).value;
            }
            r.factor = 1.0;
            break;
        }
    }
    (void)opt;
    auto rel = [](double got, double want) {
        const double s = std::max(std::abs(got), std::abs(want));
        return s == 0.0 ? 0.0 : std::abs(got - want) / s;
    };
    r.lhs_rel_error = rel(r.lhs_transformed, r.factor * r.lhs_original);
    r.rhs_rel_error = rel(r.rhs_transformed, r.factor * r.rhs_original);
    r.pass = r.lhs_rel_error <= tol && r.rhs_rel_error <= tol;
    return r;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson num(double v) {
    if (std::isfinite(v)) return v;
    return fmt_num(v);
}

ojson params_json(const Params& p) {
    return {{"p", num(p.e.p)},         {"q", num(p.e.q)}, {"alpha", num(p.e.alpha)},
            {"beta", num(p.e.beta)}, {"a", num(p.e.a)}, {"ell", num(p.ell)}};
}

}  // namespace

void emit_equivalence(std::ostream& out, const EquivalenceReport& r, Format fmt) {
    if (fmt == Format::Json) {
        ojson j;
        j["which"] = r.which;
        j["params"] = params_json(r.params);
        j["function"] = r.function;
        j["transformed"] = r.transformed;
        j["lhs_original"] = num(r.lhs_original);
        j["lhs_transformed"] = num(r.lhs_transformed);
        j["rhs_original"] = num(r.rhs_original);
        j["rhs_transformed"] = num(r.rhs_transformed);
        j["factor"] = num(r.factor);
        j["lhs_rel_error"] = num(r.lhs_rel_error);
        j["rhs_rel_error"] = num(r.rhs_rel_error);
        j["tol"] = num(r.tol);
        j["pass"] = r.pass;
        j["version"] = kToolVersion;
        out << j.dump(2) << '\n';
        return;
    }
    out << "which,p,q,alpha,beta,a,ell,function,transformed,lhs_original,lhs_transformed,rhs_original,"
           "rhs_transformed,factor,lhs_rel_error,rhs_rel_error,tol,pass,version\n";
    auto q = [](const std::string& s) { return "\"" + s + "\""; };
    const Exponents& e = r.params.e;
    out << r.which << ',' << fmt_num(e.p) << ',' << fmt_num(e.q) << ',' << fmt_num(e.alpha) << ','
        << fmt_num(e.beta) << ',' << fmt_num(e.a) << ',' << fmt_num(r.params.ell) << ',' << q(r.function) << ','
        << q(r.transformed) << ',' << fmt_num(r.lhs_original) << ',' << fmt_num(r.lhs_transformed) << ','
        << fmt_num(r.rhs_original) << ',' << fmt_num(r.rhs_transformed) << ',' << fmt_num(r.factor) << ','
        << fmt_num(r.lhs_rel_error) << ',' << fmt_num(r.rhs_rel_error) << ',' << fmt_num(r.tol) << ','
        << (r.pass ? "true" : "false") << ',' << kToolVersion << '\n';
}

std::vector<VerificationReport> scan(const std::string& case_id, const std::vector<Params>& grid,
                                     const std::string& f_template, const Options& opt, unsigned threads) {
    const InequalityCase& c = find_case(case_id);
    if (grid.empty()) throw ParameterError("scan needs a non-empty parameter grid");
    std::vector<VerificationReport> rows(grid.size());

    auto run_point = [&](std::size_t i) {
        const Params& pt = grid[i];
        try {
            const double ell = resolve_ell(c, pt.ell);
            const FuncExpr f = f_template == "random" ? random_admissible(c, ell, opt.seed.value_or(0))
                                                      : parse_function(f_template, bindings_for(effective(c, pt.e), ell));
            rows[i] = verify(c.id, f, pt, opt);
        } catch (const Error& ex) {
            VerificationReport& r = rows[i];
            r.case_id = c.id;
            r.params = pt;
            r.function = f_template;
            r.tol = opt.tol;
            r.seed = opt.seed;
            r.error = ex.what();
            r.pass = false;
            const Exponents e = effective(c, pt.e);
            for (const Regime& reg : c.regimes)
                if (reg.holds(e)) {
                    r.regime = reg.name;
                    r.direction = reg.direction;
                    break;
                }
            r.lhs = r.rhs = r.ratio = r.margin = std::numeric_limits<double>::quiet_NaN();
        }
    };

    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, grid.size()));
    if (n <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) run_point(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < grid.size(); i = next++) run_point(i);
        });
    for (std::thread& th : pool) th.join();
    return rows;
}

FuncExpr random_admissible(const InequalityCase& c, double ell, std::uint64_t seed) {
    if (c.cone_on_x2) {
        const FuncExpr g = random_step_function(seed, Domain::lower(ell == 0.0 ? kInf : 1.0 / ell), Cone::NonIncreasing);
        return transform_inverse(g);
    }
    FuncExpr f = random_step_function(seed, domain_of(c, ell, c.measure), c.cone);
    // The dx/x forms on (0, ell) diverge on both sides unless f vanishes near 0.
    if (c.measure == Measure::Haar && c.domain == Domain::Kind::Lower && c.rhs == FK::RhsLebesgue) {
        const auto& st = std::get<terms::Sampled>(f.node().term);
        if (st.grid.size() == 1) return FuncExpr::indicator(0.5 * st.grid[0], st.grid[0], st.values[0]);
        std::vector<double> values = st.values;
        values.front() = 0.0;
        if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; })) values.back() = 1.0;
        return FuncExpr::sampled(st.grid, values);
    }
    return f;
}

double unit_from_bits(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

FuncExpr random_step_function(std::uint64_t seed, const Domain& dom, Cone cone) {
    std::mt19937_64 rng(seed);
    auto u = [&rng] { return unit_from_bits(rng()); };
    const int n = 1 + static_cast<int>(u() * 8.0);

    double lo, hi;
    bool pin_last = false;
    if (dom.kind() == Domain::Kind::Lower) {
        if (std::isfinite(dom.ell())) {
            lo = dom.ell() * 1e-3;
            hi = dom.ell();
            pin_last = true;
        } else {
            lo = 1e-3;
            hi = 1e3;
        }
    } else {
        lo = dom.ell() > 0.0 ? dom.ell() : 1e-3;
        hi = dom.ell() > 0.0 ? dom.ell() * 1e3 : 1e3;
    }
    if (cone == Cone::NonDecreasing && !pin_last)
        throw ParameterError("random non-decreasing step functions need a bounded domain (0, ell)");

    std::vector<double> grid;
    // Non-decreasing steps start from zero: near 0 a positive constant makes
    // the weighted sides diverge once alpha >= p.
    const bool zero_lead = cone == Cone::NonDecreasing;
    const int free_points = (pin_last ? n - 1 : n) + (zero_lead ? 1 : 0);
    for (int i = 0; i < free_points; ++i) grid.push_back(lo * std::pow(hi / lo, u()));
    if (pin_last) grid.push_back(hi);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    // Upper domains: the first piece must reach into (ell, inf).
    if (dom.kind() == Domain::Kind::Upper && grid.front() <= dom.ell()) grid.front() = std::nextafter(dom.ell(), kInf) * 1.5;

    std::vector<double> values;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double v = 0.05 + 0.95 * u();
        if (cone == Cone::Unrestricted && u() < 0.15) v = 0.0;
        values.push_back(v);
    }
    if (cone == Cone::NonIncreasing) std::sort(values.begin(), values.end(), std::greater<>());
    if (cone == Cone::NonDecreasing) {
        std::sort(values.begin(), values.end());
        if (values.size() > 1) values.front() = 0.0;
    }
    if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; })) values.front() = 1.0;
    FuncExpr f = FuncExpr::sampled(std::move(grid), std::move(values));
    return cone == Cone::Unrestricted ? f : f.with_cone(cone, dom);
}

}  // namespace sharphardy::catalog
