#include "sharphardy/lorentz.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <tuple>
#include <utility>

#include "sharphardy/error.hpp"
#include "sharphardy/hardyops.hpp"
#include "sharphardy/numfmt.hpp"
#include "sharphardy/special.hpp"

namespace sharphardy::lorentz {

StepFunction::StepFunction(std::vector<Piece> pieces) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& pc = pieces[i];
        if (!(pc.measure > 0.0)) throw ParameterError("step piece measures must be positive");
        if (!(pc.value >= 0.0) || !std::isfinite(pc.value))
            throw ParameterError("step piece values must be finite and non-negative");
        if (std::isinf(pc.measure)) {
            if (pc.value != 0.0) throw DivergenceError("an infinite-measure piece must have value 0");
            if (i + 1 != pieces.size()) throw ParameterError("only the last piece may have infinite measure");
        }
        if (!pieces_.empty() && pieces_.back().value == pc.value)
            pieces_.back().measure += pc.measure;
        else
            pieces_.push_back(pc);
    }
}

double StepFunction::total_measure() const noexcept {
    double t = 0.0;
    for (const Piece& pc : pieces_) t += pc.measure;
    return t;
}

bool StepFunction::non_increasing() const noexcept {
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i].value > pieces_[i - 1].value) return false;
    return true;
}

bool StepFunction::is_zero() const noexcept {
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& pc) { return pc.value == 0.0; });
}

StepFunction StepFunction::scaled(double lambda) const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ParameterError("scale factor must be finite and >= 0");
    std::vector<Piece> out = pieces_;
    for (Piece& pc : out) pc.value *= lambda;
    return StepFunction(std::move(out));
}

double StepFunction::level_measure(double lambda) const {
    double m = 0.0;
    for (const Piece& pc : pieces_)
        if (pc.value > lambda) m += pc.measure;
    return m;
}

std::string StepFunction::to_string() const {
    std::string s = "step:[";
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) s += ';';
        s += fmt_num(pieces_[i].measure) + ':' + fmt_num(pieces_[i].value);
    }
    return s + "]";
}

StepFunction parse_step(const std::string& text) {
    auto fail = [&text](const std::string& why) -> StepFunction {
        throw ParameterError("cannot parse step function '" + text + "': " + why);
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    const std::string head = "step:[";
    if (s.rfind(head, 0) != 0 || s.back() != ']') return fail("expected step:[m:v;...]");
    const std::string body = s.substr(head.size(), s.size() - head.size() - 1);
    if (body.empty()) return fail("no pieces");
    std::vector<Piece> pieces;
    std::size_t start = 0;
    while (start <= body.size()) {
        const std::size_t end = std::min(body.find(';', start), body.size());
        const std::string item = body.substr(start, end - start);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) return fail("piece '" + item + "' lacks ':'");
        pieces.push_back({parse_num(item.substr(0, colon)), parse_num(item.substr(colon + 1))});
        start = end + 1;
    }
    return StepFunction(std::move(pieces));
}

StepFunction step_from_function(const FuncExpr& f) {
    const auto& term = f.node().term;
    if (const auto* ind = std::get_if<terms::Indicator>(&term)) {
        std::vector<Piece> pieces;
        if (ind->c1 > 0.0) pieces.push_back({ind->c1, 0.0});
        pieces.push_back({ind->c2 - ind->c1, ind->A});
        return StepFunction(std::move(pieces));
    }
    if (const auto* smp = std::get_if<terms::Sampled>(&term)) {
        std::vector<Piece> pieces;
        double prev = 0.0;
        for (std::size_t i = 0; i < smp->grid.size(); ++i) {
            pieces.push_back({smp->grid[i] - prev, smp->values[i]});
            prev = smp->grid[i];
        }
        return StepFunction(std::move(pieces));
    }
    throw ParameterError("only indicator and sampled functions convert to step functions, got " + f.to_string());
}

StepFunction rearrange(const StepFunction& f) {
    std::vector<Piece> pieces = f.pieces();
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.value > b.value; });
    // Zero pieces add nothing; an infinite one is kept as the closing tail.
    std::vector<Piece> out;
    bool infinite_zero = false;
    double zero = 0.0;
    for (const Piece& pc : pieces) {
        if (pc.value > 0.0)
            out.push_back(pc);
        else if (std::isinf(pc.measure))
            infinite_zero = true;
        else
            zero += pc.measure;
    }
    if (infinite_zero)
        out.push_back({kInf, 0.0});
    else if (zero > 0.0)
        out.push_back({zero, 0.0});
    return StepFunction(std::move(out));
}

namespace {

void check_params(const LorentzParams& lp) {
    if (!(lp.p > 0.0) || !(lp.q > 0.0) || !std::isfinite(lp.p) || !std::isfinite(lp.q))
        throw ParameterError("Lorentz norms need 0 < p, q < inf");
    if (!(lp.ell > 0.0)) throw ParameterError("Lorentz norms need ell > 0");
}

void check_fstar(const StepFunction& f) {
    if (!f.non_increasing()) throw ConeError("argument must be non-increasing; rearrange it first");
}

// f* as a sampled function, dropping the zero tail.
FuncExpr as_sampled(const StepFunction& fstar) {
    std::vector<double> grid, values;
    double t = 0.0;
    for (const Piece& pc : fstar.pieces()) {
        if (pc.value == 0.0) break;
        t += pc.measure;
        grid.push_back(t);
        values.push_back(pc.value);
    }
    return FuncExpr::sampled(std::move(grid), std::move(values));
}

}  // namespace

double norm_star(const StepFunction& fstar, const LorentzParams& lp, bool target) {
    check_params(lp);
    check_fstar(fstar);
    if (target && !(lp.p > 1.0)) throw ParameterError("the target-weighted norm needs p > 1");
    const double q = lp.q, r = q / lp.p;
    const double ell = lp.ell;
    double sum = 0.0;
    double t0 = 0.0;
    for (const Piece& pc : fstar.pieces()) {
        if (t0 >= ell) break;
        const double t1 = std::min(t0 + pc.measure, ell);
        if (pc.value > 0.0) {
            if (std::isinf(t1)) throw DivergenceError("norm of a function with infinite support diverges");
            const double vq = std::pow(pc.value, q);
            double piece = vq * (std::pow(t1, r) - std::pow(t0, r)) / r;
            if (target && std::isfinite(ell))
                piece -= vq * std::pow(ell, -q / lp.pconj()) * (std::pow(t1, q) - std::pow(t0, q)) / q;
            sum += piece;
        }
        t0 = t1;
    }
    return std::pow(std::max(sum, 0.0), 1.0 / q);
}

namespace {

// Returns the norm and the absolute quadrature error carried to it.
std::pair<double, double> doublestar(const StepFunction& fstar, const LorentzParams& lp, Variant v) {
    check_params(lp);
    check_fstar(fstar);
    if (lp.p == 1.0) throw ParameterError("norm_doublestar needs p != 1");
    if (fstar.is_zero()) return {0.0, 0.0};
    const FuncExpr f = as_sampled(fstar);
    Exponents e;
    e.p = lp.q;
    FunctionalValue fv;
    if (v == Variant::Forward) {
        e.alpha = lp.q / lp.pconj();
        fv = weighted_functional(FunctionalKind::LhsCum, f, e, Domain::lower(lp.ell));
    } else {
        e.alpha = -lp.q / lp.pconj();
        fv = weighted_functional(FunctionalKind::LhsDual, f, e, Domain::upper(0.0));
    }
    const double norm = std::pow(fv.value, 1.0 / lp.q);
    const double err = fv.value > 0.0 ? norm * fv.abs_error / (lp.q * fv.value) : 0.0;
    return {norm, err};
}

}  // namespace

double norm_doublestar(const StepFunction& fstar, const LorentzParams& lp, Variant v) {
    return doublestar(fstar, lp, v).first;
}

std::string to_string(Comparison c) {
    switch (c) {
        case Comparison::Plain: return "plain";
        case Comparison::Target: return "target";
        case Comparison::Dual: return "dual";
    }
    return "?";
}

std::optional<Comparison> comparison_from_string(const std::string& s) {
    if (s == "plain") return Comparison::Plain;
    if (s == "target") return Comparison::Target;
    if (s == "dual") return Comparison::Dual;
    return std::nullopt;
}

std::string case_id(Comparison c) {
    switch (c) {
        case Comparison::Plain: return "LZ1";
        case Comparison::Target: return "LZ2";
        case Comparison::Dual: return "LZ3";
    }
    return "?";
}

VerificationReport compare(const StepFunction& f, const LorentzParams& lp, Comparison which, double tol) {
    check_params(lp);
    VerificationReport r;
    r.case_id = case_id(which);
    r.params.e.p = lp.p;
    r.params.e.q = lp.q;
    r.params.ell = lp.ell;
    r.function = f.to_string();
    r.tol = tol;

    const double q = lp.q;
    if (which == Comparison::Dual) {
        if (!(lp.p < 1.0)) throw ParameterError(r.case_id + " requires 0 < p < 1");
        if (std::isfinite(lp.ell)) throw ParameterError(r.case_id + " is stated on (0, inf); use ell = inf");
    } else {
        if (!(lp.p > 1.0)) throw ParameterError(r.case_id + " requires p > 1");
        if (which == Comparison::Plain && std::isfinite(lp.ell))
            throw ParameterError(r.case_id + " is stated on (0, inf); use LZ2 (target) for finite ell");
    }
    r.direction = q > 1.0 ? Direction::LEQ : q < 1.0 ? Direction::GEQ : Direction::EQ;
    r.regime = q > 1.0 ? "q>1" : q < 1.0 ? "0<q<1" : "q=1";

    const StepFunction fstar = rearrange(f);
    Exponents e;
    e.p = lp.p;
    e.q = lp.q;
    if (which == Comparison::Dual) {
        std::tie(r.lhs, r.quad_error) = doublestar(fstar, lp, Variant::Dual);
        r.rhs = norm_star(fstar, lp);
        r.constant = special::sharp_constant(special::ConstantId::LorentzDualLower, e).value;
        r.constant2 = special::sharp_constant(special::ConstantId::LorentzUpper, e).value;
    } else {
        std::tie(r.lhs, r.quad_error) = doublestar(fstar, lp, Variant::Forward);
        r.rhs = norm_star(fstar, lp, which == Comparison::Target);
        r.constant = special::sharp_constant(special::ConstantId::LorentzLower, e).value;
        r.constant2 = special::sharp_constant(special::ConstantId::LorentzUpper, e).value;
    }
    score(r);
    return r;
}

}  // namespace sharphardy::lorentz
