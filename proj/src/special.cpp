#include "sharphardy/special.hpp"

#include <cmath>
#include <numbers>

#include "sharphardy/error.hpp"
#include "sharphardy/numfmt.hpp"
#include "sharphardy/quad.hpp"

namespace sharphardy::special {

namespace {

constexpr double kBetaRtol = 1e-13;

void require(bool ok, ConstantId id, const std::string& condition, const Exponents& e) {
    if (!ok)
        throw ParameterError(to_string(id) + " requires " + condition + " (got p=" + fmt_num(e.p) +
                             ", q=" + fmt_num(e.q) + ", alpha=" + fmt_num(e.alpha) + ", beta=" +
                             fmt_num(e.beta) + ", a=" + fmt_num(e.a) + ")");
}

// Integral of (1-r)^(u-1) r^(v-1) over (0, width): the part of the Beta
// integrand next to t = 1, written in r = 1 - t.
double upper_piece(double width, double u, double v) {
    if (width <= 0.0) return 0.0;
    auto g = [u, v](double r) { return std::pow(1.0 - r, u - 1.0) * std::pow(r, v - 1.0); };
    return quad::integrate_interval(g, 0.0, width, kBetaRtol, 1e-300).value;
}

double lower_piece(double a0, double b, double u, double v) {
    if (b <= a0) return 0.0;
    auto g = [u, v](double t) { return std::pow(t, u - 1.0) * std::pow(1.0 - t, v - 1.0); };
    return quad::integrate_interval(g, a0, b, kBetaRtol, 1e-300).value;
}

}  // namespace

double gamma(double x) {
    if (!(x > 0.0)) throw DomainError("gamma needs x > 0, got " + fmt_num(x));
    return std::tgamma(x);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma needs x > 0, got " + fmt_num(x));
    if (x < 100.0) return std::log(std::tgamma(x));
    // Stirling series; the first omitted term is below 1e-17 here.
    const double r = 1.0 / x;
    const double r2 = r * r;
    const double series = r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 / 1680)));
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

double beta(double u, double v) {
    if (!(u > 0.0) || !(v > 0.0))
        throw DomainError("beta needs u, v > 0, got u=" + fmt_num(u) + ", v=" + fmt_num(v));
    if (u + v < 170.0) return std::tgamma(u) * std::tgamma(v) / std::tgamma(u + v);
    return std::exp(log_beta(u, v));
}

double log_beta(double u, double v) {
    if (!(u > 0.0) || !(v > 0.0))
        throw DomainError("beta needs u, v > 0, got u=" + fmt_num(u) + ", v=" + fmt_num(v));
    return log_gamma(u) + log_gamma(v) - log_gamma(u + v);
}

double trunc_beta(double a0, double u, double v) {
    if (!(a0 >= 0.0) || !(a0 <= 1.0)) throw DomainError("trunc_beta needs 0 <= a0 <= 1, got " + fmt_num(a0));
    if (!(v > 0.0)) throw DomainError("trunc_beta needs v > 0, got " + fmt_num(v));
    if (a0 == 0.0 && !(u > 0.0)) throw DivergenceError("trunc_beta with a0 = 0 needs u > 0, got " + fmt_num(u));
    if (a0 >= 1.0) return 0.0;
    const double m = std::max(a0, 0.5);
    return lower_piece(a0, m, u, v) + upper_piece(1.0 - m, u, v);
}

double trunc_beta_complement(double one_minus_a0, double u, double v) {
    if (!(one_minus_a0 >= 0.0) || !(one_minus_a0 <= 1.0))
        throw DomainError("trunc_beta needs 0 <= 1 - a0 <= 1, got " + fmt_num(one_minus_a0));
    if (!(v > 0.0)) throw DomainError("trunc_beta needs v > 0, got " + fmt_num(v));
    if (one_minus_a0 == 0.0) return 0.0;
    if (one_minus_a0 <= 0.5) return upper_piece(one_minus_a0, u, v);
    const double a0 = 1.0 - one_minus_a0;
    if (a0 == 0.0 && !(u > 0.0)) throw DivergenceError("trunc_beta with a0 = 0 needs u > 0, got " + fmt_num(u));
    return lower_piece(a0, 0.5, u, v) + upper_piece(0.5, u, v);
}

const std::vector<ConstantId>& all_constant_ids() {
    static const std::vector<ConstantId> ids{
        ConstantId::HardyClassic, ConstantId::HardyWeighted, ConstantId::HardyReversedFrac,
        ConstantId::TruncTargetT, ConstantId::TruncTargetT0, ConstantId::BetaFull,
        ConstantId::BennettPair,  ConstantId::BlissStar,     ConstantId::DualPi,
        ConstantId::LorentzUpper, ConstantId::LorentzLower,  ConstantId::LorentzDualLower,
    };
    return ids;
}

std::string to_string(ConstantId id) {
    switch (id) {
        case ConstantId::HardyClassic: return "hardy_classic";
        case ConstantId::HardyWeighted: return "hardy_weighted";
        case ConstantId::HardyReversedFrac: return "hardy_reversed_frac";
        case ConstantId::TruncTargetT: return "trunc_target_T";
        case ConstantId::TruncTargetT0: return "trunc_target_T0";
        case ConstantId::BetaFull: return "beta_full";
        case ConstantId::BennettPair: return "bennett_pair";
        case ConstantId::BlissStar: return "bliss_star";
        case ConstantId::DualPi: return "dual_pi";
        case ConstantId::LorentzUpper: return "lorentz_upper";
        case ConstantId::LorentzLower: return "lorentz_lower";
        case ConstantId::LorentzDualLower: return "lorentz_dual_lower";
    }
    return "?";
}

std::optional<ConstantId> constant_id_from_string(const std::string& s) {
    for (ConstantId id : all_constant_ids())
        if (to_string(id) == s) return id;
    return std::nullopt;
}

std::string to_string(BlissForm f) { return f == BlissForm::Printed ? "printed" : "corrected"; }

std::optional<BlissForm> bliss_form_from_string(const std::string& s) {
    if (s == "printed") return BlissForm::Printed;
    if (s == "corrected") return BlissForm::Corrected;
    return std::nullopt;
}

double bliss_star(double p, double q, double beta, BlissForm form) {
    if (!(p > 1.0) || !(q > p) || !std::isfinite(q) || !(beta > 0.0))
        throw ParameterError("bliss_star requires 1 < p < q < inf and beta > 0 (got p=" + fmt_num(p) +
                             ", q=" + fmt_num(q) + ", beta=" + fmt_num(beta) + ")");
    const double pc = p / (p - 1.0);
    const double r = (q - p) / p;
    const double bracket = std::log(r) + log_gamma(p * q / (q - p)) - log_gamma(p / (q - p)) -
                           log_gamma(p * (q - 1.0) / (q - p));
    const double second_exp = form == BlissForm::Printed ? 1.0 / p : 1.0 / q;
    const double log_c = (1.0 / pc + 1.0 / q) * std::log((p - 1.0) / beta) + second_exp * std::log(pc / q) +
                         (1.0 / p - 1.0 / q) * bracket;
    return std::exp(log_c);
}

SharpConstant sharp_constant(ConstantId id, const Exponents& e, BlissForm form) {
    const double p = e.p, q = e.q, al = e.alpha;
    switch (id) {
        case ConstantId::HardyClassic:
            require(p != 0.0 && p != 1.0, id, "p != 0 and p != 1", e);
            return {std::pow(std::abs(p / (p - 1.0)), p), std::nullopt};
        case ConstantId::HardyWeighted:
            require((p > 1.0 && e.a < p - 1.0) || (p > 0.0 && p < 1.0 && e.a > p - 1.0) ||
                        (p < 0.0 && e.a > p - 1.0),
                    id, "p > 1 and a < p-1, or 0 < p < 1 and a > p-1, or p < 0 and a > p-1", e);
            return {std::pow(std::abs(p / (p - 1.0 - e.a)), p), std::nullopt};
        case ConstantId::HardyReversedFrac:
            require(p != 0.0 && al != 0.0 && p / al > 0.0, id, "p/alpha > 0", e);
            return {p / al, std::nullopt};
        case ConstantId::TruncTargetT:
            require(p > 0.0 && al >= p, id, "alpha >= p > 0", e);
            return {p * beta(p, al - p + 1.0), std::nullopt};
        case ConstantId::TruncTargetT0:
            require(p > 0.0 && al > 0.0, id, "p > 0 and alpha > 0", e);
            return {p * beta(p, al), std::nullopt};
        case ConstantId::BetaFull:
            require(p > 0.0 && q > 0.0, id, "p > 0 and q > 0", e);
            return {beta(p, q), std::nullopt};
        case ConstantId::BennettPair:
            require(p > 0.0 && al > 0.0, id, "p > 0 and alpha > 0", e);
            return {std::pow(al, p - 1.0), std::pow(al, p)};
        case ConstantId::BlissStar:
            require(p > 1.0 && q > p && std::isfinite(q) && e.beta > 0.0, id, "1 < p < q < inf and beta > 0", e);
            return {bliss_star(p, q, e.beta, form), std::nullopt};
        case ConstantId::DualPi:
            require(p > 0.0 && p < 1.0, id, "0 < p < 1", e);
            return {std::numbers::pi * p / std::sin(std::numbers::pi * p), std::nullopt};
        case ConstantId::LorentzUpper:
            require(p > 0.0 && p != 1.0, id, "p > 0 and p != 1", e);
            return {std::abs(p / (p - 1.0)), std::nullopt};
        case ConstantId::LorentzLower:
            require(p > 1.0 && q > 0.0, id, "p > 1 and q > 0", e);
            return {std::pow(p / (p - 1.0), 1.0 / q), std::nullopt};
        case ConstantId::LorentzDualLower: {
            require(p > 0.0 && p < 1.0 && q > 0.0, id, "0 < p < 1 and q > 0", e);
            const double pc = p / (p - 1.0);
            return {std::pow(q * beta(q, -q / pc), 1.0 / q), std::nullopt};
        }
    }
    throw ParameterError("unknown constant id");
}

}  // namespace sharphardy::special
