#pragma once

// The integral functionals that make up both sides of the inequalities.
// Everything is integrated in s = log x, so a dx integral is computed as
// the Haar integral of x * integrand.

#include <optional>
#include <string>

#include "sharphardy/domain.hpp"
#include "sharphardy/funcspace.hpp"
#include "sharphardy/quad.hpp"

namespace sharphardy {

enum class LogVariant { Corrected, AsPrinted };

std::string to_string(LogVariant v);
std::optional<LogVariant> log_variant_from_string(const std::string& s);

// Multiplier inserted on the dominating side. ell is taken from the domain.
struct TargetWeight {
    enum class Kind {
        One,
        OneMinusLinear,     // 1 - x/ell
        OneMinusPower,      // 1 - (x/ell)^kappa
        // beta_a(u, v) is the integral of t^(u-1) (1-t)^(v-1) over (a, 1).
        TruncBetaT,         // alpha * beta_{x/ell}(alpha - p + 1, p)
        TruncBetaT0,        // alpha * beta_{ell/x}(alpha, p)
        TruncBetaB0,        // beta_{ell/x}(alpha, p)
        DualOneMinusPower,  // 1 - (ell/x)^kappa
        LogBennett,         // selects the Bennett logarithm, see LogVariant
    };
    Kind kind = Kind::One;
    double kappa = 0.0;
    LogVariant log_variant = LogVariant::Corrected;

    static TargetWeight one() { return {}; }
    static TargetWeight one_minus_linear() { return {Kind::OneMinusLinear}; }
    static TargetWeight one_minus_power(double k) { return {Kind::OneMinusPower, k}; }
    static TargetWeight trunc_beta_T() { return {Kind::TruncBetaT}; }
    static TargetWeight trunc_beta_T0() { return {Kind::TruncBetaT0}; }
    static TargetWeight trunc_beta_B0() { return {Kind::TruncBetaB0}; }
    static TargetWeight dual_one_minus_power(double k) { return {Kind::DualOneMinusPower, k}; }
    static TargetWeight log_bennett(LogVariant v) { return {Kind::LogBennett, 0.0, v}; }

    // log of the weight at x = e^s; -inf where the weight vanishes.
    double log_value(double s, const Exponents& e, const Domain& dom) const;
    bool uses_trunc_beta() const noexcept {
        return kind == Kind::TruncBetaT || kind == Kind::TruncBetaT0 || kind == Kind::TruncBetaB0;
    }
    std::string describe() const;
};

enum class FunctionalKind {
    LhsAvg,          // integral of (x^-1 F)^p x^a  d(mu)
    LhsCum,          // integral of F^p x^-alpha dx/x
    LhsDual,         // integral of (tail f)^p x^alpha dx/x
    RhsWeighted,     // integral of (x f)^p x^(-/+ alpha) target dx/x  (- on (0,ell), + on (ell,inf))
    RhsLebesgue,     // integral of f^p x^a target d(mu)
    BennettLhsPair,  // ((integral of f)^p, integral of L^(alpha p - 1) F^p dx/x)
    BennettRhs,      // integral of x^p L^((1+alpha)p - 1) f^p dx/x
};

std::string to_string(FunctionalKind k);

struct FunctionalValue {
    double value = 0.0;
    std::optional<double> second;  // BennettLhsPair: the integral term
    double abs_error = 0.0;
};

// mu is the domain's measure for LhsAvg and RhsLebesgue; the remaining kinds
// are Haar integrals by definition. For p < 0 the function must be strictly
// positive on the domain. Divergent functionals raise DivergenceError.
FunctionalValue weighted_functional(FunctionalKind kind, const FuncExpr& f, const Exponents& e,
                                    const Domain& dom, const TargetWeight& target = TargetWeight::one());

// x -> (1/x) * integral of f over (0, x)
quad::Integrand hardy_avg(const FuncExpr& f);
// x -> integral of f over (x, inf)
quad::Integrand dual_hardy(const FuncExpr& f);

}  // namespace sharphardy
