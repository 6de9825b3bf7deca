#pragma once

// Gamma, Beta, the truncated Beta integral and the sharp constants.

#include <optional>
#include <string>
#include <vector>

#include "sharphardy/funcspace.hpp"

namespace sharphardy::special {

double gamma(double x);      // x > 0
double log_gamma(double x);  // x > 0, no global state (safe in threads)
double beta(double u, double v);
double log_beta(double u, double v);

// beta_{a0}(u, v) = integral of t^(u-1) (1-t)^(v-1) over (a0, 1).
double trunc_beta(double a0, double u, double v);
// Same integral with the lower limit given through its complement 1 - a0,
// which keeps full precision when a0 is close to 1.
double trunc_beta_complement(double one_minus_a0, double u, double v);

enum class ConstantId {
    HardyClassic,
    HardyWeighted,
    HardyReversedFrac,
    TruncTargetT,
    TruncTargetT0,
    BetaFull,
    BennettPair,
    BlissStar,
    DualPi,
    LorentzUpper,
    LorentzLower,
    LorentzDualLower,
};

// Which reading of the (p, q) Bliss-type constant to use. Printed carries
// the factor (p'/q)^(1/p); Corrected carries (p'/q)^(1/q), which is the
// value the extremal (1 + x)^(-2) attains at p=2, q=4, beta=1.
enum class BlissForm { Printed, Corrected };

const std::vector<ConstantId>& all_constant_ids();
std::string to_string(ConstantId id);
std::optional<ConstantId> constant_id_from_string(const std::string& s);
std::string to_string(BlissForm f);
std::optional<BlissForm> bliss_form_from_string(const std::string& s);

struct SharpConstant {
    double value = 0.0;
    std::optional<double> second;  // bennett_pair only: alpha^p
};

// Throws ParameterError naming the violated condition when params are
// outside the id's regime.
SharpConstant sharp_constant(ConstantId id, const Exponents& e, BlissForm form = BlissForm::Printed);

double bliss_star(double p, double q, double beta, BlissForm form = BlissForm::Printed);

}  // namespace sharphardy::special
