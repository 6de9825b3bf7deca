#pragma once

// Registry of the sharp Hardy-type inequalities, with a verifier, equality
// and sharpness checks, the change-of-variable identities and a grid scan.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sharphardy/domain.hpp"
#include "sharphardy/funcspace.hpp"
#include "sharphardy/hardyops.hpp"
#include "sharphardy/report.hpp"
#include "sharphardy/special.hpp"

namespace sharphardy::catalog {

struct Regime {
    std::string name;       // stable public string, e.g. "a1" or "p>1"
    std::string condition;  // human-readable predicate
    std::function<bool(const Exponents&)> holds;
    Direction direction;
};

// Which values of ell a case accepts, relative to its domain kind.
enum class EllRule {
    Any,           // (0, inf] on (0, ell); [0, inf) on (ell, inf)
    Finite,        // 0 < ell < inf
    FixedInfinite, // the case lives on (0, inf)
    FixedZero,     // the case lives on (0, inf), written as (ell, inf) with ell = 0
};

struct InequalityCase {
    std::string id;
    std::string label;
    Domain::Kind domain = Domain::Kind::Lower;
    Measure measure = Measure::Haar;
    EllRule ell_rule = EllRule::Any;
    double default_ell = 1.0;
    std::vector<Regime> regimes;
    Cone cone = Cone::Unrestricted;
    bool cone_on_x2 = false;  // the cone condition is on f(x) x^2 rather than f
    std::optional<FunctionalKind> lhs;
    std::optional<FunctionalKind> rhs;
    std::optional<TargetWeight::Kind> target;
    std::optional<special::ConstantId> constant_id;
    std::string constant;  // the constant as a formula
    std::optional<std::string> equality_family;
    std::optional<std::string> probe_family;
    bool two_bounds = false;
};

const std::vector<InequalityCase>& all_cases();
// Throws UnsupportedCase for an unknown id.
const InequalityCase& find_case(const std::string& id);

// The regime containing e, or ParameterError naming every regime of the case.
const Regime& select_regime(const InequalityCase& c, const Exponents& e);

// Whether the case reads the named exponent ("q", "alpha", "beta", "a").
// p and ell are read by every case.
bool takes_parameter(const InequalityCase& c, const std::string& name);

// Resolves ell (NaN selects the case default) and checks it against the rule.
double resolve_ell(const InequalityCase& c, double ell);

struct Options {
    double tol = 1e-5;
    LogVariant log_variant = LogVariant::Corrected;
    special::BlissForm bliss_form = special::BlissForm::Corrected;
    std::optional<std::uint64_t> seed;
};

// Evaluates both sides at f and scores them in the regime's direction.
// Regime, cone, positivity and divergence problems are thrown.
VerificationReport verify(const std::string& case_id, const FuncExpr& f, const Params& params,
                          const Options& opt = {});

// Member of the equality family at family point c with height A.
FuncExpr equality_member(const std::string& case_id, const Params& params, double c, double A = 1.0);

// Default equality tolerance: 1e-8 where both sides reduce to closed forms
// on the family, 1e-6 where a truncated-beta quadrature is involved.
double equality_tolerance(const std::string& case_id, const Params& params);

// Verifies |lhs - C rhs| <= tol * lhs on the family member at c.
VerificationReport equality_check(const std::string& case_id, const Params& params, double c,
                                  std::optional<double> tol = std::nullopt, const Options& opt = {});

struct ProbePoint {
    std::vector<double> at;
    double ratio;
};

struct ProbeResult {
    std::string case_id;
    std::string regime;
    Params params;
    std::string family;
    // lhs / (C rhs) for LEQ, C rhs / lhs for GEQ: never above 1 for an
    // admissible function when C is sharp.
    double sup_ratio = 0.0;
    double constant = 0.0;
    std::vector<double> argmax;
    std::string argmax_function;
    std::vector<ProbePoint> trace;
    double tol = 1e-4;
    bool pass = false;
};

ProbeResult sharpness_probe(const std::string& case_id, const Params& params, const Options& opt = {});

void emit_probe(std::ostream& out, const ProbeResult& r, Format fmt);

// substitution: f(x) = g(x^(1/p')) x^(-1/p') carries the dx/x form of the
//   classical inequality to the dx form; both sides scale by (p')^(p+1).
// inversion: f on (0, ell) against f(1/x) x^-2 on (1/ell, inf) for the
//   weighted pair LhsCum / LhsDual; sides agree exactly.
// bennett-inversion: the same inversion for the logarithmic pair.
enum class Equivalence { Substitution, Inversion, BennettInversion };

std::string to_string(Equivalence e);
std::optional<Equivalence> equivalence_from_string(const std::string& s);

struct EquivalenceReport {
    std::string which;
    Params params;
    std::string function;
    std::string transformed;
    double lhs_original = 0.0, lhs_transformed = 0.0;
    double rhs_original = 0.0, rhs_transformed = 0.0;
    double factor = 1.0;
    double lhs_rel_error = 0.0, rhs_rel_error = 0.0;
    double tol = 1e-6;
    bool pass = false;
};

EquivalenceReport equivalence_check(Equivalence which, const FuncExpr& f, const Params& params,
                                    const Options& opt = {}, double tol = 1e-6);

void emit_equivalence(std::ostream& out, const EquivalenceReport& r, Format fmt);

// One report per grid point, in grid order. f_template is parsed at each
// point with the point's parameters bound (e.g. "pow:1,alpha"); "random"
// draws one admissible function from opt.seed for every point. Failures
// at a point are recorded in that row. threads = 0 picks the hardware count.
std::vector<VerificationReport> scan(const std::string& case_id, const std::vector<Params>& grid,
                                     const std::string& f_template, const Options& opt = {},
                                     unsigned threads = 0);

// Seeded random step function on dom with 1 to 8 pieces, breakpoints
// uniform in log x, values sorted into the cone. Non-decreasing ones start
// with a zero piece.
FuncExpr random_step_function(std::uint64_t seed, const Domain& dom, Cone cone);

// Seeded random step function admissible for the case at ell: in its cone
// and, for the f(x) x^2 cone, built through the inversion.
FuncExpr random_admissible(const InequalityCase& c, double ell, std::uint64_t seed);

// Uniform double in [0, 1) from a 64-bit generator word.
double unit_from_bits(std::uint64_t bits);

}  // namespace sharphardy::catalog
