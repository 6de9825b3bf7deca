#pragma once

// Non-increasing rearrangement of step functions and the Lorentz
// quasi-norms built on it.

#include <optional>
#include <string>
#include <vector>

#include "sharphardy/domain.hpp"
#include "sharphardy/funcspace.hpp"
#include "sharphardy/report.hpp"

namespace sharphardy::lorentz {

struct Piece {
    double measure;  // > 0, may be inf for a trailing zero piece
    double value;    // >= 0
};

// A function on a totally ordered measure space given as consecutive
// pieces. Equal adjacent values are merged on construction.
class StepFunction {
public:
    StepFunction() = default;
    explicit StepFunction(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    double total_measure() const noexcept;
    bool non_increasing() const noexcept;
    bool is_zero() const noexcept;

    StepFunction scaled(double lambda) const;
    // Measure of {f > lambda}.
    double level_measure(double lambda) const;

    // step:[m1:v1;m2:v2;...]
    std::string to_string() const;

private:
    std::vector<Piece> pieces_;
};

StepFunction parse_step(const std::string& text);

// Indicators and sampled functions (and sums of them with disjoint
// supports laid end to end) as a step function in x.
StepFunction step_from_function(const FuncExpr& f);

StepFunction rearrange(const StepFunction& f);

struct LorentzParams {
    double p = 2.0;
    double q = 2.0;
    double ell = kInf;

    double pconj() const { return p / (p - 1.0); }
};

// (integral over (0, ell) of (f*(t) t^(1/p))^q dt/t)^(1/q). With target the
// integrand carries 1 - (t/ell)^(q/p'), which needs p > 1.
double norm_star(const StepFunction& fstar, const LorentzParams& lp, bool target = false);

enum class Variant { Forward, Dual };

// Forward: (integral over (0, ell) of (int_0^t f*)^q t^(-q/p') dt/t)^(1/q).
// Dual: the tail int_t^inf f* over (0, inf) instead.
double norm_doublestar(const StepFunction& fstar, const LorentzParams& lp, Variant v);

// plain:  (p')^(1/q) |f|* <= |f|** <= p' |f|*, p > 1, ell = inf
// target: the same with the target-weighted |f|* on (0, ell)
// dual:   (q B(q, -q/p'))^(1/q) |f|* <= |f|** <= -p' |f|*, 0 < p < 1
// Both chains reverse for q < 1 and collapse to equalities at q = 1.
enum class Comparison { Plain, Target, Dual };

std::string to_string(Comparison c);
std::optional<Comparison> comparison_from_string(const std::string& s);
// Catalog id of each comparison: LZ1, LZ2, LZ3.
std::string case_id(Comparison c);

VerificationReport compare(const StepFunction& f, const LorentzParams& lp, Comparison which, double tol = 1e-5);

}  // namespace sharphardy::lorentz
