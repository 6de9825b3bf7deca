#pragma once

// Adaptive double-exponential quadrature over (0, ell) / (ell, inf) for
// dx and dx/x, and an independent midpoint-rule oracle.

#include <cstddef>
#include <functional>
#include <vector>

#include "sharphardy/domain.hpp"

namespace sharphardy::quad {

// Endpoint behaviour of an integrand: ~ x^gamma (or |b-x|^gamma), with an
// optional logarithmic factor. gamma <= -1 is not integrable.
struct Singularity {
    enum class Kind { None, Power, Log };
    Kind kind = Kind::None;
    double gamma = 0.0;

    static Singularity none() { return {}; }
    static Singularity power(double g) { return {Kind::Power, g}; }
    static Singularity log(double g = 0.0) { return {Kind::Log, g}; }
};

struct Integrand {
    // x -> g(x)
    std::function<double(double)> eval;
    // s -> g(e^s); optional. When present it is used for Haar-measure
    // domains, so decay over hundreds of decades stays representable.
    std::function<double(double)> eval_log;
    // Interior points (in x) where g has a kink or jump.
    std::vector<double> breakpoints;
    Singularity left, right;

    bool has_singularity() const {
        return left.kind != Singularity::Kind::None || right.kind != Singularity::Kind::None;
    }
};

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

inline constexpr double kSmoothRtol = 1e-10;
inline constexpr double kSingularRtol = 1e-8;
inline constexpr double kDefaultAtol = 1e-14;

// Integrates g against dom's measure over dom's interval. Throws
// DivergenceError for a declared gamma <= -1 or a numerically exploding
// integral, NumericalFailure when the refinement budget runs out.
QuadResult integrate(const Integrand& g, const Domain& dom, double rtol, double atol);
// Default tolerances: kSmoothRtol, or kSingularRtol if a singularity is declared.
QuadResult integrate(const Integrand& g, const Domain& dom);

// Plain Lebesgue integral of fn over (a, b); either end may be infinite.
QuadResult integrate_interval(const std::function<double(double)>& fn, double a, double b,
                              double rtol = kSmoothRtol, double atol = kDefaultAtol,
                              const std::vector<double>& breakpoints = {});

// Midpoint rule on n cells, uniform in log x for Haar domains and uniform in
// x otherwise. Infinite ends (and the 0 end of a Haar domain) are cut at
// lower_cut / upper_cut, which must then be supplied.
double riemann_oracle(const Integrand& g, const Domain& dom, std::size_t n,
                      double lower_cut = 0.0, double upper_cut = kInf);

}  // namespace sharphardy::quad
