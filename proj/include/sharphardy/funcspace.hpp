#pragma once

// Non-negative functions on (0, inf) in the families the inequalities are
// tested against, with exact antiderivatives where they exist.
//
// Every quantity is also available in logarithmic coordinates
// (s = log x, results as log values) so that Haar-measure integrals over
// many decades never underflow: log_evaluate(f, s) == log(f(e^s)).

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sharphardy/domain.hpp"

namespace sharphardy {

enum class Cone { NonIncreasing, NonDecreasing, Unrestricted };

// Logarithmic factor of a LogPower term.
//   ElOverX: log(e*ell/x) on (0, ell)
//   LOverX:  log(ell/x)   on (0, ell)
//   Dual:    log(x*e/ell) on (ell, inf)
enum class LogForm { ElOverX, LOverX, Dual };

struct Exponents {
    double p = 2.0;
    double q = 2.0;
    double alpha = 1.0;
    double beta = 1.0;
    double a = 0.0;

    // p' = p/(p-1); negative for 0 < p < 1.
    double pconj() const;
};

namespace detail {
struct Node;
}

class FuncExpr {
public:
    static FuncExpr power(double A, double a);
    static FuncExpr indicator(double c1, double c2, double A = 1.0);
    static FuncExpr log_power(double A, double a, double b, LogForm form, double ell = 1.0);
    // Left-continuous step function: values[i] on (grid[i-1], grid[i]] with
    // grid[-1] = 0, and zero beyond grid.back().
    static FuncExpr sampled(std::vector<double> grid, std::vector<double> values,
                            std::string source = {});
    static FuncExpr sum(std::vector<FuncExpr> parts);
    // A * (1 + x^b)^(-c)
    static FuncExpr bliss(double A, double b, double c);
    // g(x^k) * x^(k-1). Closed under composition; warp(warp(g, -1), -1) is g.
    static FuncExpr warp(const FuncExpr& g, double k);

    // Returns a copy carrying the declared cone, verified over `over`.
    FuncExpr with_cone(Cone c, const Domain& over = Domain::lower(kInf)) const;
    Cone cone() const noexcept { return cone_; }

    FuncExpr scaled(double lambda) const;

    // Points where the function or its antiderivative has a kink or jump.
    std::vector<double> breakpoints() const;

    // Mini-language spelling; parse_function(to_string()) reproduces it.
    std::string to_string() const;

    const detail::Node& node() const noexcept { return *node_; }

private:
    explicit FuncExpr(std::shared_ptr<const detail::Node> n, Cone c = Cone::Unrestricted)
        : node_(std::move(n)), cone_(c) {}

    std::shared_ptr<const detail::Node> node_;
    Cone cone_ = Cone::Unrestricted;
};

namespace terms {

struct Power {
    double A, a;
};
struct Indicator {
    double c1, c2, A;
};
struct LogPower {
    double A, a, b;
    LogForm form;
    double ell;
};
struct Sampled {
    std::vector<double> grid, values;
    std::vector<double> prefix;  // prefix[i] = integral over (0, grid[i]]
    std::string source;
};
struct Sum {
    std::vector<FuncExpr> parts;
};
struct Warp {
    FuncExpr inner;
    double k;
};
struct Bliss {
    double A, b, c;
};

}  // namespace terms

namespace detail {
struct Node {
    std::variant<terms::Power, terms::Indicator, terms::LogPower, terms::Sampled,
                 terms::Sum, terms::Warp, terms::Bliss>
        term;
};
}  // namespace detail

double evaluate(const FuncExpr& f, double x);
double log_evaluate(const FuncExpr& f, double s);

// F(x) = integral of f over (0, x).
double cumulative(const FuncExpr& f, double x);
double log_cumulative(const FuncExpr& f, double s);

// Integral of f over (x, inf).
double tail(const FuncExpr& f, double x);
double log_tail(const FuncExpr& f, double s);

// f(x) = g(x^(1-1/p)) x^(-1/p), p > 1.
FuncExpr transform_substitution(const FuncExpr& g, double p);
// g(x) = f(1/x) x^(-2).
FuncExpr transform_inverse(const FuncExpr& f);

// Monotonicity over the interior of `over`: exact for Power and Indicator,
// otherwise on a 512-point log grid plus every breakpoint.
bool cone_check(const FuncExpr& f, Cone cone, const Domain& over = Domain::lower(kInf));

// True when f > 0 throughout the interior of dom. Indicator terms never
// qualify on their own.
bool strictly_positive(const FuncExpr& f, const Domain& dom);

std::string to_string(Cone c);
std::string to_string(LogForm f);

}  // namespace sharphardy
