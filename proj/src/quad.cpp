#include "sharphardy/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sharphardy/error.hpp"

namespace sharphardy::quad {

namespace {

constexpr int kMaxLevel = 7;    // finest step 2^-7
constexpr int kMinLevel = 3;
constexpr int kMaxDepth = 10;   // bisection depth per breakpoint segment
constexpr double kUMax = 6.1;   // d(u) underflows past this
constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// A segment of a reference interval. c0/c1 track T - t0 and T - t1 exactly,
// T being the right end of the root interval, so nodes next to a mapped
// infinite end keep full relative precision.
struct Seg {
    double t0, t1, c0, c1;
};

// phi(t, c) with c = T - t.
using Phi = std::function<double(double, double)>;

struct SegResult {
    double value = 0.0;
    double err = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

void check_value(double v, double t) {
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "integrand is not finite near t=" << t;
        throw DivergenceError(os.str());
    }
}

// Tanh-sinh on one segment with level doubling.
SegResult tanh_sinh(const Phi& phi, const Seg& s, double rtol, double abs_target) {
    const double len = s.t1 - s.t0;
    const double half_pi = std::numbers::pi / 2.0;
    SegResult r;

    auto node_pair = [&](double u) {
        const double e = std::exp(std::numbers::pi * std::sinh(u));
        const double d = 1.0 / (1.0 + e);
        const double one_minus_d = 1.0 / (1.0 + 1.0 / e);
        const double w = 2.0 * std::numbers::pi * std::cosh(u) * d * one_minus_d;
        const double dist = len * d;
        if (dist == 0.0 || w == 0.0) return std::pair<double, bool>{0.0, false};
        double acc = 0.0;
        const double tl = s.t0 + dist;
        if (tl != s.t0 || s.c0 - dist != s.c0) {
            const double v = phi(tl, s.c0 - dist);
            check_value(v, tl);
            acc += v;
            ++r.evals;
        }
        const double tr = s.t1 - dist;
        if (tr != s.t1 || s.c1 + dist != s.c1) {
            const double v = phi(tr, s.c1 + dist);
            check_value(v, tr);
            acc += v;
            ++r.evals;
        }
        return std::pair<double, bool>{w * acc, true};
    };

    const double mid_t = s.t0 + 0.5 * len;
    const double mid_c = s.c0 - 0.5 * len;
    double center = phi(mid_t, mid_c);
    check_value(center, mid_t);
    ++r.evals;

    double sum = half_pi * center;
    for (int k = 1; k <= static_cast<int>(kUMax); ++k) {
        auto [v, ok] = node_pair(k);
        if (!ok) break;
        sum += v;
    }
    double estimate = 0.5 * len * sum;
    double prev = estimate;
    int growth = 0;

    for (int level = 1; level <= kMaxLevel; ++level) {
        const double h = std::ldexp(1.0, -level);
        for (double u = h; u <= kUMax; u += 2.0 * h) {
            auto [v, ok] = node_pair(u);
            if (!ok) break;
            sum += v;
        }
        estimate = 0.5 * len * h * sum;
        if (!std::isfinite(estimate) || std::abs(estimate) > 1e250)
            throw DivergenceError("quadrature sum overflowed; integral diverges");
        const double diff = std::abs(estimate - prev);
        if (level >= 2 && std::abs(estimate) > 1.4 * std::abs(prev) && diff > abs_target)
            ++growth;
        else
            growth = 0;
        if (growth >= 4) throw DivergenceError("quadrature estimates grow without bound");
        r.value = estimate;
        r.err = diff;
        if (level >= kMinLevel && diff <= std::max(abs_target, rtol * std::abs(estimate))) {
            r.converged = true;
            return r;
        }
        prev = estimate;
    }
    return r;
}

SegResult adaptive(const Phi& phi, const Seg& s, double rtol, double abs_target, int depth) {
    SegResult r = tanh_sinh(phi, s, rtol, abs_target);
    if (r.converged || depth >= kMaxDepth) return r;
    const double half = 0.5 * (s.t1 - s.t0);
    const double tm = s.t0 + half;
    const double cm = s.c0 - half;
    SegResult a = adaptive(phi, {s.t0, tm, s.c0, cm}, rtol, 0.5 * abs_target, depth + 1);
    SegResult b = adaptive(phi, {tm, s.t1, cm, s.c1}, rtol, 0.5 * abs_target, depth + 1);
    SegResult out;
    out.value = a.value + b.value;
    out.err = a.err + b.err;
    out.evals = r.evals + a.evals + b.evals;
    out.converged = a.converged && b.converged;
    return out;
}

// Integral of fn over [a, b] with a < b, either possibly infinite.
SegResult integrate_piece(const std::function<double(double)>& fn, double a, double b,
                          double rtol, double abs_target) {
    const bool a_inf = std::isinf(a);
    const bool b_inf = std::isinf(b);
    if (!a_inf && !b_inf) {
        // Nodes are placed in the offset r = x - a so that their spacing stays
        // exact on intervals that are narrow compared with |a|.
        const double w = b - a;
        Phi phi = [&fn, a, b, w](double r, double c) {
            if (r <= 0.0 || c <= 0.0) return 0.0;
            double x = r < c ? a + r : b - c;
            // A node closer to an end than its spacing is evaluated at the
            // nearest interior double rather than dropped.
            if (x <= a) x = std::nextafter(a, b);
            if (x >= b) x = std::nextafter(b, a);
            return fn(x);
        };
        return adaptive(phi, {0.0, w, w, 0.0}, rtol, abs_target, 0);
    }
    if (a_inf && b_inf) {
        SegResult l = integrate_piece(fn, a, 0.0, rtol, 0.5 * abs_target);
        SegResult r = integrate_piece(fn, 0.0, b, rtol, 0.5 * abs_target);
        return {l.value + r.value, l.err + r.err, l.evals + r.evals, l.converged && r.converged};
    }
    // Map the half line onto t in [0, 1): x = a + t/(1-t) or x = b - t/(1-t).
    Phi phi;
    if (b_inf) {
        phi = [&fn, a](double t, double c) {
            if (c <= 0.0) return 0.0;
            double x = a + t / c;
            if (std::isinf(x)) return 0.0;
            if (x <= a) x = std::nextafter(a, kInfinity);
            const double v = fn(x);
            return v == 0.0 ? 0.0 : v / c / c;
        };
    } else {
        phi = [&fn, b](double t, double c) {
            if (c <= 0.0) return 0.0;
            double x = b - t / c;
            if (std::isinf(x)) return 0.0;
            if (x >= b) x = std::nextafter(b, -kInfinity);
            const double v = fn(x);
            return v == 0.0 ? 0.0 : v / c / c;
        };
    }
    return adaptive(phi, {0.0, 1.0, 1.0, 0.0}, rtol, abs_target, 0);
}

// Consulted only once the refinement budget has run out: fits a power law
// to |fn| at each end and reports whether it is too steep to integrate.
bool looks_divergent(const std::function<double(double)>& fn, double a, double b) {
    auto rate = [&fn](double x1, double x2, double d1, double d2) {
        const double v1 = std::abs(fn(x1)), v2 = std::abs(fn(x2));
        if (!(v1 > 0.0) || !(v2 > 0.0) || !std::isfinite(v1) || !std::isfinite(v2)) return kNaN;
        return std::log(v2 / v1) / std::log(d2 / d1);
    };
    const double w = std::isfinite(a) && std::isfinite(b) ? b - a : 1.0;
    const double left = std::isfinite(a) ? rate(a + w * 1e-6, a + w * 1e-10, 1e-6, 1e-10)
                                         : -2.0 - rate(std::min(b, 0.0) - 1e6, std::min(b, 0.0) - 1e10, 1e6, 1e10);
    const double right = std::isfinite(b) ? rate(b - w * 1e-6, b - w * 1e-10, 1e-6, 1e-10)
                                          : -2.0 - rate(std::max(a, 0.0) + 1e6, std::max(a, 0.0) + 1e10, 1e6, 1e10);
    return left < -0.98 || right < -0.98;
}

QuadResult integrate_pieces(const std::function<double(double)>& fn, double lo, double hi,
                            std::vector<double> cuts, double rtol, double atol) {
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> pts{lo};
    for (double c : cuts)
        if (c > pts.back() && c < hi && std::isfinite(c)) pts.push_back(c);
    pts.push_back(hi);

    // A coarse first pass sets the absolute target for the real one.
    QuadResult out;
    double scale = 0.0;
    std::vector<SegResult> parts;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        parts.push_back(integrate_piece(fn, pts[i], pts[i + 1], rtol, atol));
        scale += std::abs(parts.back().value);
    }
    const double target = std::max(atol, rtol * scale);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        SegResult r = parts[i];
        if (!r.converged || r.err > target) {
            const double share = target / static_cast<double>(pts.size() - 1);
            SegResult again = integrate_piece(fn, pts[i], pts[i + 1], rtol, share);
            again.evals += r.evals;
            r = again;
        }
        out.value += r.value;
        out.abs_error_estimate += r.err;
        out.evaluations += r.evals;
        ok = ok && (r.converged || r.err <= 100.0 * target);
    }
    if (!ok && out.abs_error_estimate > std::max(atol, 100.0 * rtol * std::abs(out.value))) {
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (looks_divergent(fn, pts[i], pts[i + 1]))
                throw DivergenceError("integrand decays too slowly at an end of the interval; integral diverges");
        std::ostringstream os;
        os << "quadrature did not converge: estimate " << out.value << " +/- "
           << out.abs_error_estimate;
        throw NumericalFailure(os.str(), out.value);
    }
    return out;
}

void check_declared(const Singularity& s) {
    if (s.kind == Singularity::Kind::Power && s.gamma <= -1.0)
        throw DivergenceError("declared endpoint exponent <= -1: integrand is not integrable");
    if (s.kind == Singularity::Kind::Log && s.gamma <= -1.0)
        throw DivergenceError("declared endpoint exponent <= -1: integrand is not integrable");
}

}  // namespace

QuadResult integrate(const Integrand& g, const Domain& dom, double rtol, double atol) {
    if (!(rtol > 0.0) || !(atol > 0.0)) throw ParameterError("rtol and atol must be positive");
    check_declared(g.left);
    check_declared(g.right);
    const double lo = dom.lo();
    const double hi = dom.hi();
    if (!(hi > lo)) throw DomainError("empty integration domain " + dom.describe());

    if (dom.measure() == Measure::Haar) {
        std::function<double(double)> fs;
        if (g.eval_log)
            fs = g.eval_log;
        else
            // Once e^s leaves the doubles the integrand of a convergent Haar
            // integral is indistinguishable from 0.
            fs = [&g](double s) {
                const double x = std::exp(s);
                return x == 0.0 || std::isinf(x) ? 0.0 : g.eval(x);
            };
        std::vector<double> cuts;
        for (double b : g.breakpoints)
            if (b > 0.0) cuts.push_back(std::log(b));
        return integrate_pieces(fs, std::log(lo), std::log(hi), cuts, rtol, atol);
    }
    return integrate_pieces(g.eval, lo, hi, g.breakpoints, rtol, atol);
}

QuadResult integrate(const Integrand& g, const Domain& dom) {
    return integrate(g, dom, g.has_singularity() ? kSingularRtol : kSmoothRtol, kDefaultAtol);
}

QuadResult integrate_interval(const std::function<double(double)>& fn, double a, double b,
                              double rtol, double atol, const std::vector<double>& breakpoints) {
    if (a == b) return {};
    if (a > b) {
        QuadResult r = integrate_interval(fn, b, a, rtol, atol, breakpoints);
        r.value = -r.value;
        return r;
    }
    return integrate_pieces(fn, a, b, breakpoints, rtol, atol);
}

double riemann_oracle(const Integrand& g, const Domain& dom, std::size_t n, double lower_cut,
                      double upper_cut) {
    if (n < 10) throw ParameterError("riemann_oracle needs n >= 10");
    double lo = std::max(dom.lo(), lower_cut);
    double hi = std::min(dom.hi(), upper_cut);
    const bool haar = dom.measure() == Measure::Haar;
    if (std::isinf(hi) || (haar && lo <= 0.0))
        throw ParameterError("riemann_oracle needs explicit truncation for this domain");
    if (!(hi > lo)) throw DomainError("empty oracle interval");

    double total = 0.0;
    if (haar) {
        const double a = std::log(lo);
        const double width = (std::log(hi) - a) / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double s = a + (static_cast<double>(i) + 0.5) * width;
            total += g.eval_log ? g.eval_log(s) : g.eval(std::exp(s));
        }
        return total * width;
    }
    const double width = (hi - lo) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) total += g.eval(lo + (static_cast<double>(i) + 0.5) * width);
    return total * width;
}

}  // namespace sharphardy::quad
