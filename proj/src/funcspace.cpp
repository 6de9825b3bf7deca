#include "sharphardy/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "sharphardy/error.hpp"
#include "sharphardy/numfmt.hpp"
#include "sharphardy/quad.hpp"
#include "sharphardy/special.hpp"

namespace sharphardy {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double safe_log(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

// log(1 + e^z) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

// log of the integral of exp(h(t)) over (a, b); either end may be infinite.
// h is shifted by its largest sampled value so the integrand stays O(1).
double log_integral_s(const std::function<double(double)>& h, double a, double b,
                      const std::vector<double>& cuts) {
    if (!(b > a)) return kNegInf;
    std::vector<double> probes;
    if (std::isfinite(a) && std::isfinite(b)) {
        for (int i = 0; i <= 32; ++i) probes.push_back(a + (b - a) * (i + 0.5) / 33.5);
    } else {
        const double base = std::isfinite(b) ? b : (std::isfinite(a) ? a : 0.0);
        const double dir = std::isfinite(b) ? -1.0 : 1.0;
        probes.push_back(base);
        for (double step = 1.0 / 1024; step <= 4096.0; step *= 2.0) {
            probes.push_back(base + dir * step);
            if (!std::isfinite(a) && !std::isfinite(b)) probes.push_back(base - dir * step);
        }
    }
    for (double c : cuts)
        if (c > a && c < b) probes.push_back(c);
    double ref = kNegInf;
    for (double t : probes) {
        const double v = h(t);
        if (std::isfinite(v)) ref = std::max(ref, v);
    }
    if (ref == kNegInf) return kNegInf;
    auto g = [&h, ref](double t) {
        const double v = h(t);
        return v == kNegInf ? 0.0 : std::exp(v - ref);
    };
    const quad::QuadResult r = quad::integrate_interval(g, a, b, quad::kSmoothRtol, 1e-300, cuts);
    if (!(r.value > 0.0)) return kNegInf;
    return ref + std::log(r.value);
}

void require_positive_x(double x) {
    if (!(x > 0.0) || std::isnan(x)) throw DomainError("function argument must be positive, got x=" + fmt_num(x));
}

// ---- LogPower helpers --------------------------------------------------

// Support in s = log x and the log-argument L(s).
double lp_lo(const terms::LogPower& t) { return t.form == LogForm::Dual ? std::log(t.ell) : kNegInf; }
double lp_hi(const terms::LogPower& t) {
    return t.form == LogForm::Dual ? std::numeric_limits<double>::infinity() : std::log(t.ell);
}
double lp_L(const terms::LogPower& t, double s) {
    switch (t.form) {
        case LogForm::ElOverX: return 1.0 + std::log(t.ell) - s;
        case LogForm::LOverX: return std::log(t.ell) - s;
        case LogForm::Dual: return s + 1.0 - std::log(t.ell);
    }
    return 0.0;
}
double lp_log_eval(const terms::LogPower& t, double s) {
    if (t.A == 0.0 || !(s > lp_lo(t)) || !(s < lp_hi(t))) return kNegInf;
    double v = std::log(t.A) + t.a * s;
    if (t.b != 0.0) v += t.b * std::log(lp_L(t, s));
    return v;
}

// log of the integral of f over (e^s0, e^s1), s0 < s1, restricted to the support.
double lp_log_integral(const terms::LogPower& t, double s0, double s1) {
    s0 = std::max(s0, lp_lo(t));
    s1 = std::min(s1, lp_hi(t));
    if (!(s1 > s0) || t.A == 0.0) return kNegInf;
    const double k = t.a + 1.0;
    if (t.b == 0.0) {
        // A/(a+1) (x1^{a+1} - x0^{a+1}) computed in log form.
        if (k == 0.0) return std::log(t.A) + std::log(s1 - s0);
        if (k > 0.0) {
            // e^{k s1} (1 - e^{-k (s1 - s0)}) / k
            const double d = std::isinf(s0) ? 0.0 : std::log(-std::expm1(-k * (s1 - s0)));
            return std::log(t.A) + k * s1 + d - std::log(k);
        }
        const double d = std::isinf(s1) ? 0.0 : std::log(-std::expm1(k * (s1 - s0)));
        return std::log(t.A) + k * s0 + d - std::log(-k);
    }
    // (a+1) s in one product: a s + s cancels catastrophically for large |s|.
    auto h = [&t, k](double s) {
        if (!(s > lp_lo(t)) || !(s < lp_hi(t))) return kNegInf;
        return std::log(t.A) + k * s + t.b * std::log(lp_L(t, s));
    };
    return log_integral_s(h, s0, s1, {});
}

void lp_check_cumulative(const terms::LogPower& t) {
    if (t.form == LogForm::Dual) return;
    const double k = t.a + 1.0;
    if (k > 0.0 || (k == 0.0 && t.b < -1.0)) {
        if (t.form == LogForm::LOverX && t.b <= -1.0)
            throw DivergenceError("logpow: log(ell/x)^b with b <= -1 is not integrable at ell");
        return;
    }
    throw DivergenceError("logpow: integral near 0 diverges (a=" + fmt_num(t.a) + ", b=" + fmt_num(t.b) + ")");
}

void lp_check_tail(const terms::LogPower& t) {
    if (t.form == LogForm::LOverX && t.b <= -1.0)
        throw DivergenceError("logpow: log(ell/x)^b with b <= -1 is not integrable at ell");
    if (t.form != LogForm::Dual) return;
    const double k = t.a + 1.0;
    if (k < 0.0 || (k == 0.0 && t.b < -1.0)) return;
    throw DivergenceError("logpow: tail integral diverges (a=" + fmt_num(t.a) + ", b=" + fmt_num(t.b) + ")");
}

// ---- Bliss helpers ------------------------------------------------------

double bliss_log_eval(const terms::Bliss& t, double s) {
    if (t.A == 0.0) return kNegInf;
    return std::log(t.A) - t.c * softplus(t.b * s);
}

// With z = x^b/(1+x^b) the integral of (1+y^b)^-c over (0, x) is
// (1/b) times the incomplete beta integral of t^(1/b-1) (1-t)^(c-1/b-1)
// over (0, z); the tail is the same over (z, 1).
double bliss_log_cumulative(const terms::Bliss& t, double s) {
    if (t.A == 0.0) return kNegInf;
    const double bs = t.b * s;
    // (1+x^b)^-c = 1 - c x^b + ... is 1 to double precision here.
    if (bs < -40.0) return std::log(t.A) + s;
    const double u = 1.0 / t.b, v = t.c - u;
    const double z = std::exp(bs - softplus(bs));
    return std::log(t.A) - std::log(t.b) + safe_log(special::trunc_beta_complement(z, v, u));
}

double bliss_log_tail(const terms::Bliss& t, double s) {
    if (t.A == 0.0) return kNegInf;
    const double bs = t.b * s;
    const double m = t.b * t.c;
    if (bs > 40.0) return std::log(t.A) + (1.0 - m) * s - std::log(m - 1.0);
    const double u = 1.0 / t.b, v = t.c - u;
    const double one_minus_z = std::exp(-softplus(bs));
    return std::log(t.A) - std::log(t.b) + safe_log(special::trunc_beta_complement(one_minus_z, u, v));
}

// ---- generic recursion --------------------------------------------------

double log_eval_node(const detail::Node& n, double s);
double log_cum_node(const detail::Node& n, double s);
double log_tail_node(const detail::Node& n, double s);

double log_eval_node(const detail::Node& n, double s) {
    return std::visit(
        overloaded{
            [s](const terms::Power& t) { return t.A > 0.0 ? std::log(t.A) + t.a * s : kNegInf; },
            // Jumps are located in s: exp(s) rounds to the jump point for
            // s within an ulp of log(c), on the wrong side half the time.
            [s](const terms::Indicator& t) {
                return (s > std::log(t.c1) && s <= std::log(t.c2)) ? safe_log(t.A) : kNegInf;
            },
            [s](const terms::LogPower& t) { return lp_log_eval(t, s); },
            [s](const terms::Sampled& t) {
                auto it = std::lower_bound(t.grid.begin(), t.grid.end(), s,
                                           [](double g, double v) { return std::log(g) < v; });
                if (it == t.grid.end()) return kNegInf;
                return safe_log(t.values[static_cast<std::size_t>(it - t.grid.begin())]);
            },
            [s](const terms::Sum& t) {
                double acc = kNegInf;
                for (const auto& p : t.parts) acc = log_add(acc, log_eval_node(p.node(), s));
                return acc;
            },
            [s](const terms::Warp& t) {
                const double v = log_eval_node(t.inner.node(), t.k * s);
                return v == kNegInf ? v : v + (t.k - 1.0) * s;
            },
            [s](const terms::Bliss& t) { return bliss_log_eval(t, s); },
        },
        n.term);
}

double log_cum_node(const detail::Node& n, double s) {
    return std::visit(
        overloaded{
            [s](const terms::Power& t) {
                if (t.A == 0.0) return kNegInf;
                if (t.a <= -1.0)
                    throw DivergenceError("pow: integral near 0 diverges (a=" + fmt_num(t.a) + " <= -1)");
                return std::log(t.A) + (t.a + 1.0) * s - std::log(t.a + 1.0);
            },
            [s](const terms::Indicator& t) {
                const double x = std::exp(s);
                if (x <= t.c1 || t.A == 0.0) return kNegInf;
                if (t.c1 == 0.0 && x <= t.c2) return std::log(t.A) + s;
                return std::log(t.A) + std::log(std::min(x, t.c2) - t.c1);
            },
            [s](const terms::LogPower& t) {
                lp_check_cumulative(t);
                return lp_log_integral(t, kNegInf, s);
            },
            [s](const terms::Sampled& t) {
                const double x = std::exp(s);
                if (t.grid.empty()) return kNegInf;
                auto it = std::lower_bound(t.grid.begin(), t.grid.end(), x);
                if (it == t.grid.end()) return safe_log(t.prefix.back());
                const auto i = static_cast<std::size_t>(it - t.grid.begin());
                if (i == 0) return t.values[0] > 0.0 ? std::log(t.values[0]) + s : kNegInf;
                return safe_log(t.prefix[i - 1] + t.values[i] * (x - t.grid[i - 1]));
            },
            [s](const terms::Sum& t) {
                double acc = kNegInf;
                for (const auto& p : t.parts) acc = log_add(acc, log_cum_node(p.node(), s));
                return acc;
            },
            [s](const terms::Warp& t) {
                const double inner = t.k > 0.0 ? log_cum_node(t.inner.node(), t.k * s)
                                               : log_tail_node(t.inner.node(), t.k * s);
                return inner == kNegInf ? inner : inner - std::log(std::abs(t.k));
            },
            [s](const terms::Bliss& t) { return bliss_log_cumulative(t, s); },
        },
        n.term);
}

double log_tail_node(const detail::Node& n, double s) {
    return std::visit(
        overloaded{
            [s](const terms::Power& t) {
                if (t.A == 0.0) return kNegInf;
                if (t.a >= -1.0)
                    throw DivergenceError("pow: tail integral diverges (a=" + fmt_num(t.a) + " >= -1)");
                return std::log(t.A) + (t.a + 1.0) * s - std::log(-t.a - 1.0);
            },
            [s](const terms::Indicator& t) {
                if (t.A == 0.0) return kNegInf;
                if (std::isinf(t.c2)) throw DivergenceError("ind: tail integral of an unbounded indicator diverges");
                const double x = std::exp(s);
                if (x >= t.c2) return kNegInf;
                return std::log(t.A) + std::log(t.c2 - std::max(x, t.c1));
            },
            [s](const terms::LogPower& t) {
                lp_check_tail(t);
                return lp_log_integral(t, s, std::numeric_limits<double>::infinity());
            },
            [s](const terms::Sampled& t) {
                if (t.grid.empty()) return kNegInf;
                const double x = std::exp(s);
                auto it = std::lower_bound(t.grid.begin(), t.grid.end(), x);
                if (it == t.grid.end()) return kNegInf;
                const auto i = static_cast<std::size_t>(it - t.grid.begin());
                // (x, grid[i]] at values[i], then the later cells.
                double later = t.prefix.back() - t.prefix[i];
                return safe_log(later + t.values[i] * (t.grid[i] - x));
            },
            [s](const terms::Sum& t) {
                double acc = kNegInf;
                for (const auto& p : t.parts) acc = log_add(acc, log_tail_node(p.node(), s));
                return acc;
            },
            [s](const terms::Warp& t) {
                const double inner = t.k > 0.0 ? log_tail_node(t.inner.node(), t.k * s)
                                               : log_cum_node(t.inner.node(), t.k * s);
                return inner == kNegInf ? inner : inner - std::log(std::abs(t.k));
            },
            [s](const terms::Bliss& t) {
                if (t.b * t.c <= 1.0)
                    throw DivergenceError("bliss: tail integral diverges (b*c <= 1)");
                return bliss_log_tail(t, s);
            },
        },
        n.term);
}

double eval_node(const detail::Node& n, double x) {
    return std::visit(
        overloaded{
            [x](const terms::Power& t) { return t.A * std::pow(x, t.a); },
            [x](const terms::Indicator& t) { return (x > t.c1 && x <= t.c2) ? t.A : 0.0; },
            [x](const terms::LogPower& t) {
                const double v = lp_log_eval(t, std::log(x));
                return v == kNegInf ? 0.0 : std::exp(v);
            },
            [x](const terms::Sampled& t) {
                auto it = std::lower_bound(t.grid.begin(), t.grid.end(), x);
                if (it == t.grid.end()) return 0.0;
                return t.values[static_cast<std::size_t>(it - t.grid.begin())];
            },
            [x](const terms::Sum& t) {
                double acc = 0.0;
                for (const auto& p : t.parts) acc += eval_node(p.node(), x);
                return acc;
            },
            [x](const terms::Warp& t) {
                const double v = eval_node(t.inner.node(), std::pow(x, t.k));
                return v == 0.0 ? 0.0 : v * std::pow(x, t.k - 1.0);
            },
            [x](const terms::Bliss& t) { return t.A * std::pow(1.0 + std::pow(x, t.b), -t.c); },
        },
        n.term);
}

double cum_node(const detail::Node& n, double x) {
    return std::visit(
        overloaded{
            [x](const terms::Power& t) {
                if (t.A == 0.0) return 0.0;
                if (t.a <= -1.0)
                    throw DivergenceError("pow: integral near 0 diverges (a=" + fmt_num(t.a) + " <= -1)");
                return t.A * std::pow(x, t.a + 1.0) / (t.a + 1.0);
            },
            [x](const terms::Indicator& t) { return t.A * std::max(0.0, std::min(x, t.c2) - t.c1); },
            [x](const terms::Sampled& t) {
                if (t.grid.empty()) return 0.0;
                auto it = std::lower_bound(t.grid.begin(), t.grid.end(), x);
                if (it == t.grid.end()) return t.prefix.back();
                const auto i = static_cast<std::size_t>(it - t.grid.begin());
                const double left = i == 0 ? 0.0 : t.grid[i - 1];
                const double before = i == 0 ? 0.0 : t.prefix[i - 1];
                return before + t.values[i] * (x - left);
            },
            [x](const terms::Sum& t) {
                double acc = 0.0;
                for (const auto& p : t.parts) acc += cum_node(p.node(), x);
                return acc;
            },
            [x, &n](const auto&) {
                const double v = log_cum_node(n, std::log(x));
                return v == kNegInf ? 0.0 : std::exp(v);
            },
        },
        n.term);
}

double tail_node(const detail::Node& n, double x) {
    return std::visit(
        overloaded{
            [x](const terms::Power& t) {
                if (t.A == 0.0) return 0.0;
                if (t.a >= -1.0)
                    throw DivergenceError("pow: tail integral diverges (a=" + fmt_num(t.a) + " >= -1)");
                return t.A * std::pow(x, t.a + 1.0) / (-t.a - 1.0);
            },
            [x](const terms::Indicator& t) {
                if (t.A == 0.0) return 0.0;
                if (std::isinf(t.c2)) throw DivergenceError("ind: tail integral of an unbounded indicator diverges");
                return t.A * std::max(0.0, t.c2 - std::max(x, t.c1));
            },
            [x](const terms::Sum& t) {
                double acc = 0.0;
                for (const auto& p : t.parts) acc += tail_node(p.node(), x);
                return acc;
            },
            [x, &n](const auto&) {
                const double v = log_tail_node(n, std::log(x));
                return v == kNegInf ? 0.0 : std::exp(v);
            },
        },
        n.term);
}

void collect_breaks(const detail::Node& n, std::vector<double>& out);

// Integral over (0, inf), split at the largest breakpoint.
double total_integral(const detail::Node& n) {
    std::vector<double> br;
    collect_breaks(n, br);
    double x0 = 1.0;
    for (double b : br)
        if (std::isfinite(b) && b > 0.0) x0 = std::max(x0, b);
    return cum_node(n, x0) + tail_node(n, x0);
}

// ---- breakpoints --------------------------------------------------------

void collect_breaks(const detail::Node& n, std::vector<double>& out) {
    std::visit(overloaded{
                   [](const terms::Power&) {},
                   [&out](const terms::Indicator& t) {
                       if (t.c1 > 0.0) out.push_back(t.c1);
                       if (std::isfinite(t.c2)) out.push_back(t.c2);
                   },
                   [&out](const terms::LogPower& t) {
                       if (std::isfinite(t.ell)) out.push_back(t.ell);
                   },
                   [&out](const terms::Sampled& t) { out.insert(out.end(), t.grid.begin(), t.grid.end()); },
                   [&out](const terms::Sum& t) {
                       for (const auto& p : t.parts) collect_breaks(p.node(), out);
                   },
                   [&out](const terms::Warp& t) {
                       std::vector<double> inner;
                       collect_breaks(t.inner.node(), inner);
                       for (double b : inner) {
                           const double v = std::pow(b, 1.0 / t.k);
                           if (v > 0.0 && std::isfinite(v)) out.push_back(v);
                       }
                   },
                   [&out](const terms::Bliss&) { out.push_back(1.0); },
               },
               n.term);
}

// ---- cone and positivity on an interval (lo, hi) ------------------------

// 1: exact answer true, 0: exact false, -1: not decidable exactly.
int exact_cone(const detail::Node& n, Cone cone, double lo, double hi) {
    if (const auto* p = std::get_if<terms::Power>(&n.term)) {
        if (p->A == 0.0 || p->a == 0.0) return 1;
        if (cone == Cone::NonIncreasing) return p->a < 0.0 ? 1 : 0;
        return p->a > 0.0 ? 1 : 0;
    }
    if (const auto* ind = std::get_if<terms::Indicator>(&n.term)) {
        const double a = std::max(ind->c1, lo);
        const double b = std::min(ind->c2, hi);
        if (!(b > a) || ind->A == 0.0) return 1;
        if (cone == Cone::NonIncreasing) return ind->c1 <= lo ? 1 : 0;
        return ind->c2 >= hi ? 1 : 0;
    }
    return -1;
}

bool sampled_cone(const detail::Node& n, Cone cone, double lo, double hi) {
    std::vector<double> br;
    collect_breaks(n, br);
    std::vector<double> logs;
    for (double b : br)
        if (b > 0.0 && std::isfinite(b)) logs.push_back(std::log(b));
    if (lo > 0.0) logs.push_back(std::log(lo));
    if (std::isfinite(hi)) logs.push_back(std::log(hi));
    double smin = 0.0, smax = 0.0;
    if (!logs.empty()) {
        smin = *std::min_element(logs.begin(), logs.end());
        smax = *std::max_element(logs.begin(), logs.end());
    }
    smin -= 20.0;
    smax += 20.0;
    if (lo > 0.0) smin = std::max(smin, std::log(lo));
    if (std::isfinite(hi)) smax = std::min(smax, std::log(hi));

    std::vector<double> xs;
    constexpr int kGrid = 512;
    for (int i = 0; i < kGrid; ++i) {
        const double s = smin + (smax - smin) * (i + 0.5) / kGrid;
        xs.push_back(std::exp(s));
    }
    for (double b : br) {
        for (double x : {b * (1.0 - 1e-9), b, b * (1.0 + 1e-9)})
            if (x > lo && x < hi) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<double> vals;
    vals.reserve(xs.size());
    for (double x : xs) vals.push_back(std::exp(log_eval_node(n, std::log(x))));
    for (std::size_t i = 1; i < vals.size(); ++i) {
        const double prev = vals[i - 1], cur = vals[i];
        const double slack = 1e-9 * std::max(std::abs(prev), std::abs(cur));
        if (cone == Cone::NonIncreasing && cur > prev + slack) return false;
        if (cone == Cone::NonDecreasing && cur < prev - slack) return false;
    }
    return true;
}

bool positive_on(const detail::Node& n, double lo, double hi) {
    return std::visit(
        overloaded{
            [](const terms::Power& t) { return t.A > 0.0; },
            [](const terms::Indicator&) { return false; },
            [lo, hi](const terms::LogPower& t) {
                if (!(t.A > 0.0)) return false;
                if (t.form == LogForm::Dual) return lo >= t.ell;
                return hi <= t.ell;
            },
            [lo, hi](const terms::Sampled& t) {
                if (t.grid.empty() || t.grid.back() < hi) return false;
                for (std::size_t i = 0; i < t.grid.size(); ++i) {
                    const double left = i == 0 ? 0.0 : t.grid[i - 1];
                    if (t.grid[i] > lo && left < hi && !(t.values[i] > 0.0)) return false;
                }
                return true;
            },
            [lo, hi](const terms::Sum& t) {
                return std::any_of(t.parts.begin(), t.parts.end(),
                                   [&](const FuncExpr& p) { return positive_on(p.node(), lo, hi); });
            },
            [lo, hi](const terms::Warp& t) {
                double a = std::pow(lo, t.k), b = std::pow(hi, t.k);
                if (a > b) std::swap(a, b);
                return positive_on(t.inner.node(), a, b);
            },
            [](const terms::Bliss& t) { return t.A > 0.0; },
        },
        n.term);
}

// ---- spelling -----------------------------------------------------------

std::string spell(const detail::Node& n) {
    return std::visit(
        overloaded{
            [](const terms::Power& t) { return "pow:" + fmt_num(t.A) + "," + fmt_num(t.a); },
            [](const terms::Indicator& t) {
                return "ind:" + fmt_num(t.c1) + "," + fmt_num(t.c2) + "," + fmt_num(t.A);
            },
            [](const terms::LogPower& t) {
                std::string s = "logpow:" + fmt_num(t.A) + "," + fmt_num(t.a) + "," + fmt_num(t.b) + "," +
                                to_string(t.form);
                if (t.ell != 1.0) s += "," + fmt_num(t.ell);
                return s;
            },
            [](const terms::Sampled& t) {
                std::string s = "sampled:[";
                for (std::size_t i = 0; i < t.grid.size(); ++i) {
                    if (i) s += ";";
                    s += fmt_num(t.grid[i]) + ":" + fmt_num(t.values[i]);
                }
                return s + "]";
            },
            [](const terms::Sum& t) {
                std::string s = "sum:[";
                for (std::size_t i = 0; i < t.parts.size(); ++i) {
                    if (i) s += ";";
                    s += t.parts[i].to_string();
                }
                return s + "]";
            },
            [](const terms::Warp& t) { return "warp:" + fmt_num(t.k) + ",[" + t.inner.to_string() + "]"; },
            [](const terms::Bliss& t) {
                return "bliss:" + fmt_num(t.A) + "," + fmt_num(t.b) + "," + fmt_num(t.c);
            },
        },
        n.term);
}

void require_finite_nonneg(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw ParameterError(std::string(what) + " must be finite and non-negative, got " + fmt_num(v));
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw ParameterError(std::string(what) + " must be finite, got " + fmt_num(v));
}

}  // namespace

double Exponents::pconj() const {
    if (p == 1.0) throw ParameterError("conjugate exponent p' is undefined at p=1");
    return p / (p - 1.0);
}

FuncExpr FuncExpr::power(double A, double a) {
    require_finite_nonneg(A, "pow coefficient A");
    require_finite(a, "pow exponent a");
    return FuncExpr(std::make_shared<detail::Node>(detail::Node{terms::Power{A, a}}));
}

FuncExpr FuncExpr::indicator(double c1, double c2, double A) {
    if (!(c1 >= 0.0) || !(c2 > c1) || std::isinf(c1))
        throw ParameterError("ind needs 0 <= c1 < c2 <= inf, got c1=" + fmt_num(c1) + " c2=" + fmt_num(c2));
    if (!(A > 0.0) || !std::isfinite(A)) throw ParameterError("ind amplitude A must be positive, got " + fmt_num(A));
    return FuncExpr(std::make_shared<detail::Node>(detail::Node{terms::Indicator{c1, c2, A}}));
}

FuncExpr FuncExpr::log_power(double A, double a, double b, LogForm form, double ell) {
    require_finite_nonneg(A, "logpow coefficient A");
    require_finite(a, "logpow exponent a");
    require_finite(b, "logpow log exponent b");
    if (!(ell > 0.0) || !std::isfinite(ell))
        throw ParameterError("logpow needs 0 < ell < inf, got " + fmt_num(ell));
    return FuncExpr(std::make_shared<detail::Node>(detail::Node{terms::LogPower{A, a, b, form, ell}}));
}

FuncExpr FuncExpr::sampled(std::vector<double> grid, std::vector<double> values, std::string source) {
    if (grid.empty()) throw ParameterError("sampled function needs at least one point");
    if (grid.size() != values.size()) throw ParameterError("sampled grid and values differ in length");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
            throw ParameterError("sampled abscissae must be positive and finite");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw ParameterError("sampled abscissae must be strictly increasing");
        require_finite_nonneg(values[i], "sampled value");
    }
    std::vector<double> prefix(grid.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        acc += values[i] * (grid[i] - (i == 0 ? 0.0 : grid[i - 1]));
        prefix[i] = acc;
    }
    return FuncExpr(std::make_shared<detail::Node>(
        detail::Node{terms::Sampled{std::move(grid), std::move(values), std::move(prefix), std::move(source)}}));
}

FuncExpr FuncExpr::sum(std::vector<FuncExpr> parts) {
    if (parts.empty()) throw ParameterError("sum needs at least one part");
    if (parts.size() == 1) return parts.front();
    return FuncExpr(std::make_shared<detail::Node>(detail::Node{terms::Sum{std::move(parts)}}));
}

FuncExpr FuncExpr::bliss(double A, double b, double c) {
    require_finite_nonneg(A, "bliss coefficient A");
    if (!(b > 0.0) || !(c > 0.0) || !std::isfinite(b) || !std::isfinite(c))
        throw ParameterError("bliss needs b > 0 and c > 0");
    return FuncExpr(std::make_shared<detail::Node>(detail::Node{terms::Bliss{A, b, c}}));
}

FuncExpr FuncExpr::warp(const FuncExpr& g, double k) {
    if (k == 0.0 || !std::isfinite(k)) throw ParameterError("warp exponent k must be finite and non-zero");
    if (const auto* w = std::get_if<terms::Warp>(&g.node().term)) return warp(w->inner, w->k * k);
    if (k == 1.0) return g;
    return FuncExpr(std::make_shared<detail::Node>(detail::Node{terms::Warp{g, k}}));
}

FuncExpr FuncExpr::with_cone(Cone c, const Domain& over) const {
    if (c != Cone::Unrestricted && !cone_check(*this, c, over))
        throw ConeError(to_string() + " is not " + sharphardy::to_string(c) + " on " + over.describe());
    return FuncExpr(node_, c);
}

FuncExpr FuncExpr::scaled(double lambda) const {
    require_finite_nonneg(lambda, "scale factor");
    FuncExpr out = std::visit(
        overloaded{
            [lambda](const terms::Power& t) { return power(t.A * lambda, t.a); },
            [lambda](const terms::Indicator& t) {
                if (lambda == 0.0) return power(0.0, 0.0);
                return indicator(t.c1, t.c2, t.A * lambda);
            },
            [lambda](const terms::LogPower& t) { return log_power(t.A * lambda, t.a, t.b, t.form, t.ell); },
            [lambda](const terms::Sampled& t) {
                std::vector<double> v = t.values;
                for (double& x : v) x *= lambda;
                return sampled(t.grid, std::move(v), t.source);
            },
            [lambda](const terms::Sum& t) {
                std::vector<FuncExpr> parts;
                for (const auto& p : t.parts) parts.push_back(p.scaled(lambda));
                return sum(std::move(parts));
            },
            [lambda](const terms::Warp& t) { return warp(t.inner.scaled(lambda), t.k); },
            [lambda](const terms::Bliss& t) { return bliss(t.A * lambda, t.b, t.c); },
        },
        node_->term);
    out.cone_ = cone_;
    return out;
}

std::vector<double> FuncExpr::breakpoints() const {
    std::vector<double> out;
    collect_breaks(*node_, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string FuncExpr::to_string() const { return spell(*node_); }

double evaluate(const FuncExpr& f, double x) {
    require_positive_x(x);
    return eval_node(f.node(), x);
}

double log_evaluate(const FuncExpr& f, double s) {
    if (std::isnan(s)) throw DomainError("log coordinate is NaN");
    return log_eval_node(f.node(), s);
}

double cumulative(const FuncExpr& f, double x) {
    if (x == 0.0) return 0.0;
    require_positive_x(x);
    if (std::isinf(x)) return total_integral(f.node());
    return cum_node(f.node(), x);
}

double log_cumulative(const FuncExpr& f, double s) {
    if (std::isnan(s)) throw DomainError("log coordinate is NaN");
    return log_cum_node(f.node(), s);
}

double tail(const FuncExpr& f, double x) {
    if (!(x >= 0.0)) throw DomainError("tail needs x >= 0, got x=" + fmt_num(x));
    if (std::isinf(x)) return 0.0;
    if (x == 0.0) return total_integral(f.node());
    return tail_node(f.node(), x);
}

double log_tail(const FuncExpr& f, double s) {
    if (std::isnan(s)) throw DomainError("log coordinate is NaN");
    return log_tail_node(f.node(), s);
}

FuncExpr transform_substitution(const FuncExpr& g, double p) {
    if (!(p > 1.0)) throw ParameterError("transform_substitution needs p > 1, got p=" + fmt_num(p));
    return FuncExpr::warp(g, 1.0 - 1.0 / p);
}

FuncExpr transform_inverse(const FuncExpr& f) { return FuncExpr::warp(f, -1.0); }

bool cone_check(const FuncExpr& f, Cone cone, const Domain& over) {
    if (cone == Cone::Unrestricted) return true;
    try {
        const int exact = exact_cone(f.node(), cone, over.lo(), over.hi());
        if (exact >= 0) return exact == 1;
        return sampled_cone(f.node(), cone, over.lo(), over.hi());
    } catch (const std::exception&) {
        return false;
    }
}

bool strictly_positive(const FuncExpr& f, const Domain& dom) { return positive_on(f.node(), dom.lo(), dom.hi()); }

std::string to_string(Cone c) {
    switch (c) {
        case Cone::NonIncreasing: return "non-increasing";
        case Cone::NonDecreasing: return "non-decreasing";
        case Cone::Unrestricted: return "unrestricted";
    }
    return "?";
}

std::string to_string(LogForm f) {
    switch (f) {
        case LogForm::ElOverX: return "el";
        case LogForm::LOverX: return "l";
        case LogForm::Dual: return "dual";
    }
    return "?";
}

}  // namespace sharphardy
