#pragma once

// Forty integrands with the cuts the midpoint oracle needs. The parts of
// each domain beyond the cuts carry less than 1e-6 of the integral.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sharphardy/quad.hpp"

namespace corpus {

using sharphardy::Domain;
using sharphardy::Measure;
using sharphardy::quad::Integrand;

struct Entry {
    std::string name;
    Integrand g;
    Domain dom;
    double lower_cut = 0.0;
    double upper_cut = sharphardy::kInf;
};

inline Integrand fn(std::function<double(double)> f, std::vector<double> breaks = {}) {
    Integrand g;
    g.eval = std::move(f);
    g.breakpoints = std::move(breaks);
    return g;
}

inline std::vector<Entry> entries() {
    const double pi = std::numbers::pi;
    const Domain unit = Domain::lower(1.0, Measure::Lebesgue);
    std::vector<Entry> v;
    for (double a : {0.0, 0.5, 1.0, 2.0, 3.0, -0.2, 1.5, 4.0})
        v.push_back({"x^" + std::to_string(a) + " dx on (0,1)", fn([a](double x) { return std::pow(x, a); }), unit});
    for (double k : {1.0, 3.0, 10.0})
        v.push_back({"exp(-" + std::to_string(k) + "x) dx on (0,1)", fn([k](double x) { return std::exp(-k * x); }), unit});
    v.push_back({"sin(pi x) dx on (0,1)", fn([pi](double x) { return std::sin(pi * x); }), unit});
    v.push_back({"cos(x) dx on (0,1)", fn([](double x) { return std::cos(x); }), unit});
    v.push_back({"log(1+x) dx on (0,1)", fn([](double x) { return std::log1p(x); }), unit});
    v.push_back({"1/(1+x^2) dx on (0,1)", fn([](double x) { return 1.0 / (1.0 + x * x); }), unit});
    v.push_back({"sqrt(1-x^2) dx on (0,1)", fn([](double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); }), unit});

    const Domain two = Domain::lower(2.0, Measure::Lebesgue);
    v.push_back({"step 1 then 0.5 on (0,2)", fn([](double x) { return x <= 1.0 ? 1.0 : 0.5; }, {1.0}), two});
    v.push_back({"|x-1| on (0,2)", fn([](double x) { return std::abs(x - 1.0); }, {1.0}), two});
    v.push_back({"max(0,1-x)^2 on (0,2)", fn([](double x) { return x < 1.0 ? (1.0 - x) * (1.0 - x) : 0.0; }, {1.0}), two});

    const Domain haar01 = Domain::lower(1.0, Measure::Haar);
    for (double k : {1.0, 2.0, 0.5, 3.0})
        v.push_back({"x^" + std::to_string(k) + " dx/x on (0,1)", fn([k](double x) { return std::pow(x, k); }), haar01,
                     1e-30});
    v.push_back({"x(1-x) dx/x on (0,1)", fn([](double x) { return x * (1.0 - x); }), haar01, 1e-30});
    v.push_back({"x^2 log(1/x) dx/x on (0,1)", fn([](double x) { return x * x * std::log(1.0 / x); }), haar01, 1e-30});
    v.push_back({"x exp(-x) dx/x on (0,1)", fn([](double x) { return x * std::exp(-x); }), haar01, 1e-30});
    v.push_back({"x/(1+x) dx/x on (0,1)", fn([](double x) { return x / (1.0 + x); }), haar01, 1e-30});

    const Domain haar1inf = Domain::upper(1.0, Measure::Haar);
    for (double k : {0.5, 1.0, 2.0, 3.0})
        v.push_back({"x^-" + std::to_string(k) + " dx/x on (1,inf)", fn([k](double x) { return std::pow(x, -k); }),
                     haar1inf, 0.0, 1e30});
    v.push_back({"x/(1+x^2) dx/x on (1,inf)", fn([](double x) { return x / (1.0 + x * x); }), haar1inf, 0.0, 1e30});
    v.push_back({"x^2 exp(-x) dx/x on (1,inf)", fn([](double x) { return std::exp(2.0 * std::log(x) - x); }), haar1inf, 0.0, 1e30});
    v.push_back({"log(x) x^-2 dx/x on (1,inf)", fn([](double x) { return std::log(x) / (x * x); }), haar1inf, 0.0, 1e30});
    v.push_back({"(1+log x)^-4 dx/x on (1,inf)", fn([](double x) { return std::pow(1.0 + std::log(x), -4.0); }),
                 haar1inf, 0.0, 1e30});

    const Domain half = Domain::lower(sharphardy::kInf, Measure::Lebesgue);
    v.push_back({"exp(-x) dx on (0,inf)", fn([](double x) { return std::exp(-x); }), half, 0.0, 60.0});
    v.push_back({"exp(-x^2) dx on (0,inf)", fn([](double x) { return std::exp(-x * x); }), half, 0.0, 10.0});
    v.push_back({"x^2 exp(-x) dx on (0,inf)", fn([](double x) { return x > 0.0 ? std::exp(2.0 * std::log(x) - x) : 0.0; }), half, 0.0, 60.0});
    v.push_back({"sech(x) dx on (0,inf)", fn([](double x) { return 1.0 / std::cosh(x); }), half, 0.0, 50.0});
    v.push_back({"exp(1-x) dx on (1,inf)", fn([](double x) { return std::exp(1.0 - x); }),
                 Domain::upper(1.0, Measure::Lebesgue), 0.0, 61.0});
    return v;
}

}  // namespace corpus
