#include <cmath>
#include <numbers>

#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"
#include "sharphardy/error.hpp"
#include "sharphardy/quad.hpp"

using namespace sharphardy;
using quad::integrate_interval;

TEST_CASE("closed-form integrals over finite and infinite intervals") {
    const double pi = std::numbers::pi;
    CHECK(integrate_interval([](double x) { return x * x; }, 0.0, 1.0).value == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(integrate_interval([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(integrate_interval([](double x) { return std::exp(-x); }, 0.0, kInf).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_interval([](double x) { return 1.0 / (1.0 + x * x); }, -kInf, kInf).value ==
          doctest::Approx(pi).epsilon(1e-12));
    CHECK(integrate_interval([](double x) { return std::log(x); }, 0.0, 1.0).value ==
          doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("reversed limits flip the sign") {
    auto f = [](double x) { return std::cos(x); };
    CHECK(integrate_interval(f, 1.0, 0.0).value == doctest::Approx(-std::sin(1.0)).epsilon(1e-13));
}

TEST_CASE("breakpoints resolve jumps exactly") {
    auto step = [](double x) { return x <= 0.3 ? 2.0 : (x <= 0.7 ? -1.0 : 0.5); };
    const double want = 2.0 * 0.3 - 0.4 + 0.5 * 0.3;
    CHECK(integrate_interval(step, 0.0, 1.0, 1e-12, 1e-300, {0.3, 0.7}).value ==
          doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("narrow interval far from the origin keeps its nodes distinct") {
    const double a = 0.5, w = 1e-14;
    const auto r = integrate_interval([a](double x) { return x - a; }, a, a + w, 1e-10, 1e-300);
    CHECK(r.value == doctest::Approx(0.5 * w * w).epsilon(1e-6));
}

TEST_CASE("a jump at the finite end of a half line is seen from the correct side") {
    const double L = std::log(2.0);
    auto g = [L](double s) { return s <= L ? std::exp(3.0 * s) : 0.0; };
    CHECK(integrate_interval(g, L, kInf, 1e-10, 1e-300).value == 0.0);
    CHECK(integrate_interval(g, 0.0, kInf, 1e-10, 1e-300, {L}).value == doctest::Approx(7.0 / 3).epsilon(1e-12));
    auto h = [](double s) { return s >= 0.0 ? 5.0 : 0.0; };
    CHECK(integrate_interval(h, -kInf, 0.0, 1e-10, 1e-300).value == 0.0);
}

TEST_CASE("non-integrable integrands raise DivergenceError") {
    CHECK_THROWS_AS(integrate_interval([](double x) { return 1.0 / x; }, 0.0, 1.0), DivergenceError);
    CHECK_THROWS_AS(integrate_interval([](double x) { return 1.0 / x; }, 1.0, kInf), DivergenceError);
    quad::Integrand g;
    g.eval = [](double x) { return std::pow(x, -1.5); };
    g.left = quad::Singularity::power(-1.5);
    CHECK_THROWS_AS(quad::integrate(g, Domain::lower(1.0, Measure::Lebesgue)), DivergenceError);
}

TEST_CASE("Haar integrals in log coordinates survive hundreds of decades") {
    quad::Integrand g;
    g.eval = [](double x) { return x; };
    g.eval_log = [](double s) { return std::exp(s); };
    CHECK(quad::integrate(g, Domain::lower(1.0)).value == doctest::Approx(1.0).epsilon(1e-12));
    quad::Integrand h;
    h.eval = [](double x) { return std::pow(x, 1e-3); };
    h.eval_log = [](double s) { return std::exp(1e-3 * s); };
    CHECK(quad::integrate(h, Domain::lower(1.0)).value == doctest::Approx(1e3).epsilon(1e-9));
}

TEST_CASE("agrees with the Boost tanh-sinh oracle on random smooth integrands") {
    oracle::StepGen gen(20261016);
    for (int i = 0; i < 25; ++i) {
        const double a = 3.0 * gen.unit(), b = 0.2 + 2.0 * gen.unit(), c = gen.unit();
        auto f = [a, b, c](double x) { return std::pow(x, a) * std::exp(-b * x) + c / (1.0 + x * x); };
        const double want = oracle::integral(f, 0.0, 5.0);
        CHECK(integrate_interval(f, 0.0, 5.0).value == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("midpoint oracle and adaptive quadrature agree on the corpus") {
    // The full million-cell comparison runs in the acceptance suite.
    for (const corpus::Entry& e : corpus::entries()) {
        CAPTURE(e.name);
        const double q = quad::integrate(e.g, e.dom).value;
        const double r = quad::riemann_oracle(e.g, e.dom, 200000, e.lower_cut, e.upper_cut);
        CHECK(oracle::rel(q, r) < 1e-4);
    }
}

TEST_CASE("riemann_oracle demands explicit cuts for unbounded domains") {
    quad::Integrand g;
    g.eval = [](double x) { return std::exp(-x); };
    CHECK_THROWS_AS(quad::riemann_oracle(g, Domain::lower(kInf, Measure::Lebesgue), 100), ParameterError);
    CHECK_THROWS_AS(quad::riemann_oracle(g, Domain::lower(1.0), 100), ParameterError);
    CHECK_THROWS_AS(quad::riemann_oracle(g, Domain::lower(1.0, Measure::Lebesgue), 5), ParameterError);
}
