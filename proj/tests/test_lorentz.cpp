#include <cmath>
#include <numbers>

#include "doctest.h"

#include "oracles.hpp"
#include "sharphardy/error.hpp"
#include "sharphardy/lorentz.hpp"
#include "sharphardy/parse.hpp"

using namespace sharphardy;
using namespace sharphardy::lorentz;

namespace {

// Random step function in pieces, values in random order, some zero.
StepFunction random_step(oracle::StepGen& gen, int pieces) {
    std::vector<Piece> v;
    for (int i = 0; i < pieces; ++i) v.push_back({0.05 + 2.0 * gen.unit(), gen.unit() < 0.2 ? 0.0 : 0.1 + gen.unit()});
    return StepFunction(v);
}

oracle::Step as_oracle(const StepFunction& f) {
    oracle::Step s;
    double t = 0.0;
    for (const Piece& pc : f.pieces()) {
        if (std::isinf(pc.measure)) break;
        t += pc.measure;
        s.grid.push_back(t);
        s.values.push_back(pc.value);
    }
    return s;
}

double oracle_star(const StepFunction& fs, const LorentzParams& lp) {
    const oracle::Step s = as_oracle(fs);
    const double hi = std::min(lp.ell, s.grid.back());
    const double v = oracle::haar([&](double t) { return std::pow(s.eval(t), lp.q) * std::pow(t, lp.q / lp.p); }, 0.0, hi,
                                  s.grid);
    return std::pow(v, 1.0 / lp.q);
}

double oracle_doublestar(const StepFunction& fs, const LorentzParams& lp) {
    const oracle::Step s = as_oracle(fs);
    const double k = -lp.q / lp.pconj();
    const double v = oracle::haar(
        [&](double t) { return std::exp(lp.q * std::log(s.cum(t)) + k * std::log(t)); }, 0.0, lp.ell, s.grid);
    return std::pow(v, 1.0 / lp.q);
}

}  // namespace

TEST_CASE("step functions merge equal neighbours and parse back") {
    const StepFunction f({{1.0, 2.0}, {0.5, 2.0}, {2.0, 1.0}});
    REQUIRE(f.pieces().size() == 2);
    CHECK(f.pieces()[0].measure == 1.5);
    CHECK(parse_step(f.to_string()).to_string() == f.to_string());
    CHECK(f.total_measure() == 3.5);
    CHECK(f.non_increasing());
    CHECK(f.level_measure(1.5) == 1.5);
    CHECK(f.level_measure(0.5) == 3.5);
    CHECK(f.scaled(2.0).pieces()[1].value == 2.0);
    CHECK_THROWS_AS(parse_step("step:[1:-1]"), ParameterError);
    CHECK_THROWS_AS(parse_step("step:[0:1]"), ParameterError);
    CHECK_THROWS_AS(StepFunction({{kInf, 1.0}}), DivergenceError);
    CHECK_THROWS_AS(parse_step("steps:[1:1]"), ParameterError);
}

TEST_CASE("conversion from indicators and sampled functions") {
    const StepFunction a = step_from_function(parse_function("ind:0,1,1"));
    CHECK(a.to_string() == StepFunction({{1.0, 1.0}}).to_string());
    const StepFunction b = step_from_function(parse_function("ind:1,3,2"));
    CHECK(b.level_measure(1.0) == 2.0);
    CHECK(b.level_measure(0.0) == 2.0);
    const StepFunction c = step_from_function(parse_function("sampled:[1:3;2:1]"));
    CHECK(c.to_string() == StepFunction({{1.0, 3.0}, {1.0, 1.0}}).to_string());
    CHECK_THROWS_AS(step_from_function(parse_function("pow:1,1")), ParameterError);
}

TEST_CASE("the rearrangement is non-increasing and equimeasurable") {
    oracle::StepGen gen(51);
    for (int i = 0; i < 200; ++i) {
        const StepFunction f = random_step(gen, 1 + i % 9);
        const StepFunction fs = rearrange(f);
        CHECK(fs.non_increasing());
        for (int k = 0; k < 8; ++k) {
            const double lambda = 1.2 * gen.unit();
            CAPTURE(lambda);
            CHECK(fs.level_measure(lambda) == doctest::Approx(f.level_measure(lambda)).epsilon(1e-13));
        }
        // Rearranging twice changes nothing.
        CHECK(rearrange(fs).to_string() == fs.to_string());
    }
}

TEST_CASE("norms agree with quadrature of their definitions") {
    oracle::StepGen gen(52);
    for (int i = 0; i < 40; ++i) {
        const StepFunction fs = rearrange(random_step(gen, 1 + i % 6));
        if (fs.is_zero()) continue;
        const LorentzParams lp{1.2 + 3.0 * gen.unit(), 0.5 + 3.0 * gen.unit(), kInf};
        CAPTURE(fs.to_string());
        CAPTURE(lp.p);
        CAPTURE(lp.q);
        CHECK(oracle::rel(norm_star(fs, lp), oracle_star(fs, lp)) < 1e-9);
        CHECK(oracle::rel(norm_doublestar(fs, lp, Variant::Forward), oracle_doublestar(fs, lp)) < 1e-7);
        const LorentzParams fin{lp.p, lp.q, 1.5};
        CHECK(oracle::rel(norm_star(fs, fin), oracle_star(fs, fin)) < 1e-9);
    }
}

TEST_CASE("lower bound attained by chi_(0,1) at p = q = 2") {
    const StepFunction chi({{1.0, 1.0}});
    const LorentzParams lp{2.0, 2.0, kInf};
    CHECK(norm_star(chi, lp) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(norm_doublestar(chi, lp, Variant::Forward) - std::sqrt(2.0)) <= 1e-8);
    const VerificationReport r = compare(chi, lp, Comparison::Plain);
    CHECK(r.pass);
    CHECK(std::abs(r.constant - std::sqrt(2.0)) <= 1e-15);
    CHECK(std::abs(r.lhs - r.constant * r.rhs) <= 1e-8);
}

TEST_CASE("dual comparison is an equality at (p, q) = (1/2, 1)") {
    oracle::StepGen gen(53);
    for (int i = 0; i < 20; ++i) {
        const StepFunction f = random_step(gen, 1 + i % 5);
        if (f.is_zero()) continue;
        const VerificationReport r = compare(f, {0.5, 1.0, kInf}, Comparison::Dual);
        CHECK(r.direction == Direction::EQ);
        CHECK(r.constant == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(*r.constant2 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(oracle::rel(r.lhs, r.rhs) < 1e-8);
        CHECK(r.pass);
    }
}

TEST_CASE("target comparison at ell = inf reduces to the plain one") {
    oracle::StepGen gen(54);
    for (int i = 0; i < 20; ++i) {
        const StepFunction f = random_step(gen, 1 + i % 7);
        if (f.is_zero()) continue;
        const LorentzParams lp{1.5 + gen.unit(), 0.5 + 2.0 * gen.unit(), kInf};
        const VerificationReport a = compare(f, lp, Comparison::Plain);
        const VerificationReport b = compare(f, lp, Comparison::Target);
        CHECK(std::abs(a.lhs - b.lhs) <= 1e-8 * a.lhs);
        CHECK(std::abs(a.rhs - b.rhs) <= 1e-8 * a.rhs);
    }
}

TEST_CASE("sandwich bounds hold for random non-increasing step functions") {
    oracle::StepGen gen(55);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        const StepFunction f = rearrange(random_step(gen, 1 + i % 8));
        if (f.is_zero()) continue;
        const double q = i % 2 == 0 ? 0.5 + 0.4 * gen.unit() : 1.2 + 2.0 * gen.unit();
        CAPTURE(f.to_string());
        CAPTURE(q);
        CHECK(compare(f, {1.3 + 2.0 * gen.unit(), q, kInf}, Comparison::Plain).pass);
        CHECK(compare(f, {1.3 + 2.0 * gen.unit(), q, 1.0 + 3.0 * gen.unit()}, Comparison::Target).pass);
        CHECK(compare(f, {0.2 + 0.6 * gen.unit(), q, kInf}, Comparison::Dual).pass);
        ++checked;
    }
    CHECK(checked > 40);
}

TEST_CASE("parameter checks") {
    const StepFunction chi({{1.0, 1.0}});
    CHECK_THROWS_AS(compare(chi, {0.5, 2.0, kInf}, Comparison::Plain), ParameterError);
    CHECK_THROWS_AS(compare(chi, {2.0, 2.0, 1.0}, Comparison::Plain), ParameterError);
    CHECK_THROWS_AS(compare(chi, {2.0, 2.0, kInf}, Comparison::Dual), ParameterError);
    CHECK_THROWS_AS(norm_star(StepFunction({{1.0, 1.0}, {1.0, 2.0}}), {2.0, 2.0, kInf}), ConeError);
    CHECK_THROWS_AS(norm_star(chi, {2.0, -1.0, kInf}), ParameterError);
    CHECK(comparison_from_string(to_string(Comparison::Target)) == Comparison::Target);
    CHECK(case_id(Comparison::Dual) == "LZ3");
}
