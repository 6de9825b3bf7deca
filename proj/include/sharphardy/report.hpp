#pragma once

// Verification reports and their JSON / CSV serialization.

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sharphardy/funcspace.hpp"

namespace sharphardy {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Direction { LEQ, GEQ, EQ };

std::string to_string(Direction d);

struct Params {
    Exponents e;
    double ell = std::numeric_limits<double>::quiet_NaN();  // NaN selects the case default
};

// One checked inequality. For LEQ the check is lhs <= constant * rhs, for
// GEQ lhs >= constant * rhs, for EQ both. Two-bound cases (the two-sided
// estimates) also fill constant2 / margin2: the chain is
// constant * rhs <= lhs <= constant2 * rhs under LEQ, reversed under GEQ.
// The Bennett cases fold both coefficients into lhs and compare it with rhs
// directly; constant and constant2 then list those coefficients.
struct VerificationReport {
    std::string case_id;
    std::string regime;
    Params params;
    std::string function;
    Direction direction = Direction::LEQ;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 1.0;
    std::optional<double> constant2;
    double ratio = 0.0;
    double margin = 0.0;
    std::optional<double> margin2;
    bool pass = false;
    double tol = 1e-5;
    double quad_error = 0.0;
    std::string error;  // set when the point could not be evaluated
    std::optional<std::uint64_t> seed;
};

// Relative slack of `small <= big`: positive when it holds.
double relative_slack(double small, double big);

// Fills ratio, margin and pass from lhs, rhs, constant(s), direction, tol.
void score(VerificationReport& r);
// Same, for reports whose lhs already carries its coefficients.
void score_folded(VerificationReport& r);

enum class Format { Json, Csv };

std::optional<Format> format_from_string(const std::string& s);

void emit_reports(std::ostream& out, const std::vector<VerificationReport>& reports, Format fmt);

}  // namespace sharphardy
