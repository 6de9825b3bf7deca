#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace sharphardy {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Measure { Lebesgue, Haar };

// (0, ell) with 0 < ell <= inf, or (ell, inf) with 0 <= ell < inf.
class Domain {
public:
    enum class Kind { Lower, Upper };

    static Domain lower(double ell, Measure m = Measure::Haar);
    static Domain upper(double ell, Measure m = Measure::Haar);

    Kind kind() const noexcept { return kind_; }
    double ell() const noexcept { return ell_; }
    Measure measure() const noexcept { return measure_; }

    double lo() const noexcept { return kind_ == Kind::Lower ? 0.0 : ell_; }
    double hi() const noexcept { return kind_ == Kind::Lower ? ell_ : kInf; }

    bool contains(double x) const noexcept { return x > lo() && x < hi(); }
    Domain with_measure(Measure m) const noexcept {
        Domain d = *this;
        d.measure_ = m;
        return d;
    }

    std::string describe() const;

private:
    Domain(Kind k, double ell, Measure m) : kind_(k), ell_(ell), measure_(m) {}

    Kind kind_;
    double ell_;
    Measure measure_;
};

}  // namespace sharphardy
