#include "sharphardy/domain.hpp"

#include "sharphardy/error.hpp"
#include "sharphardy/numfmt.hpp"

namespace sharphardy {

Domain Domain::lower(double ell, Measure m) {
    if (!(ell > 0.0)) throw ParameterError("lower interval (0, ell) needs 0 < ell <= inf, got ell=" + fmt_num(ell));
    return Domain(Kind::Lower, ell, m);
}

Domain Domain::upper(double ell, Measure m) {
    if (!(ell >= 0.0) || std::isinf(ell))
        throw ParameterError("upper interval (ell, inf) needs 0 <= ell < inf, got ell=" + fmt_num(ell));
    return Domain(Kind::Upper, ell, m);
}

std::string Domain::describe() const {
    std::string s = "(" + fmt_num(lo()) + ", " + fmt_num(hi()) + ")";
    s += measure_ == Measure::Haar ? " dx/x" : " dx";
    return s;
}

}  // namespace sharphardy
