#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <tuple>

#include "sharphardy/catalog.hpp"
#include "sharphardy/cli.hpp"
#include "sharphardy/error.hpp"
#include "sharphardy/lorentz.hpp"
#include "sharphardy/parse.hpp"
#include "sharphardy/special.hpp"

namespace py = pybind11;
using namespace sharphardy;

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

Params make_params(double p, double q, double alpha, double beta, double a, double ell) {
    Params x;
    x.e = {p, q, alpha, beta, a};
    x.ell = ell;
    return x;
}

std::string json_of(const VerificationReport& r) {
    std::ostringstream os;
    emit_reports(os, {r}, Format::Json);
    return os.str();
}

special::BlissForm form_of(const std::string& s) {
    const auto f = special::bliss_form_from_string(s);
    if (!f) throw ParameterError("unknown Bliss form '" + s + "'");
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sharp Hardy-type inequality checks";
    m.attr("__version__") = kToolVersion;

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", base);
    py::register_exception<NumericError>(m, "NumericError", base);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line with args; returns (exit code, stdout, stderr).");

    m.def(
        "verify_json",
        [](const std::string& case_id, const std::string& f, double p, double q, double alpha, double beta, double a,
           double ell, double tol, const std::string& log_weight, const std::string& bliss_form,
           std::optional<std::uint64_t> seed) {
            catalog::Options opt;
            opt.tol = tol;
            opt.log_variant = log_weight == "as-printed" ? LogVariant::AsPrinted : LogVariant::Corrected;
            if (log_weight != "as-printed" && log_weight != "corrected")
                throw ParameterError("log_weight must be 'corrected' or 'as-printed'");
            opt.bliss_form = form_of(bliss_form);
            opt.seed = seed;
            const Params params = make_params(p, q, alpha, beta, a, ell);
            const catalog::InequalityCase& c = catalog::find_case(case_id);
            Exponents bound = params.e;
            if (c.id == "PQ" || c.id == "PQd") bound.alpha = bound.q * bound.beta / bound.p;
            const double l = catalog::resolve_ell(c, ell);
            const FuncExpr fn = f == "random" ? catalog::random_admissible(c, l, seed.value_or(0))
                                              : parse_function(f, bindings_for(bound, l));
            py::gil_scoped_release unlock;
            return json_of(catalog::verify(case_id, fn, params, opt));
        },
        py::arg("case_id"), py::arg("f"), py::arg("p"), py::arg("q") = 2.0, py::arg("alpha") = 1.0,
        py::arg("beta") = 1.0, py::arg("a") = 0.0, py::arg("ell") = kNaN, py::arg("tol") = 1e-5,
        py::arg("log_weight") = "corrected", py::arg("bliss_form") = "corrected", py::arg("seed") = py::none());

    m.def(
        "equality_json",
        [](const std::string& case_id, double c, double p, double q, double alpha, double beta, double a, double ell) {
            py::gil_scoped_release unlock;
            return json_of(catalog::equality_check(case_id, make_params(p, q, alpha, beta, a, ell), c));
        },
        py::arg("case_id"), py::arg("c"), py::arg("p"), py::arg("q") = 2.0, py::arg("alpha") = 1.0,
        py::arg("beta") = 1.0, py::arg("a") = 0.0, py::arg("ell") = kNaN);

    m.def(
        "lorentz_json",
        [](const std::string& which, const std::string& f, double p, double q, double ell, double tol) {
            const auto cmp = lorentz::comparison_from_string(which);
            if (!cmp) throw ParameterError("unknown Lorentz comparison '" + which + "'");
            const lorentz::StepFunction step = f.rfind("step:", 0) == 0 ? lorentz::parse_step(f)
                                                                        : lorentz::step_from_function(parse_function(f));
            return json_of(lorentz::compare(step, {p, q, ell}, *cmp, tol));
        },
        py::arg("which"), py::arg("f"), py::arg("p"), py::arg("q"), py::arg("ell") = kInf, py::arg("tol") = 1e-5);

    m.def(
        "sharp_constant",
        [](const std::string& id, double p, double q, double alpha, double beta, double a, const std::string& form) {
            const auto cid = special::constant_id_from_string(id);
            if (!cid) throw ParameterError("unknown constant '" + id + "'");
            return special::sharp_constant(*cid, {p, q, alpha, beta, a}, form_of(form)).value;
        },
        py::arg("id"), py::arg("p"), py::arg("q") = 2.0, py::arg("alpha") = 1.0, py::arg("beta") = 1.0,
        py::arg("a") = 0.0, py::arg("bliss_form") = "printed");

    m.def(
        "bliss_star",
        [](double p, double q, double beta, const std::string& form) {
            return special::bliss_star(p, q, beta, form_of(form));
        },
        py::arg("p"), py::arg("q"), py::arg("beta") = 1.0, py::arg("bliss_form") = "printed");

    m.def("case_ids", [] {
        std::vector<std::string> ids;
        for (const catalog::InequalityCase& c : catalog::all_cases()) ids.push_back(c.id);
        return ids;
    });
}
