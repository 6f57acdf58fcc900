#include "glcorr/algebra.hpp"
#include "glcorr/config.hpp"
#include "glcorr/errors.hpp"
#include "glcorr/integrand.hpp"
#include "glcorr/landscape.hpp"
#include "glcorr/quadrature.hpp"
#include "glcorr/report.hpp"
#include "glcorr/residue.hpp"
#include "glcorr/series.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace glcorr;

namespace {

py::tuple rational(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

QuadratureSpec make_spec(std::optional<std::vector<double>> eps, std::optional<double> outer,
                         std::optional<int> angular, std::optional<double> radial_tol) {
    QuadratureSpec s;
    if (eps) s.epsilon_schedule = *eps;
    if (outer) s.outer_radius = *outer;
    if (angular) s.angular_samples = *angular;
    if (radial_tol) s.radial_tol = *radial_tol;
    return s;
}

py::dict result_dict(const QuadratureResult& r) {
    py::list table;
    for (const auto& e : r.extrapolation_table) table.append(py::make_tuple(e.epsilon, e.value));
    py::dict d;
    d["value"] = r.value;
    d["error_estimate"] = r.error_estimate;
    d["evaluations"] = r.evaluations;
    d["extrapolation_table"] = table;
    d["fitted_exponent"] = r.fitted_exponent;
    return d;
}

py::dict estimate_dict(const IntegralEstimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["error_estimate"] = e.error;
    d["evaluations"] = e.evaluations;
    return d;
}

}  // namespace

PYBIND11_MODULE(_glcorr, m) {
    m.doc() = "Correlation coefficient of symmetric vortex polygons";

    // Kept alive for the lifetime of the interpreter.
    static py::handle error_type = py::exception<Error>(m, "GlcorrError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error_type(e.what());
            exc.attr("kind") = to_string(e.kind());
            exc.attr("diagnostics") = e.diagnostics();
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.def("set_thread_count", &set_thread_count, py::arg("threads"));
    m.def("thread_count", &thread_count);

    // Configurations
    m.def(
        "symmetric_config",
        [](int n, int m_) {
            const VortexConfiguration cfg = make_symmetric_config(n, m_);
            py::list out;
            for (const auto& v : cfg.vortices()) {
                out.append(py::make_tuple(v.position, rational(v.charge)));
            }
            return out;
        },
        py::arg("n"), py::arg("m") = 1, "[(position, (num, den))] for the polygon and its centre");
    m.def(
        "energy_gradient_norm",
        [](int n, int m_) { return pairwise_energy(make_symmetric_config(n, m_)).gradient_norm(); },
        py::arg("n"), py::arg("m") = 1);

    // Closed forms. Pi-multiples come back as (num, den) of the rational factor.
    m.def("beta", [](int n) { return rational(beta(n)); }, py::arg("n"));
    m.def("beta_direct", &beta_direct, py::arg("n"));
    m.def("alpha", &alpha, py::arg("n"), py::arg("k"), py::arg("x"));
    m.def("alpha_prime_at_vortex", &alpha_prime_at_vortex, py::arg("n"), py::arg("k"));
    m.def("power_sum", &power_sum, py::arg("n"), py::arg("l"));
    m.def("I_value", [](int n) { return rational(I_value(n).coefficient); }, py::arg("n"));
    m.def("II_value", [](int n) { return rational(II_value(n).coefficient); }, py::arg("n"));
    m.def(
        "correlation_coefficient",
        [](int n, int m_) { return rational(correlation_coefficient(n, m_).coefficient); },
        py::arg("n"), py::arg("m") = 1);
    m.def(
        "ovsi_partial", [](int n, int m_) { return rational(ovsi_partial(n, m_).coefficient); },
        py::arg("n"), py::arg("m") = 1);
    m.def("gamma_closed", &gamma_closed, py::arg("n"), py::arg("rho"));
    m.def(
        "gamma_at_one",
        [](int n) {
            const GammaJump j = gamma_at_one(n);
            return py::make_tuple(j.inner, j.outer);
        },
        py::arg("n"));

    // Pointwise fields
    m.def(
        "raw_integrand", [](int n, int m_, Complex x) { return raw_integrand(x, make_symmetric_config(n, m_)); },
        py::arg("n"), py::arg("m"), py::arg("x"));
    m.def("counterterm", &counterterm, py::arg("x"), py::arg("n"));

    // Series and residues
    m.def("I_by_series", [](int n, double tol) { return result_dict(I_by_series(n, tol)); }, py::arg("n"),
          py::arg("tol") = 1e-8);
    m.def("I_by_f_bracket", [](int n) { return result_dict(I_by_f_bracket(n)); }, py::arg("n"));
    m.def("II_by_gamma", [](int n, double tol) { return estimate_dict(II_by_gamma(n, tol)); }, py::arg("n"),
          py::arg("tol") = 1e-8);
    m.def("rho_gamma_integral", [](int n, double tol) { return estimate_dict(rho_gamma_integral(n, tol)); },
          py::arg("n"), py::arg("tol") = 1e-8);
    m.def("gamma_by_residue", &gamma_by_residue, py::arg("n"), py::arg("rho"));
    m.def("gamma_by_angular_quadrature", &gamma_by_angular_quadrature, py::arg("n"), py::arg("rho"),
          py::arg("tol") = 1e-13);
    m.def("tail_integral_check", &tail_integral_check);

    // Quadrature
    m.def(
        "a0_numeric",
        [](int n, int m_, std::optional<std::vector<double>> eps, std::optional<double> outer,
           std::optional<int> angular, std::optional<double> radial_tol) {
            return result_dict(a0_numeric(n, m_, make_spec(eps, outer, angular, radial_tol)));
        },
        py::arg("n"), py::arg("m") = 1, py::kw_only(), py::arg("eps") = py::none(),
        py::arg("outer_radius") = py::none(), py::arg("angular_samples") = py::none(),
        py::arg("radial_tol") = py::none());
    m.def(
        "regularized_integral",
        [](int n, int m_, std::optional<std::vector<double>> eps, std::optional<double> outer,
           std::optional<int> angular, std::optional<double> radial_tol) {
            QuadratureSpec s = make_spec(eps, outer, angular, radial_tol);
            s.use_counterterm = true;
            return result_dict(regularized_integral(n, m_, s));
        },
        py::arg("n"), py::arg("m") = 1, py::kw_only(), py::arg("eps") = py::none(),
        py::arg("outer_radius") = py::none(), py::arg("angular_samples") = py::none(),
        py::arg("radial_tol") = py::none());

    // Landscape
    m.def("minimize_model", [](double J, double k) { return minimize_model({J, k}); }, py::arg("J"), py::arg("k"));
    m.def("minimize_model_golden", [](double J, double k) { return minimize_model_golden({J, k}); }, py::arg("J"),
          py::arg("k"));
    m.def("model_energy", [](double l, double J, double k) { return model_energy(l, {J, k}); }, py::arg("l"),
          py::arg("J"), py::arg("k"));
    m.def(
        "landscape_sweep",
        [](double J, const std::vector<double>& ks) {
            const auto rows = landscape_sweep(J, ks);
            py::list out;
            for (const auto& r : rows) out.append(py::make_tuple(r.k, r.J, r.l_star, r.energy_at_min));
            return py::make_tuple(out, rows.size() >= 2 ? py::cast(fitted_slope(rows)) : py::none());
        },
        py::arg("J"), py::arg("ks"), "(rows of (k, J, l_star, energy_at_min), fitted slope or None)");

    // Reports, as JSON text
    m.def("identity_report_json", [](int max_n, double tol) { return to_json_text(run_identity_suite(max_n, tol)); },
          py::arg("max_n") = 6, py::arg("tol") = 1e-8);
    m.def("quadrature_report_json", [](int max_n) { return to_json_text(run_quadrature_suite(max_n)); },
          py::arg("max_n") = 5);
    m.def("landscape_report_json", [] { return to_json_text(run_landscape_suite()); });
}
