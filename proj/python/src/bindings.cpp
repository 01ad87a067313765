#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slet/closed_form.hpp"
#include "slet/diagnostics.hpp"
#include "slet/engine.hpp"
#include "slet/errors.hpp"
#include "slet/oracle.hpp"
#include "slet/potential.hpp"
#include "slet/version.hpp"

namespace py = pybind11;
using namespace slet;

namespace {

Dim to_dim(int d) {
    if (d == 3) return Dim::D3;
    if (d == 2) return Dim::D2;
    throw UsageError("dim must be 2 or 3");
}

TermOrder to_terms(int t) {
    if (t == 0) return TermOrder::E0_only;
    if (t == 2) return TermOrder::through_E2;
    if (t == 3) return TermOrder::through_E3;
    throw UsageError("terms must be 0, 2 or 3");
}

Breakdown solve_text(const std::string& potential, const ParamMap& params, int dim, int l, int n_radial, int terms) {
    Problem p;
    p.dim = to_dim(dim);
    p.l = l;
    p.n_radial = n_radial;
    p.potential = Potential::from_text(potential, params);
    p.solver.term_order = to_terms(terms);
    return solve(p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Shifted-l expansion eigenvalues of radial Schroedinger equations";
    m.attr("__version__") = std::string(kVersion);

    static py::exception<Error> error(m, "SletError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const UsageError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            error(e.what());
        }
    });

    py::class_<Candidate>(m, "Candidate")
        .def_readonly("r0", &Candidate::r0)
        .def_readonly("lbar", &Candidate::lbar)
        .def_readonly("E0", &Candidate::E0)
        .def_readonly("curvature", &Candidate::curvature)
        .def_readonly("is_minimum", &Candidate::is_minimum);

    py::class_<Breakdown>(m, "Breakdown")
        .def_readonly("r0", &Breakdown::r0)
        .def_readonly("w", &Breakdown::w)
        .def_readonly("beta", &Breakdown::beta)
        .def_readonly("lbar", &Breakdown::lbar)
        .def_readonly("Q", &Breakdown::Q)
        .def_readonly("E0", &Breakdown::E0)
        .def_readonly("E1", &Breakdown::E1)
        .def_readonly("E2_over_lbar2", &Breakdown::E2_over_lbar2)
        .def_readonly("E3_over_lbar3", &Breakdown::E3_over_lbar3)
        .def_readonly("E_total", &Breakdown::E_total)
        .def_readonly("alpha1", &Breakdown::alpha1)
        .def_readonly("alpha2", &Breakdown::alpha2)
        .def_readonly("residual", &Breakdown::residual)
        .def_readonly("candidates", &Breakdown::candidates)
        .def_property_readonly("eps", [](const Breakdown& b) { return b.coeffs.eps; })
        .def_property_readonly("delta", [](const Breakdown& b) { return b.coeffs.dlt; })
        .def("__repr__", [](const Breakdown& b) {
            return "<Breakdown E_total=" + std::to_string(b.E_total) + " r0=" + std::to_string(b.r0) + ">";
        });

    py::class_<Potential>(m, "Potential")
        .def(py::init([](const std::string& text, const ParamMap& params) { return Potential::from_text(text, params); }),
             py::arg("text"), py::arg("params") = ParamMap{})
        .def("value", &Potential::value, py::arg("r"))
        .def("derivatives", [](const Potential& p, double r) {
            const Jet j = p.eval_jet(r);
            std::vector<double> d;
            for (int k = 0; k <= Jet::kOrder; ++k) d.push_back(j.derivative(k));
            return d;
        }, py::arg("r"))
        .def_property_readonly("is_builtin", &Potential::is_builtin)
        .def_property_readonly("params", &Potential::params)
        .def("__repr__", [](const Potential& p) { return "<Potential " + p.describe() + ">"; });

    m.def("solve", &solve_text, py::arg("potential"), py::arg("params") = ParamMap{}, py::arg("dim") = 3,
          py::arg("l") = 0, py::arg("n_radial") = 0, py::arg("terms") = 3,
          "Energy of one state with the full series breakdown.");

    m.def("canonical", [](const std::string& src) { return Expr::parse(src).to_string(); }, py::arg("expression"),
          "Fully parenthesized form of a potential expression.");

    py::class_<oracle::OracleResult>(m, "OracleResult")
        .def_readonly("k", &oracle::OracleResult::k)
        .def_readonly("energy", &oracle::OracleResult::energy)
        .def_readonly("energy_refined", &oracle::OracleResult::energy_refined)
        .def_readonly("energy_extrapolated", &oracle::OracleResult::energy_extrapolated)
        .def_readonly("box_shift", &oracle::OracleResult::box_shift)
        .def_readonly("converged", &oracle::OracleResult::converged);

    m.def("oracle", [](const std::string& potential, const ParamMap& params, int dim, int l, int k, double box_radius,
                       int grid_points, double eig_tol) {
        return oracle::eigenvalue(to_dim(dim), l, k, Potential::from_text(potential, params),
                                  {box_radius, grid_points, eig_tol, true});
    }, py::arg("potential"), py::arg("params") = ParamMap{}, py::arg("dim") = 3, py::arg("l") = 0, py::arg("k") = 0,
          py::arg("box_radius") = 40.0, py::arg("grid_points") = 4000, py::arg("eig_tol") = 1e-5,
          "Finite-difference eigenvalue with grid and box convergence evidence.");

    py::class_<closed_form::ClosedFormResult>(m, "ClosedFormResult")
        .def_readonly("r0", &closed_form::ClosedFormResult::r0)
        .def_readonly("lbar", &closed_form::ClosedFormResult::lbar)
        .def_readonly("w", &closed_form::ClosedFormResult::w)
        .def_readonly("E0", &closed_form::ClosedFormResult::E0)
        .def_readonly("E2_over_lbar2", &closed_form::ClosedFormResult::E2_over_lbar2)
        .def_readonly("E3_over_lbar3", &closed_form::ClosedFormResult::E3_over_lbar3)
        .def_readonly("E_total", &closed_form::ClosedFormResult::E_total)
        .def_readonly("flags", &closed_form::ClosedFormResult::flags);

    m.def("power_law", &closed_form::power_law, py::arg("A"), py::arg("nu"), py::arg("l") = 0, py::arg("n_radial") = 0);
    m.def("logarithmic", &closed_form::logarithmic, py::arg("A"), py::arg("b"), py::arg("l") = 0,
          py::arg("n_radial") = 0);
    m.def("coulomb3d", &closed_form::coulomb3d, py::arg("l"), py::arg("n_radial"));
    m.def("oscillator3d", &closed_form::oscillator3d, py::arg("B"), py::arg("l"), py::arg("n_radial"));
    m.def("landau", &closed_form::landau, py::arg("gamma"), py::arg("n_rho"), py::arg("m"));

    m.def("discrepancies", [] {
        py::list out;
        for (const auto& d : discrepancy_report()) {
            py::dict e;
            e["id"] = d.id;
            e["case"] = d.case_label;
            e["published"] = d.published;
            e["computed"] = d.computed;
            e["reference"] = d.reference ? py::object(py::float_(*d.reference)) : py::object(py::none());
            e["resolution"] = d.resolution;
            out.append(e);
        }
        return out;
    }, "Closed forms that disagree with the general series or the oracle.");
}
