#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "catdeco/evolution_analytic.hpp"
#include "catdeco/evolution_numeric.hpp"
#include "catdeco/field_io.hpp"
#include "catdeco/quasi.hpp"
#include "catdeco/scenario.hpp"

namespace py = pybind11;
using namespace catdeco;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cat-state Wigner function evolution under loss and gain-compensated baths";

    static py::exception<Error> error(m, "CatdecoError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](double x_min, double x_max, double y_min, double y_max, int nx, int ny) {
                 GridSpec g{x_min, x_max, y_min, y_max, nx, ny};
                 g.validate();
                 return g;
             }),
             py::arg("x_min"), py::arg("x_max"), py::arg("y_min"), py::arg("y_max"), py::arg("nx"), py::arg("ny"))
        .def_static("square", &GridSpec::square, py::arg("half_width"), py::arg("n"))
        .def_readonly("x_min", &GridSpec::x_min)
        .def_readonly("x_max", &GridSpec::x_max)
        .def_readonly("y_min", &GridSpec::y_min)
        .def_readonly("y_max", &GridSpec::y_max)
        .def_readonly("nx", &GridSpec::nx)
        .def_readonly("ny", &GridSpec::ny)
        .def_property_readonly("dx", &GridSpec::dx)
        .def_property_readonly("dy", &GridSpec::dy)
        .def_property_readonly("x", [](const GridSpec& g) {
            return Eigen::VectorXd::LinSpaced(g.nx, g.x_min, g.x_max).eval();
        })
        .def_property_readonly("y", [](const GridSpec& g) {
            return Eigen::VectorXd::LinSpaced(g.ny, g.y_min, g.y_max).eval();
        })
        .def("__repr__", [](const GridSpec& g) {
            return "GridSpec(x=[" + format_double(g.x_min) + ", " + format_double(g.x_max) + "], y=[" +
                   format_double(g.y_min) + ", " + format_double(g.y_max) + "], " + std::to_string(g.nx) + "x" +
                   std::to_string(g.ny) + ")";
        });

    // values[j, i] is the sample at (x_i, y_j).
    py::class_<RealField>(m, "RealField")
        .def(py::init<const GridSpec&, Eigen::MatrixXd>(), py::arg("grid"), py::arg("values"))
        .def_readonly("grid", &RealField::spec)
        .def_readonly("values", &RealField::values);

    py::class_<ErrorReport>(m, "ErrorReport")
        .def_readonly("max_abs", &ErrorReport::max_abs)
        .def_readonly("l2", &ErrorReport::l2)
        .def_readonly("x_at_max", &ErrorReport::x_at_max)
        .def_readonly("y_at_max", &ErrorReport::y_at_max);

    py::enum_<Parity>(m, "Parity").value("even", Parity::even).value("odd", Parity::odd);

    py::class_<CatState>(m, "CatState")
        .def(py::init<double, Parity>(), py::arg("beta"), py::arg("parity") = Parity::even)
        .def_readonly("beta", &CatState::beta)
        .def_readonly("parity", &CatState::parity);

    py::class_<FockDensityMatrix>(m, "FockDensityMatrix")
        .def(py::init<Eigen::MatrixXcd>(), py::arg("rho"))
        .def_readonly("cutoff", &FockDensityMatrix::cutoff)
        .def_readonly("rho", &FockDensityMatrix::rho)
        .def("trace", &FockDensityMatrix::trace)
        .def("mean_photon", &FockDensityMatrix::mean_photon);

    py::class_<EnvironmentModel>(m, "EnvironmentModel")
        .def(py::init<double, double>(), py::arg("kappa"), py::arg("gamma"))
        .def_static("pure_loss", &EnvironmentModel::pure_loss, py::arg("kappa"))
        .def_static("pure_diffusion", &EnvironmentModel::pure_diffusion, py::arg("kappa"))
        .def_static("thermal", &EnvironmentModel::thermal, py::arg("kappa"), py::arg("nbar"))
        .def_readonly("kappa", &EnvironmentModel::kappa)
        .def_readonly("gamma", &EnvironmentModel::gamma)
        .def_property_readonly("drift", &EnvironmentModel::drift)
        .def_property_readonly("diffusion", &EnvironmentModel::diffusion);

    py::class_<Mixture>(m, "Mixture").def_readonly("field", &Mixture::field).def_readonly("valid", &Mixture::valid);

    // Phase-space grids and quadrature
    m.def("integrate", &integrate, py::arg("field"));
    m.def("moment", &moment, py::arg("field"), py::arg("px"), py::arg("py"));
    m.def("mean_photon_from_wigner", &mean_photon_from_wigner, py::arg("field"));
    m.def("purity_from_wigner", &purity_from_wigner, py::arg("field"));
    m.def("compare", &compare, py::arg("a"), py::arg("b"));
    m.def(
        "char_function",
        [](const RealField& f, double s) {
            const ComplexField c = char_function({f, s});
            const Eigen::VectorXd u = Eigen::VectorXd::LinSpaced(c.spec.nx, c.spec.x_min, c.spec.x_max);
            const Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(c.spec.ny, c.spec.y_min, c.spec.y_max);
            return py::make_tuple(u, v, c.values);
        },
        py::arg("field"), py::arg("s") = 0.0, "Returns (u, v, chi) with chi[j, i] at gamma = u_i + i v_j.");

    // States
    m.def("cat_normalization", &cat_normalization, py::arg("cat"));
    m.def(
        "cat_wigner",
        [](const CatState& c, const GridSpec& g, bool check_fringes) { return cat_wigner(c, g, {check_fringes}); },
        py::arg("cat"), py::arg("grid"), py::arg("check_fringes") = true);
    m.def("vacuum_wigner", &vacuum_wigner, py::arg("grid"));
    m.def("coherent_wigner", &coherent_wigner, py::arg("alpha"), py::arg("grid"));
    m.def("default_cutoff", &default_cutoff, py::arg("cat"), py::arg("delta_max") = 0.0);
    m.def("cat_density_matrix", &cat_density_matrix, py::arg("cat"), py::arg("cutoff"));

    // Closed-form evolution; kt for the standard model, delta = 2 kappa t for the diffusive one
    m.def(
        "standard_wigner",
        [](const CatState& c, double kt, const GridSpec& g) { return standard_wigner(c, DampingTime(kt), g); },
        py::arg("cat"), py::arg("kt"), py::arg("grid"));
    m.def(
        "diffusive_wigner",
        [](const CatState& c, double delta, const GridSpec& g) { return diffusive_wigner(c, DiffusionTime(delta), g); },
        py::arg("cat"), py::arg("delta"), py::arg("grid"));
    m.def(
        "diffusive_mixture",
        [](const CatState& c, double delta, const GridSpec& g) { return diffusive_mixture(c, DiffusionTime(delta), g); },
        py::arg("cat"), py::arg("delta"), py::arg("grid"));
    m.def(
        "standard_interference_amplitude",
        [](const CatState& c, double kt) { return standard_interference_amplitude(c, DampingTime(kt)); },
        py::arg("cat"), py::arg("kt"));
    m.def(
        "diffusive_interference_amplitude",
        [](const CatState& c, double delta) { return diffusive_interference_amplitude(c, DiffusionTime(delta)); },
        py::arg("cat"), py::arg("delta"));

    // Numerical engines
    m.def("ou_propagate", &ou_propagate, py::arg("field"), py::arg("env"), py::arg("t"));
    m.def(
        "fd_evolve",
        [](const RealField& f, const EnvironmentModel& env, double t_end, std::vector<double> snapshots, double safety) {
            return fd_evolve(f, env, {safety, t_end, std::move(snapshots)});
        },
        py::arg("field"), py::arg("env"), py::arg("t_end"), py::arg("snapshots") = std::vector<double>{},
        py::arg("safety") = 0.8);
    m.def("lindblad_evolve", &lindblad_evolve, py::arg("rho"), py::arg("env"), py::arg("t_end"),
          py::arg("snapshots") = std::vector<double>{});
    m.def("wigner_from_rho", &wigner_from_rho, py::arg("rho"), py::arg("grid"));
    m.def("q_from_rho", &q_from_rho, py::arg("rho"), py::arg("grid"));
    m.def("purity", &purity, py::arg("rho"));

    // Orderings
    m.def(
        "reorder", [](const RealField& f, double s, double s_to) { return reorder({f, s}, s_to).field; },
        py::arg("field"), py::arg("s"), py::arg("s_to"));
    m.def(
        "diffusion_as_reordering",
        [](double kt) {
            const OrderingPair p = diffusion_as_reordering(kt);
            return py::make_tuple(p.s_wigner, p.s_p);
        },
        py::arg("kt"), "Returns (s_wigner, s_p).");
    m.def("negativity_volume", &negativity_volume, py::arg("field"));

    // Files
    m.def("load_grid", &load_real_csv, py::arg("path"));
    m.def("save_grid", &save_real_csv, py::arg("path"), py::arg("field"));
    m.def(
        "render_ppm", [](const RealField& f) { return py::bytes(render_ppm(f)); }, py::arg("field"));
    m.def("visibility_table", &visibility_table, py::arg("cat"), py::arg("deltas"));
}
