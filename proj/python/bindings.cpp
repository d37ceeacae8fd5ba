#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steklov/bounds.hpp"
#include "steklov/closedform.hpp"
#include "steklov/error.hpp"
#include "steklov/geometry.hpp"
#include "steklov/profile_io.hpp"
#include "steklov/profiles.hpp"
#include "steklov/solver.hpp"

namespace py = pybind11;
using namespace steklov;

namespace {

ShellSpec shell(int n, double inner_radius, double width) {
    return ShellSpec(Dimension(n), inner_radius, width);
}

OuterCondition outer_from(const std::string& s) {
    if (s == "dirichlet") return OuterCondition::Dirichlet;
    if (s == "neumann") return OuterCondition::Neumann;
    throw InvalidInputError("outer condition must be 'dirichlet' or 'neumann'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Steklov eigenvalues of hypersurfaces of revolution (C++ core)";

    auto base = py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
    (void)base;

    m.def("mode_eigenvalue", [](int l, int n) { return mode_eigenvalue(l, Dimension(n)); },
          py::arg("l"), py::arg("n"));
    m.def("mode_multiplicity", [](int l, int n) { return mode_multiplicity(l, Dimension(n)); },
          py::arg("l"), py::arg("n"));

    py::class_<RevolutionProfile>(m, "RevolutionProfile")
        .def(py::init<double, std::vector<double>>(), py::arg("length"), py::arg("h_values"))
        .def(py::init<std::vector<double>, std::vector<double>, double, double>(),
             py::arg("r_grid"), py::arg("h_values"), py::arg("r1"), py::arg("r2"))
        .def_property_readonly("r_grid", &RevolutionProfile::r_grid)
        .def_property_readonly("h_values", &RevolutionProfile::h_values)
        .def_property_readonly("r1", &RevolutionProfile::r1)
        .def_property_readonly("r2", &RevolutionProfile::r2)
        .def_property_readonly("length", &RevolutionProfile::length)
        .def("__len__", &RevolutionProfile::size)
        .def("at", &RevolutionProfile::at)
        .def("scaled", &RevolutionProfile::scaled);

    m.def(
        "validate_profile",
        [](const RevolutionProfile& p, double tol) {
            const auto rep = validate_profile(p, tol);
            std::vector<std::string> kinds;
            for (const auto& i : rep.issues) kinds.push_back(to_string(i.kind));
            return py::make_tuple(rep.ok(), kinds);
        },
        py::arg("profile"), py::arg("slope_tol") = kDefaultSlopeTol,
        "Returns (ok, [violation names]).");
    m.def("read_profile_csv", &read_profile_csv_file, py::arg("path"));

    m.def("sigma_dirichlet", [](int n, double R, double L, int k) { return sigma_dirichlet(shell(n, R, L), k); },
          py::arg("n"), py::arg("inner_radius"), py::arg("width"), py::arg("k"));
    m.def("sigma_neumann", [](int n, double R, double L, int k) { return sigma_neumann(shell(n, R, L), k); },
          py::arg("n"), py::arg("inner_radius"), py::arg("width"), py::arg("k"));

    py::class_<DtnMatrix>(m, "DtnMatrix")
        .def_readonly("energy", &DtnMatrix::energy)
        .def_readonly("entries", &DtnMatrix::entries)
        .def_readonly("weights", &DtnMatrix::weights)
        .def("eigenvalues", &DtnMatrix::eigenvalues);
    m.def("dtn_matrix", [](const RevolutionProfile& p, int n, int l, int grid) { return dtn_matrix(p, Dimension(n), l, grid); },
          py::arg("profile"), py::arg("n"), py::arg("l"), py::arg("grid_size") = kDefaultGridSize);

    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_readonly("eigenvalues", &SpectrumResult::eigenvalues)
        .def_readonly("per_mode", &SpectrumResult::per_mode)
        .def_readonly("grid_size", &SpectrumResult::grid_size)
        .def_property_readonly("modes", [](const SpectrumResult& s) {
            std::vector<int> ls;
            for (const auto& e : s.entries) ls.push_back(e.l);
            return ls;
        });
    m.def(
        "steklov_spectrum",
        [](const RevolutionProfile& p, int n, int count, std::optional<int> grid) {
            return grid ? steklov_spectrum(p, Dimension(n), count, *grid)
                        : steklov_spectrum(p, Dimension(n), count);
        },
        py::arg("profile"), py::arg("n"), py::arg("count"), py::arg("grid_size") = py::none());

    m.def("mixed_eigenvalue_oracle",
          [](int n, double R, double L, int l, const std::string& outer, int grid) {
              return mixed_eigenvalue_oracle(shell(n, R, L), l, outer_from(outer), grid);
          },
          py::arg("n"), py::arg("inner_radius"), py::arg("width"), py::arg("l"), py::arg("outer"),
          py::arg("grid_size") = kDefaultGridSize);
    m.def("mixed_eigenvalue_extrapolated",
          [](int n, double R, double L, int l, const std::string& outer, int grid) {
              return mixed_eigenvalue_extrapolated(shell(n, R, L), l, outer_from(outer), grid);
          },
          py::arg("n"), py::arg("inner_radius"), py::arg("width"), py::arg("l"), py::arg("outer"),
          py::arg("grid_size") = kDefaultGridSize);
    m.def("richardson", &richardson, py::arg("value_at_n"), py::arg("value_at_2n"), py::arg("order"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("r1", &BoundReport::r1)
        .def_readonly("r2", &BoundReport::r2)
        .def_readonly("length", &BoundReport::length)
        .def_readonly("swapped", &BoundReport::swapped)
        .def_readonly("l1", &BoundReport::l1)
        .def_readonly("q1", &BoundReport::q1)
        .def_readonly("q2", &BoundReport::q2)
        .def_readonly("alpha", &BoundReport::alpha)
        .def_readonly("beta", &BoundReport::beta)
        .def_readonly("neumann_combo", &BoundReport::neumann_combo)
        .def_readonly("dirichlet_combo", &BoundReport::dirichlet_combo)
        .def_readonly("bound", &BoundReport::bound)
        .def_property_readonly("attained_by", [](const BoundReport& r) { return to_string(r.attained_by); });

    auto inputs = [](int n, double r1, double r2, double L) { return BoundInputs(Dimension(n), r1, r2, L); };
    m.def("split_length", [inputs](int n, double r1, double r2, double L) {
              const auto s = split_length(inputs(n, r1, r2, L));
              return py::make_tuple(s.l1, s.l2);
          },
          py::arg("n"), py::arg("r1"), py::arg("r2"), py::arg("length"));
    m.def("weights", [inputs](int n, double r1, double r2, double L) {
              const auto w = weights(inputs(n, r1, r2, L));
              return py::make_tuple(w.q1, w.q2, w.alpha, w.beta);
          },
          py::arg("n"), py::arg("r1"), py::arg("r2"), py::arg("length"));
    m.def("dirichlet_combo", [inputs](int n, double r1, double r2, double L) { return dirichlet_combo(inputs(n, r1, r2, L)); },
          py::arg("n"), py::arg("r1"), py::arg("r2"), py::arg("length"));
    m.def("neumann_combo", [inputs](int n, double r1, double r2, double L) { return neumann_combo(inputs(n, r1, r2, L)); },
          py::arg("n"), py::arg("r1"), py::arg("r2"), py::arg("length"));
    m.def("theorem2_bound", [inputs](int n, double r1, double r2, double L) { return theorem2_bound(inputs(n, r1, r2, L)); },
          py::arg("n"), py::arg("r1"), py::arg("r2"), py::arg("length"));
    m.def("lstar", [](int n, double r1, double r2, double tol) { return lstar(Dimension(n), r1, r2, tol); },
          py::arg("n"), py::arg("r1"), py::arg("r2"), py::arg("tol") = kDefaultBoundTol);
    m.def("b_n", [](int n, double r1, double r2, double tol) { return b_n(Dimension(n), r1, r2, tol); },
          py::arg("n"), py::arg("r1"), py::arg("r2"), py::arg("tol") = kDefaultBoundTol);

    m.def("annulus_profile", &annulus_profile, py::arg("r"), py::arg("length"), py::arg("grid_size"));
    m.def("degenerate_profile", &degenerate_profile, py::arg("r1"), py::arg("r2"), py::arg("length"),
          py::arg("corner_epsilon"), py::arg("grid_size"));
    py::class_<CappedProfile>(m, "CappedProfile")
        .def_readonly("profile", &CappedProfile::profile)
        .def_readonly("level", &CappedProfile::level)
        .def_readonly("smoothing_width", &CappedProfile::smoothing_width)
        .def_readonly("fell_back", &CappedProfile::fell_back);
    m.def("capped_profile", &capped_profile, py::arg("profile"), py::arg("plateau_margin") = 0.5,
          py::arg("smoothing_width") = 0.05);
    m.def("sharpness_profile",
          [](int n, double R, double L, double eps, int grid) {
              return sharpness_profile(SharpnessFamilyParams::make(Dimension(n), R, L, eps), grid);
          },
          py::arg("n"), py::arg("radius"), py::arg("length"), py::arg("epsilon"), py::arg("grid_size"));
    m.def("random_profile", &random_profile, py::arg("r1"), py::arg("r2"), py::arg("length"),
          py::arg("seed"), py::arg("grid_size"));
}
