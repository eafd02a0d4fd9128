#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fueterlab/catalog.hpp"
#include "fueterlab/classify.hpp"
#include "fueterlab/errors.hpp"
#include "fueterlab/generators.hpp"
#include "fueterlab/laurent.hpp"
#include "fueterlab/report.hpp"
#include "fueterlab/verify.hpp"

namespace py = pybind11;
using namespace fueterlab;

namespace {

DiffConfig make_config(double h, const std::string& scheme) {
    DiffConfig cfg{h, scheme_from_string(scheme)};
    cfg.validate();
    return cfg;
}

SampleGrid make_grid(const std::optional<std::vector<double>>& g) {
    if (!g) return SampleGrid::default_grid();
    if (g->size() != 9) throw std::invalid_argument("grid needs t0,t1,r0,r1,a0,a1,b0,b1,n");
    const auto& v = *g;
    return SampleGrid({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}, static_cast<int>(v[8]));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quaternionic function classification and Laurent toolkit";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<KindError>(m, "KindError", PyExc_TypeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("t"), py::arg("x") = 0.0, py::arg("y") = 0.0,
             py::arg("z") = 0.0)
        .def_readwrite("t", &Quaternion::t)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def("conj", &Quaternion::conj)
        .def("norm", &Quaternion::norm)
        .def("components", &Quaternion::components)
        .def("inverse", [](const Quaternion& q) { return inv(q); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * double())
        .def(double() * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const Quaternion& q, int n) { return pow(q, n); })
        .def("__repr__", [](const Quaternion& q) {
            std::ostringstream os;
            os << "Quaternion" << q;
            return os.str();
        });

    py::class_<SphericalPoint>(m, "SphericalPoint")
        .def(py::init<double, double, double, double>(), py::arg("t"), py::arg("r"), py::arg("alpha"), py::arg("beta"))
        .def_readwrite("t", &SphericalPoint::t)
        .def_readwrite("r", &SphericalPoint::r)
        .def_readwrite("alpha", &SphericalPoint::alpha)
        .def_readwrite("beta", &SphericalPoint::beta)
        .def("to_quaternion", &SphericalPoint::to_quaternion);

    m.def("to_spherical", &to_spherical);
    m.def("iota", py::overload_cast<double, double>(&iota), py::arg("alpha"), py::arg("beta"));

    py::class_<QFunction>(m, "Function")
        .def_property_readonly("name", &QFunction::name)
        .def_property_readonly("kind", [](const QFunction& f) { return to_string(f.kind()); })
        .def("__call__", [](const QFunction& f, const Quaternion& p) { return f(p); })
        .def("__repr__", [](const QFunction& f) { return "<Function " + f.name() + ">"; });

    m.def("parse_function", &parse_function, py::arg("spec"));
    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const WitnessEntry& e : witness_catalog()) names.push_back(e.name);
        return names;
    });

    m.def(
        "fueter_left",
        [](const QFunction& f, const Quaternion& p, double h, const std::string& scheme) {
            return fueter_left(f, p, make_config(h, scheme)).value;
        },
        py::arg("f"), py::arg("p"), py::arg("h") = 1e-5, py::arg("scheme") = "central");
    m.def(
        "fueter_right",
        [](const QFunction& f, const Quaternion& p, double h, const std::string& scheme) {
            return fueter_right(f, p, make_config(h, scheme)).value;
        },
        py::arg("f"), py::arg("p"), py::arg("h") = 1e-5, py::arg("scheme") = "central");

    m.def(
        "classify_json",
        [](const QFunction& f, const std::optional<std::vector<double>>& grid, double h, const std::string& scheme,
           double tol_abs, double tol_rel) {
            py::gil_scoped_release release;
            return to_json(classify(f, make_grid(grid), make_config(h, scheme), Tolerance{tol_abs, tol_rel})).dump();
        },
        py::arg("f"), py::arg("grid") = py::none(), py::arg("h") = 1e-5, py::arg("scheme") = "central",
        py::arg("tol_abs") = 1e-6, py::arg("tol_rel") = 1e-6);

    m.def(
        "laurent_json",
        [](const QFunction& f, std::pair<double, double> center, std::pair<double, double> radii,
           std::pair<int, int> n_range, int quadrature_points) {
            AnnulusRegion region;
            region.c1 = center.first;
            region.c2 = center.second;
            region.inner = radii.first;
            region.outer = radii.second;
            py::gil_scoped_release release;
            const LaurentSeries s = laurent_coefficients(f, region, n_range.first, n_range.second, quadrature_points);
            Json doc = to_json(s);
            doc["max_reconstruction_error"] = probe_reconstruction_error(s, f);
            return doc.dump();
        },
        py::arg("f"), py::arg("center") = std::pair{0.0, 1.0}, py::arg("radii") = std::pair{0.2, 0.6},
        py::arg("n_range") = std::pair{-8, 8}, py::arg("quadrature_points") = 64);

    m.def(
        "verify_props",
        [](std::uint64_t seed, std::optional<double> h) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.h = h;
            VerifySummary s;
            {
                py::gil_scoped_release release;
                s = verify_props(opts);
            }
            py::list out;
            for (const CheckResult& c : s.checks) {
                py::dict d;
                d["name"] = c.name;
                d["passed"] = c.passed;
                d["max_residual"] = c.max_residual;
                d["threshold"] = c.threshold;
                d["detail"] = c.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 1, py::arg("h") = py::none());
}
