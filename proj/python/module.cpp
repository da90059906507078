#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "solflow/flow.hpp"
#include "solflow/fundgroup.hpp"
#include "solflow/integrals.hpp"
#include "solflow/metric.hpp"
#include "solflow/sectionmap.hpp"

namespace py = pybind11;
using namespace solflow;

namespace {

py::list mat2ToList(const Mat2& m) {
    py::list rows;
    rows.append(py::make_tuple(m.a, m.b));
    rows.append(py::make_tuple(m.c, m.d));
    return rows;
}

}  // namespace

PYBIND11_MODULE(_solflow, mod) {
    mod.doc() = "Geodesic flow on torus bundles over the circle: metric family, "
                "integrals, return map, and fundamental-group growth";

    py::class_<GluingMatrix>(mod, "GluingMatrix")
        .def(py::init<long long, long long, long long, long long>(), py::arg("c11"),
             py::arg("c12"), py::arg("c21"), py::arg("c22"))
        .def_static("parse", &GluingMatrix::parse)
        .def_property_readonly("det", &GluingMatrix::det)
        .def_property_readonly("eigenvalues", &GluingMatrix::eigenvalues)
        .def_property_readonly("spectral_radius", &GluingMatrix::spectralRadius)
        .def_property_readonly("is_hyperbolic", &GluingMatrix::isHyperbolic)
        .def_property_readonly("log_matrix",
                               [](const GluingMatrix& c) { return mat2ToList(c.logMatrix()); });

    py::class_<MetricFamily>(mod, "MetricFamily")
        .def(py::init<const GluingMatrix&>())
        .def("metric_at", [](const MetricFamily& m, double z) { return mat2ToList(m.metricAt(z)); })
        .def("co_metric_at",
             [](const MetricFamily& m, double z) { return mat2ToList(m.coMetricAt(z)); })
        .def("d_co_metric_at",
             [](const MetricFamily& m, double z) { return mat2ToList(m.dCoMetricAt(z)); });

    mod.def("deck_invariance_defect", &deckInvarianceDefect);

    py::class_<CoverState>(mod, "CoverState")
        .def(py::init([](double x, double y, double z, double px, double py, double pz) {
                 return CoverState{x, y, z, px, py, pz};
             }),
             py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0, py::arg("px") = 0.0,
             py::arg("py") = 0.0, py::arg("pz") = 0.0)
        .def_readwrite("x", &CoverState::x)
        .def_readwrite("y", &CoverState::y)
        .def_readwrite("z", &CoverState::z)
        .def_readwrite("px", &CoverState::px)
        .def_readwrite("py", &CoverState::py)
        .def_readwrite("pz", &CoverState::pz);

    py::class_<IntegratorConfig>(mod, "IntegratorConfig")
        .def(py::init([](double dt, std::uint64_t seed) {
                 IntegratorConfig c;
                 c.dt = dt;
                 c.seed = seed;
                 return c;
             }),
             py::arg("dt") = 1e-3, py::arg("seed") = 42);

    py::class_<TrajectoryRecord>(mod, "TrajectoryRecord")
        .def_readonly("times", &TrajectoryRecord::times)
        .def_readonly("states", &TrajectoryRecord::states)
        .def_readonly("integral_values", &TrajectoryRecord::integralValues);

    mod.def("hamiltonian", &hamiltonian);
    mod.def("vector_field", &vectorField);
    mod.def("step", &step);
    mod.def("integrate", &integrate, py::arg("s0"), py::arg("metric"), py::arg("config"),
            py::arg("t_final"), py::arg("sample_every") = 1);
    mod.def("deck_apply", &deckApply);
    mod.def("normalize", [](const CoverState& s, const GluingMatrix& c) {
        const QuotientState q = normalize(s, c);
        return py::make_tuple(q.x, q.y, q.z, q.px, q.py, q.pz);
    });

    mod.def("eval_i1", &evalI1);
    mod.def("eval_i2", &evalI2, py::arg("px"), py::arg("py"),
            py::arg("angular_factor") = 6.28318530717958648);
    mod.def("eval_all", [](const CoverState& s, const MetricFamily& m) {
        const IntegralValues v = evalAll(s, m);
        py::dict d;
        d["F1"] = v.f1;
        d["F2"] = v.f2;
        d["F3"] = v.f3;
        d["I1"] = v.i1;
        d["I2"] = v.i2;
        d["I3"] = v.i3;
        return d;
    });
    mod.def(
        "poisson_bracket",
        [](const std::function<double(const CoverState&)>& f,
           const std::function<double(const CoverState&)>& g, const CoverState& s,
           double fd_step) {
            BracketConfig cfg;
            cfg.fdStep = fd_step;
            return poissonBracket(f, g, s, cfg);
        },
        py::arg("f"), py::arg("g"), py::arg("s"), py::arg("fd_step") = 1e-5);
    mod.def("independence_rank",
            [](const CoverState& s, const MetricFamily& m) { return independenceRank(s, m); });

    py::class_<TorusPoint>(mod, "TorusPoint")
        .def(py::init([](double x, double y) { return TorusPoint{x, y}; }), py::arg("x"),
             py::arg("y"))
        .def_readwrite("x", &TorusPoint::x)
        .def_readwrite("y", &TorusPoint::y);

    mod.def("torus_distance", &torusDistance);
    mod.def("cat_map", &catMap);
    mod.def("return_map", [](TorusPoint q, const MetricFamily& m, const GluingMatrix& c,
                             const IntegratorConfig& cfg) {
        const ReturnMapResult r = returnMap(q, m, c, cfg);
        return py::make_tuple(r.point, r.crossingTime);
    });
    mod.def(
        "lyapunov_top",
        [](const GluingMatrix& c, long long iterations, std::uint64_t seed) {
            const LyapunovEstimate est = lyapunovTop(c, iterations, seed);
            py::dict d;
            d["top_exponent"] = est.topExponent;
            d["iterations"] = est.iterations;
            d["per_orbit_values"] = est.perOrbitValues;
            return d;
        },
        py::arg("c"), py::arg("iterations") = 10000, py::arg("seed") = 42);
    mod.def("entropy_lower_bound", &entropyLowerBound);

    py::class_<GroupElement>(mod, "GroupElement")
        .def(py::init([](long long vx, long long vy, long long n) {
                 return GroupElement{vx, vy, n};
             }),
             py::arg("vx") = 0, py::arg("vy") = 0, py::arg("n") = 0)
        .def_readwrite("vx", &GroupElement::vx)
        .def_readwrite("vy", &GroupElement::vy)
        .def_readwrite("n", &GroupElement::n)
        .def("__eq__", [](const GroupElement& a, const GroupElement& b) { return a == b; })
        .def("__repr__", [](const GroupElement& g) {
            return "GroupElement(vx=" + std::to_string(g.vx) + ", vy=" + std::to_string(g.vy) +
                   ", n=" + std::to_string(g.n) + ")";
        });

    mod.def("multiply", &multiply);
    mod.def("group_inverse", &inverse);
    mod.def(
        "growth_function",
        [](const GluingMatrix& c, int max_radius) {
            const GrowthTable t = growthFunction(c, max_radius);
            py::dict d;
            d["radii"] = t.radii;
            d["counts"] = t.counts;
            d["truncated"] = t.truncated;
            return d;
        },
        py::arg("c"), py::arg("max_radius") = 12);
    mod.def(
        "certificate_words",
        [](const GluingMatrix& c, int k) {
            const CertificateResult r = certificateWords(c, k);
            return py::make_tuple(r.words, r.collisions);
        },
        py::arg("c"), py::arg("k"));
    mod.def("growth_rate", [](const std::vector<long long>& radii,
                              const std::vector<long long>& counts) {
        GrowthTable t;
        t.radii = radii;
        t.counts = counts;
        return growthRate(t);
    });
}
