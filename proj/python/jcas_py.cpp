// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the package wrapper.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <jcas/error.hpp>
#include <jcas/gradings.hpp>
#include <jcas/harness.hpp>
#include <jcas/params.hpp>
#include <jcas/poly_io.hpp>
#include <jcas/quotient.hpp>
#include <jcas/tschirnhausen.hpp>

namespace py = pybind11;
using namespace jcas;

namespace {

RingPtr ring_of(const std::vector<std::string> &vars) { return make_ring(vars); }

Poly xy_poly(const std::string &text) { return parse_poly(text, ring_of({"x", "y"})); }

std::string dump(const nlohmann::json &j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_jcas, m)
{
    m.doc() = "Exact polynomial algebra for Jacobian-pair reduction experiments";

    static py::exception<Error> base(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            // A tuple value becomes the exception's args: (category, message).
            PyErr_SetObject(base.ptr(), py::make_tuple(e.category(), e.what()).ptr());
        }
    });

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string &text, const std::vector<std::string> &vars) {
                 return parse_poly(text, ring_of(vars));
             }),
             py::arg("text"), py::arg("vars") = std::vector<std::string>{"x", "y"})
        .def_static("from_json", [](const std::string &s) { return poly_from_json(nlohmann::json::parse(s)); })
        .def("to_json", [](const Poly &f) { return dump(poly_to_json(f)); })
        .def_property_readonly("vars", [](const Poly &f) { return f.ring()->vars(); })
        .def("is_zero", &Poly::is_zero)
        .def("__len__", &Poly::size)
        .def("__str__", [](const Poly &f) { return to_string(f); })
        .def("__repr__", [](const Poly &f) { return "Poly('" + to_string(f) + "')"; })
        .def("__pow__", [](const Poly &f, unsigned long k) { return f.pow(k); })
        .def("derivative", [](const Poly &f, const std::string &v) { return derivative(f, v); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self);

    m.def("bracket", &jacobian_bracket, py::arg("f"), py::arg("g"));

    m.def(
        "params_json",
        [](long a, long b, long mm, long n, long delta, long i) {
            return dump(params_to_json(build_params(a, b, mm, n, delta, i)));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"), py::arg("delta"), py::arg("i"));

    m.def(
        "conditions_json",
        [](const std::string &F, const std::string &G, long a, long b, long mm, long n) {
            return dump(conditions_to_json(check_conditions(xy_poly(F), xy_poly(G), a, b, mm, n)));
        },
        py::arg("F"), py::arg("G"), py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"));

    m.def(
        "extract_q",
        [](const std::string &F, long a, long mm, long n) { return to_string(extract_Q(xy_poly(F), a, mm, n)); },
        py::arg("F"), py::arg("a"), py::arg("m"), py::arg("n"));

    m.def(
        "decompose_json",
        [](const std::string &Q) {
            auto d = decompose_principal(xy_poly(Q));
            return dump({{"E", to_string(d.E)}, {"delta", d.delta}, {"alpha", d.alpha.to_json()}});
        },
        py::arg("Q"));

    m.def(
        "remainder_json",
        [](const std::string &F, long a, long mm, long n) {
            return dump(remainder_to_json(minimize_remainder(xy_poly(F), a, mm, n)));
        },
        py::arg("F"), py::arg("a"), py::arg("m"), py::arg("n"));

    m.def(
        "magnus_json",
        [](const std::string &F, const std::string &G, const std::string &w) {
            return dump(magnus_to_json(solve_magnus(xy_poly(F), xy_poly(G), parse_direction(w))));
        },
        py::arg("F"), py::arg("G"), py::arg("w") = "(1,1)");

    m.def(
        "check_dc_json",
        [](const std::string &Fc, long mm, long n, long i, const std::string &mode) {
            return dump(dc_to_json(dc_dsc_check(xy_poly(Fc), mm, n, i, parse_dc_mode(mode))));
        },
        py::arg("Fcirc"), py::arg("m"), py::arg("n"), py::arg("i"), py::arg("mode") = "DC");

    m.def(
        "generate_json",
        [](const std::string &kind, long a, long b, long mm, long n, long delta, double density, std::uint64_t seed) {
            ExampleRequest req;
            req.kind = parse_example_kind(kind);
            req.a = a;
            req.b = b;
            req.m = mm;
            req.n = n;
            req.delta = delta;
            req.density = density;
            req.seed = seed;
            auto ex = generate_example(req);
            auto j = example_to_json(ex);
            j["F_text"] = to_string(ex.F);
            if (ex.G) {
                j["G_text"] = to_string(*ex.G);
            }
            return dump(j);
        },
        py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"), py::arg("delta") = 1,
        py::arg("density") = 0.5, py::arg("seed") = 0);

    m.def(
        "pipeline_json",
        [](const std::string &F, const std::string &G, long a, long b, long mm, long n, std::optional<long> only_i) {
            PipelineOptions opt;
            opt.only_i = only_i;
            return dump(pipeline_to_json(remainder_pipeline(xy_poly(F), xy_poly(G), a, b, mm, n, opt)));
        },
        py::arg("F"), py::arg("G"), py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"),
        py::arg("only_i") = py::none());

    m.def(
        "valqui_json",
        [](const std::string &F, const std::string &G, long a, long b, std::int64_t order) {
            return dump(valqui_to_json(valqui_check(xy_poly(F), xy_poly(G), a, b, order)));
        },
        py::arg("F"), py::arg("G"), py::arg("a"), py::arg("b"), py::arg("order") = -6);

    m.def(
        "shape_check",
        [](const std::string &F, long mm, long n, const std::string &kind) {
            ShapeKind k = kind == "A" ? ShapeKind::A : kind == "B" ? ShapeKind::B : ShapeKind::Both;
            auto v = trapezoid_shape_check(xy_poly(F), mm, n, k);
            return std::make_pair(v.divisibility_side, v.polygon_side);
        },
        py::arg("F"), py::arg("m"), py::arg("n"), py::arg("kind") = "both");

    m.def(
        "reduce_pk",
        [](const Poly &f, bool x_plus_y, unsigned k) { return reduce_Pk(f, x_plus_y, k).lift(); },
        py::arg("f"), py::arg("x_plus_y"), py::arg("k"));
}
