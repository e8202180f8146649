#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamefiber/catalog.hpp"
#include "tamefiber/errors.hpp"
#include "tamefiber/fiber.hpp"
#include "tamefiber/jumps.hpp"
#include "tamefiber/resolution.hpp"
#include "tamefiber/singtrace.hpp"

namespace py = pybind11;
using namespace tamefiber;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const BigRat& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

py::dict to_dict(const GroupRingElement& g) {
    py::dict d;
    for (const auto& [e, c] : g.terms()) d[py::int_(e)] = to_py(c);
    return d;
}

py::dict resolution_dict(const ResolutionData& res) {
    py::dict d;
    d["m1"] = res.sing.m1;
    d["m2"] = res.sing.m2;
    d["n"] = res.n();
    d["r"] = res.r;
    d["b"] = res.jh.b;
    d["rseq"] = res.jh.rseq;
    d["mu"] = res.mu;
    d["alpha1"] = res.alpha1;
    d["alpha2"] = res.alpha2;
    d["m"] = res.m;
    d["M"] = res.M;
    d["stable"] = is_stable(res);
    return d;
}

}  // namespace

PYBIND11_MODULE(_tamefiber, m) {
    m.doc() = "Exact invariants of tame cyclic quotient singularities and degenerating curves";

    static py::exception<Error> exc(m, "TamefiberError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, e.what());
        }
    });

    py::class_<FiberGraph>(m, "FiberGraph")
        .def_static("parse", &parse_graph, py::arg("text"))
        .def_static("load", &load_graph, py::arg("path"))
        .def_static("catalog", py::overload_cast<const std::string&>(&lookup), py::arg("id"))
        .def_property_readonly("lcm", &FiberGraph::lcm)
        .def_property_readonly("vertices",
                               [](const FiberGraph& g) {
                                   py::list out;
                                   for (const auto& v : g.vertices()) out.append(py::make_tuple(v.id, v.genus, v.mult));
                                   return out;
                               })
        .def_property_readonly("edges", &FiberGraph::edge_ids)
        .def("to_text", &FiberGraph::to_text)
        .def("__repr__", [](const FiberGraph& g) {
            return "<FiberGraph " + std::to_string(g.vertices().size()) + " vertices, " +
                   std::to_string(g.edges().size()) + " edges>";
        });

    m.def("resolve", [](std::int64_t m1, std::int64_t m2, std::int64_t n) { return resolution_dict(resolve({m1, m2, n})); },
          py::arg("m1"), py::arg("m2"), py::arg("n"));
    m.def("trace_polynomial",
          [](std::int64_t m1, std::int64_t m2, std::int64_t n) { return to_dict(trace_polynomial(resolve({m1, m2, n}))); },
          py::arg("m1"), py::arg("m2"), py::arg("n"), "exponent -> coefficient");
    m.def("trace_closed_form",
          [](std::int64_t m1, std::int64_t m2, std::int64_t n) { return to_dict(trace_closed_form(resolve({m1, m2, n}))); },
          py::arg("m1"), py::arg("m2"), py::arg("n"));
    m.def("self_intersections", &self_intersections, py::arg("graph"), py::arg("n"));
    m.def("total_trace", [](const FiberGraph& g, std::int64_t n) { return to_dict(total_trace(g, n)); },
          py::arg("graph"), py::arg("n"));
    m.def("h1_character", [](const FiberGraph& g, std::int64_t n) { return h1_character(g, n).exponents; },
          py::arg("graph"), py::arg("n"), "exponent -> multiplicity");
    m.def("principal_lcm", &principal_lcm, py::arg("graph"));
    m.def(
        "compute_jumps",
        [](const FiberGraph& g, int sweeps, std::int64_t n_min) {
            JumpOptions opt;
            opt.sweeps = sweeps;
            opt.n_min = n_min;
            JumpSet js;
            {
                py::gil_scoped_release release;
                js = compute_jumps(g, opt);
            }
            py::list out;
            for (const auto& j : js.jumps) out.append(to_fraction(j));
            return out;
        },
        py::arg("graph"), py::arg("sweeps") = 3, py::arg("n_min") = 1000);
    m.def("catalog_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : catalog_list()) ids.push_back(e.id);
        return ids;
    });
}
