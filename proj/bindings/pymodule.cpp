// Python bindings for the main operations: PD parsing, colorings, the
// branched-cover cubic form, and the oracle/invariance cross-checks.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cupcube/descriptors.hpp"
#include "cupcube/invariance.hpp"

namespace py = pybind11;
using namespace cupcube;

namespace {

LinkDiagram diagram_of(const std::string& arg) {
    for (const CensusEntry& e : knot_census())
        if (e.name == arg) return LinkDiagram::parse(e.pd);
    return LinkDiagram::parse(arg);
}

py::dict branched_dict(const BranchedResult& r) {
    QuotRing a = QuotRing::eisenstein(r.n);
    py::dict d;
    d["knot"] = r.knot;
    d["n"] = r.n;
    d["reduced_orders"] = r.reduced_orders;
    d["rank_one_over_A"] = r.rank_one;
    d["form"] = r.pretty;
    d["lambda"] = r.lambda;
    d["lambda_pretty"] = a.show(r.lambda);
    d["orbit_size"] = r.orbit_size;
    d["zero"] = r.form_is_zero();
    return d;
}

}  // namespace

PYBIND11_MODULE(_cupcube, m) {
    m.doc() = "exact trilinear forms of link diagrams";

    py::class_<LinkDiagram>(m, "Diagram")
        .def_static("parse", &LinkDiagram::parse, py::arg("pd"))
        .def_property_readonly("crossings", &LinkDiagram::crossing_count)
        .def_property_readonly("edges", &LinkDiagram::edge_count)
        .def_property_readonly("arcs", &LinkDiagram::arc_count)
        .def_property_readonly("faces", &LinkDiagram::face_count)
        .def_property_readonly("components", &LinkDiagram::component_count)
        .def_property_readonly("writhe", &LinkDiagram::writhe)
        .def("sign", &LinkDiagram::sign, py::arg("crossing"))
        .def("mirrored", &LinkDiagram::mirrored)
        .def("reversed", &LinkDiagram::reversed)
        .def("pd_string", &LinkDiagram::pd_string)
        .def("info_json", [](const LinkDiagram& d) { return io::diagram_info(d).dump(); })
        .def("__repr__",
             [](const LinkDiagram& d) { return "<Diagram " + d.pd_string() + ">"; });

    m.def("parse_pd", &LinkDiagram::parse, py::arg("pd"), "parse a PD code");
    m.def("pd_isomorphic", &pd_isomorphic);

    m.def(
        "branched_form",
        [](const std::string& knot, i64 n) {
            LinkDiagram d = diagram_of(knot);
            return branched_dict(branched_form(d, n, knot));
        },
        py::arg("knot"), py::arg("n"),
        "cubic form of the 3-fold branched cover pipeline (census name or PD)");

    m.def("census", [] {
        std::vector<std::string> names;
        for (const CensusEntry& e : knot_census()) names.push_back(e.name);
        return names;
    });

    m.def("table_check", [] {
        py::list out;
        for (const TableRow& r : table_check()) {
            py::dict d;
            d["knot"] = r.knot;
            d["n"] = r.n;
            d["expected"] = r.expected;
            d["computed"] = r.got;
            d["pass"] = r.pass;
            out.append(d);
        }
        return out;
    });

    m.def(
        "coloring_counts",
        [](const std::string& knot, i64 n) {
            LinkDiagram d = diagram_of(knot);
            BranchedSetup s = branched_setup(n);
            ColoringSpace space(d, Representation::constant(d, 1), s.module);
            return py::make_tuple(u128_to_string(space.count()),
                                  u128_to_string(space.reduced_count()));
        },
        py::arg("knot"), py::arg("n"),
        "(|Col|, |Col_red|) for the branched setup, as decimal strings");

    m.def(
        "oracle_check",
        [](const std::string& which, i64 n, int torus_m, u64 samples, u64 seed) {
            BranchedSetup s = branched_setup(n);
            OracleReport r;
            if (which == "trefoil") {
                Representation f = Representation::constant(right_trefoil().d, 1);
                r = check_trefoil_oracle(s.module, s.psi, f, samples, seed);
            } else if (which == "fig8") {
                r = check_fig8_oracle(s.module, s.psi, 1, samples, seed);
            } else if (which == "torus") {
                r = check_torus_oracle(torus_m, s.module, s.psi,
                                       std::vector<int>(std::size_t(torus_m), 1), samples, seed);
            } else {
                throw InputError("oracle must be trefoil | fig8 | torus");
            }
            py::dict d;
            d["checked"] = r.checked;
            d["exhaustive"] = r.exhaustive;
            d["mismatches"] = r.mismatches;
            d["pass"] = r.ok();
            return d;
        },
        py::arg("which"), py::arg("n") = 2, py::arg("torus_m") = 2, py::arg("samples") = 2000,
        py::arg("seed") = 0);

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<ComputeError>(m, "ComputeError");
}
