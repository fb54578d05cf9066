#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpg/engine.hpp"
#include "fpg/graph_patterns.hpp"
#include "fpg/homology.hpp"
#include "fpg/lst.hpp"

namespace py = pybind11;
using namespace fpg;

namespace {

py::dict stats_dict(const CensusStats& s) {
    py::dict d;
    d["graphs_total"] = s.graphs_total;
    d["graphs_rejected"] = s.graphs_rejected;
    d["rejected_triple"] = s.rejected_triple;
    d["rejected_broken"] = s.rejected_broken;
    d["rejected_handle"] = s.rejected_handle;
    d["nodes_explored"] = s.nodes_explored;
    py::dict prunes;
    for (PruneTag tag : all_tags()) prunes[py::str(std::string(tag_name(tag)))] = s.prunes[static_cast<int>(tag)];
    d["prunes"] = prunes;
    d["candidates_emitted"] = s.candidates_emitted;
    d["candidates_distinct"] = s.candidates_distinct;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Census of 3-manifold triangulations via face pairing graphs";

    py::register_exception<TriangulationError>(m, "TriangulationError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<CensusError>(m, "CensusError", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

    py::class_<Perm4>(m, "Perm4")
        .def(py::init<>())
        .def(py::init([](const std::string& s) { return Perm4::parse(s); }))
        .def("__getitem__", [](const Perm4& p, int i) {
            if (i < 0 || i > 3) throw py::index_error();
            return p[i];
        })
        .def("inverse", &Perm4::inverse)
        .def("sign", &Perm4::sign)
        .def("__mul__", [](const Perm4& a, const Perm4& b) { return a * b; })
        .def("__eq__", [](const Perm4& a, const Perm4& b) { return a == b; })
        .def("__str__", &Perm4::str)
        .def("__repr__", [](const Perm4& p) { return "Perm4('" + p.str() + "')"; });

    py::class_<Triangulation>(m, "Triangulation")
        .def(py::init<int>(), py::arg("size") = 0)
        .def_static("from_text", &parse_tri)
        .def("to_text", &serialize_tri)
        .def("size", &Triangulation::size)
        .def("__len__", &Triangulation::size)
        .def("add_tetrahedron", &Triangulation::add_tetrahedron)
        .def("glue", &Triangulation::glue, py::arg("tet"), py::arg("face"), py::arg("target"), py::arg("perm"))
        .def("unglue", &Triangulation::unglue)
        .def("is_glued", &Triangulation::is_glued)
        .def("gluing",
             [](const Triangulation& t, int tet, int face) -> py::object {
                 const auto& g = t.gluing(tet, face);
                 if (!g) return py::none();
                 return py::make_tuple(g->tet, g->perm);
             })
        .def("all_faces_glued", &Triangulation::all_faces_glued)
        .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; });

    py::class_<H1Result>(m, "H1")
        .def_readonly("rank", &H1Result::rank)
        .def_readonly("torsion", &H1Result::torsion)
        .def("__str__", &H1Result::str)
        .def("__repr__", [](const H1Result& h) { return "H1(" + h.str() + ")"; });

    m.def("builtin", &builtin);
    m.def("builtin_names", &builtin_names);
    m.def("iso_signature", &iso_signature);
    m.def("first_homology", &first_homology);
    m.def("is_closed_3manifold", &is_closed_3manifold);
    m.def("is_orientable", &is_orientable);
    m.def("euler_characteristic", &euler_characteristic);
    m.def("pachner_23", &pachner_23);
    m.def("pachner_32", &pachner_32);
    m.def("face_orbit_count", [](const Triangulation& t) { return Skeleton(t).face_count(); });
    m.def("edge_orbit_count", [](const Triangulation& t) { return Skeleton(t).edge_count(); });

    m.def("classify_graphs", [](int n) {
        ClassifyRow r = classify_graphs(n);
        py::dict d;
        d["n"] = r.n;
        d["total"] = r.total;
        d["none"] = r.none;
        d["some"] = r.some;
        d["triple"] = r.triple;
        d["broken"] = r.broken;
        d["handle"] = r.handle;
        return d;
    });
    m.def("face_pairing_graphs", [](int n) {
        std::vector<std::string> out;
        for (const MultiGraph& g : enumerate_face_pairing_graphs(n)) out.push_back(serialize_graph(g));
        return out;
    });

    m.def("enumerate_lsts", [](int t) {
        py::list out;
        for (auto& [d, tri] : enumerate_lsts(t)) {
            py::dict desc;
            desc["tet_count"] = d.tet_count;
            desc["base_choice"] = d.base_choice;
            desc["layer_choices"] = d.layer_choices;
            desc["boundary_edges"] = std::vector<int>(d.boundary_edges.begin(), d.boundary_edges.end());
            out.append(py::make_tuple(desc, tri));
        }
        return out;
    });

    m.def("verify_triple_edge_theorem", &verify_triple_edge_theorem);
    m.def("double_edge_class_count", [] { return classify_double_edge_configurations().class_signatures.size(); });

    m.def(
        "run_census",
        [](int n, bool orientable, const std::string& mode, bool graph_filters,
           const std::vector<std::string>& disabled_filters, int workers) {
            CensusConfig cfg;
            cfg.n = n;
            cfg.orientable_only = orientable;
            cfg.mode = parse_mode(mode);
            if (!graph_filters) cfg.graph_filters = GraphFilterSet::none();
            for (const auto& name : disabled_filters) {
                auto tag = tag_from_name(name);
                if (!tag) throw CensusError("unknown filter tag '" + name + "'");
                cfg.tri_filters.set(*tag, false);
            }
            cfg.worker_count = workers;
            CensusResult r;
            {
                py::gil_scoped_release release;
                r = run_census(cfg);
            }
            return py::make_tuple(r.signatures(), stats_dict(r.stats));
        },
        py::arg("n"), py::arg("orientable") = false, py::arg("mode") = "redesigned", py::arg("graph_filters") = true,
        py::arg("disabled_filters") = std::vector<std::string>{}, py::arg("workers") = 1);
}
