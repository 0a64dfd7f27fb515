#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isoembed/families.hpp"
#include "isoembed/geomspec.hpp"
#include "isoembed/schoenberg.hpp"
#include "isoembed/structure.hpp"
#include "isoembed/symmat.hpp"

namespace py = pybind11;
using namespace isoembed;

namespace {

using EdgeTuple = std::tuple<int, int, double>;

WeightedGraph make_graph(int n, const std::vector<EdgeTuple>& edges) {
    std::vector<Edge> e;
    e.reserve(edges.size());
    for (auto [u, v, w] : edges) e.push_back({u, v, w});
    return WeightedGraph(n, std::move(e));
}

py::dict structure_dict(const StructureClass& c) {
    py::dict d;
    d["class"] = std::string(tag_name(c.tag));
    d["order"] = c.order;
    d["missing_edges"] = c.missing_edges;
    return d;
}

WitnessKind witness_kind(const std::string& s) {
    if (s == "claw-a") return WitnessKind::ClawA;
    if (s == "claw-b") return WitnessKind::ClawB;
    if (s == "claw-c") return WitnessKind::ClawC;
    if (s == "even-cycle") return WitnessKind::EvenCycle;
    if (s == "odd-cycle") return WitnessKind::OddCycle;
    throw py::value_error("unknown witness kind: " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hilbert-space embeddability of finite metrics, critical graphs and geometric spectra.";

    static py::exception<Error> error_type(m, "IsoembedError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::handle(error_type.ptr())(e.what());
            inst.attr("kind") = std::string(e.name());
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    m.attr("DEFAULT_TOL") = kDefaultTol;

    py::class_<MetricSpace>(m, "MetricSpace")
        .def(py::init([](const Eigen::MatrixXd& d, double tol, std::vector<std::string> labels) {
                 return validate_metric(d, tol, std::move(labels));
             }),
             py::arg("d"), py::arg("tol") = kDefaultTol, py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("size", &MetricSpace::size)
        .def_property_readonly("matrix", &MetricSpace::matrix)
        .def_property_readonly("labels", &MetricSpace::labels)
        .def_property_readonly("max_distance", &MetricSpace::max_distance)
        .def("__len__", &MetricSpace::size)
        .def("__getitem__", [](const MetricSpace& s, std::pair<int, int> ij) {
            if (ij.first < 0 || ij.second < 0 || ij.first >= s.size() || ij.second >= s.size())
                throw py::index_error("point index out of range");
            return s(ij.first, ij.second);
        })
        .def("__eq__", &MetricSpace::operator==)
        .def("__repr__", [](const MetricSpace& s) { return "<MetricSpace n=" + std::to_string(s.size()) + ">"; });

    py::class_<WeightedGraph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_static(
            "unweighted",
            [](int n, const std::vector<std::pair<int, int>>& edges) { return WeightedGraph::unweighted(n, edges); },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &WeightedGraph::size)
        .def_property_readonly("edges",
                               [](const WeightedGraph& g) {
                                   std::vector<EdgeTuple> out;
                                   for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
                                   return out;
                               })
        .def("is_connected", &WeightedGraph::is_connected)
        .def("__eq__", &WeightedGraph::operator==)
        .def("__repr__", [](const WeightedGraph& g) {
            return "<Graph n=" + std::to_string(g.size()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    // metric-core
    m.def("shortest_path_metric", &shortest_path_metric, py::arg("graph"));
    m.def(
        "critical_graph", [](const MetricSpace& s, double tol) { return critical_graph(s, tol).graph(); },
        py::arg("metric"), py::arg("tol") = kDefaultTol);
    m.def("generates_metric", &generates_metric, py::arg("graph"), py::arg("metric"), py::arg("tol") = kDefaultTol);
    m.def(
        "to_dot",
        [](const MetricSpace& s, double tol) { return to_dot(critical_graph(s, tol), s.labels()); },
        py::arg("metric"), py::arg("tol") = kDefaultTol);

    // symmat
    m.def(
        "jacobi_eigen",
        [](const Eigen::MatrixXd& a) {
            auto e = jacobi_eigen(SymmetricMatrix(a));
            return py::make_tuple(e.eigenvalues, e.eigenvectors);
        },
        py::arg("a"));
    m.def(
        "double_center", [](const Eigen::MatrixXd& a) { return double_center(SymmetricMatrix(a)).matrix(); },
        py::arg("a"));
    m.def(
        "definiteness",
        [](const Eigen::MatrixXd& a, std::optional<double> tol) {
            const auto r = definiteness(SymmetricMatrix(a), tol);
            return py::make_tuple(std::string(definiteness_name(r.kind)), r.lambda_min, r.lambda_max);
        },
        py::arg("a"), py::arg("tol") = py::none());
    m.def(
        "centered_sum_of_squares",
        [](const std::vector<Eigen::VectorXd>& pts) {
            const auto s = centered_sum_of_squares(pts);
            return py::make_tuple(s.lhs, s.rhs);
        },
        py::arg("points"));

    // embeddability
    m.def(
        "squared_distance_matrix", [](const MetricSpace& s) { return squared_distance_matrix(s).matrix(); },
        py::arg("metric"));
    m.def(
        "is_embeddable",
        [](const MetricSpace& s, double tol) {
            const auto r = is_embeddable(s, tol);
            py::dict d;
            d["embeddable"] = r.embeddable;
            d["lambda_max"] = r.lambda_max;
            d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
            return d;
        },
        py::arg("metric"), py::arg("tol") = kDefaultTol);
    m.def(
        "quadratic_form",
        [](const MetricSpace& s, const Eigen::VectorXd& alpha) {
            return quadratic_form(squared_distance_matrix(s), alpha);
        },
        py::arg("metric"), py::arg("alpha"));
    m.def(
        "kernel_at_base", [](const MetricSpace& s, int base) { return kernel_at_base(s, base).k.matrix(); },
        py::arg("metric"), py::arg("base"));
    m.def("kernel_trace_profile", &kernel_trace_profile, py::arg("metric"));

    py::class_<Embedding>(m, "Embedding")
        .def_readonly("base", &Embedding::base)
        .def_readonly("coords", &Embedding::coords)
        .def_readonly("residual", &Embedding::residual)
        .def_property_readonly("rank", &Embedding::rank);
    m.def("embed_coordinates", &embed_coordinates, py::arg("metric"), py::arg("base") = 0,
          py::arg("tol") = kDefaultTol);
    m.def("verify_isometry", &verify_isometry, py::arg("embedding"), py::arg("metric"));

    // structure
    m.def(
        "classify_unweighted", [](const WeightedGraph& g) { return structure_dict(classify_unweighted(g)); },
        py::arg("graph"));
    m.def(
        "classify_4point",
        [](const MetricSpace& s, double tol) { return structure_dict(classify_4point(s, tol)); },
        py::arg("metric"), py::arg("tol") = kDefaultTol);
    m.def(
        "connectivity_report",
        [](const WeightedGraph& g) {
            const auto r = connectivity_report(g);
            py::dict d;
            d["is_path"] = r.is_path;
            d["is_2_connected"] = r.is_2_connected;
            d["is_3_connected"] = r.is_3_connected;
            py::list cuts;
            for (const auto& c : r.two_cuts) cuts.append(py::make_tuple(c.u, c.v, c.adjacent));
            d["two_cuts"] = cuts;
            return d;
        },
        py::arg("graph"));
    m.def(
        "match_pivot_structure",
        [](const WeightedGraph& g) -> py::object {
            const auto p = match_pivot_structure(g);
            if (!p) return py::none();
            return py::make_tuple(p->order, p->pivot);
        },
        py::arg("graph"));
    m.def("graph_from_mask", &graph_from_mask, py::arg("n"), py::arg("mask"));
    m.def(
        "verify_unweighted_theorem",
        [](int max_n, double tol, unsigned threads) {
            TheoremCheck r;
            {
                py::gil_scoped_release release;
                r = verify_unweighted_theorem(max_n, tol, {}, threads);
            }
            py::list out;
            for (const auto& c : r.counterexamples) {
                py::dict d;
                d["n"] = c.n;
                d["mask"] = c.mask;
                d["embeddable"] = c.embeddable;
                d["class"] = std::string(tag_name(c.tag));
                d["lambda_max"] = c.lambda_max;
                out.append(d);
            }
            py::dict d;
            d["counterexamples"] = out;
            d["masks_scanned"] = r.masks_scanned;
            d["graphs_checked"] = r.graphs_checked;
            return d;
        },
        py::arg("max_n") = kMaxTheoremVertices, py::arg("tol") = kDefaultTol, py::arg("threads") = 0u);

    // geometric spectrum
    m.def("classic_lambda2", &classic_lambda2, py::arg("graph"));
    m.def("sparsest_cut_oracle", &sparsest_cut_oracle, py::arg("graph"));
    m.def(
        "normalized_laplacian", [](const WeightedGraph& g) { return normalized_laplacian(g).matrix(); },
        py::arg("graph"));
    m.def(
        "geometric_rayleigh",
        [](const WeightedGraph& g, const MetricSpace& x, std::vector<int> f) {
            return geometric_rayleigh(HarmonicMap(g, x, std::move(f)));
        },
        py::arg("graph"), py::arg("target"), py::arg("f"));
    m.def(
        "geometric_fiedler",
        [](const WeightedGraph& g, const MetricSpace& x, std::uint64_t budget) {
            const auto r = geometric_fiedler(g, x, budget);
            py::dict d;
            d["value"] = r.value;
            d["argmin"] = r.argmin;
            d["maps_searched"] = r.maps_searched;
            return d;
        },
        py::arg("graph"), py::arg("target"), py::arg("budget") = kDefaultMapBudget);
    m.def(
        "orthogonality_defect",
        [](const WeightedGraph& g, const MetricSpace& x, std::vector<int> f1, std::vector<int> f2) {
            return orthogonality_defect(HarmonicMap(g, x, std::move(f1)), HarmonicMap(g, x, std::move(f2)));
        },
        py::arg("graph"), py::arg("target"), py::arg("f1"), py::arg("f2"));
    m.def(
        "orthogonality_defect_real",
        [](const WeightedGraph& g, const std::vector<double>& f1, const std::vector<double>& f2) {
            const auto maps = real_valued_maps(g, f1, f2);
            return orthogonality_defect(maps.first, maps.second);
        },
        py::arg("graph"), py::arg("f1"), py::arg("f2"));

    // families
    m.def("path", [](int n) { return generate(PathFamily{n}); }, py::arg("n"));
    m.def("cycle", [](int n) { return generate(CycleFamily{n}); }, py::arg("n"));
    m.def("complete", [](int n) { return generate(CompleteFamily{n}); }, py::arg("n"));
    m.def("claw", [] { return generate(ClawFamily{}); });
    m.def("claw_plus_edge", [] { return generate(ClawPlusEdgeFamily{}); });
    m.def(
        "configuration",
        [](const std::string& which) {
            if (which == "a") return generate(FigureOneFamily{FigureOneConfig::A});
            if (which == "b") return generate(FigureOneFamily{FigureOneConfig::B});
            if (which == "c") return generate(FigureOneFamily{FigureOneConfig::C});
            throw py::value_error("configuration must be 'a', 'b' or 'c'");
        },
        py::arg("which"));
    m.def(
        "pythagorean",
        [](std::int64_t z, std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> pairs) {
            auto p = pairs ? *pairs : pythagorean_pairs(z);
            if (p.size() < 3) throw py::value_error("need three factor pairs");
            return generate(PythagoreanK4eFamily{z, {p[0], p[1], p[2]}});
        },
        py::arg("z"), py::arg("pairs") = py::none());
    m.def("pythagorean_pairs", &pythagorean_pairs, py::arg("z"));
    m.def("snk", [](int n, int k) { return generate(SnkFamily{n, k}); }, py::arg("n"), py::arg("k"));
    m.def("random_euclidean", &random_euclidean, py::arg("n"), py::arg("dim"), py::arg("seed"));
    m.def("euclidean_metric", &euclidean_metric, py::arg("points"), py::arg("labels") = std::vector<std::string>{});
    m.def(
        "witness",
        [](const std::string& kind, int k) {
            const auto w = paper_witness({witness_kind(kind), k});
            return py::make_tuple(generate(w.family), w.vertices, w.alpha);
        },
        py::arg("kind"), py::arg("k") = 2);
}
