#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric/delpezzo.hpp"
#include "toric/embedding.hpp"
#include "toric/enumerate.hpp"
#include "toric/errors.hpp"
#include "toric/report.hpp"
#include "toric/tables.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

using Vertices = std::vector<std::pair<Int, Int>>;

LatticePolygon polygon_of(const Vertices& vs) {
    std::vector<LatticePoint> pts;
    for (const auto& [x, y] : vs) pts.push_back({x, y});
    return LatticePolygon::from_vertices(std::move(pts));
}

Vertices vertices_of(const LatticePolygon& q) {
    Vertices out;
    for (const auto& v : q.vertices()) out.emplace_back(v.x, v.y);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Toric log del Pezzo surfaces with one singularity";

    py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<singularity_count_error>(m, "SingularityCountError", PyExc_ValueError);
    py::register_exception<consistency_error>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("canonical_polygon", [](int k, Int p) { return vertices_of(canonical_polygon(k, p)); }, py::arg("k"),
          py::arg("p"));
    m.def("checked_q2_polygon", [](Int p) { return vertices_of(checked_q2_polygon(p)); }, py::arg("p"));
    m.def("normalize_polygon", [](const Vertices& vs) { return vertices_of(polygon_of(vs)); }, py::arg("vertices"));
    m.def("is_ldp", [](const Vertices& vs) { return is_ldp(polygon_of(vs)); }, py::arg("vertices"));

    m.def(
        "analyze_json",
        [](const Vertices& vs, bool embedding) { return report_to_json(make_report(ldp_analyze(polygon_of(vs)), embedding)); },
        py::arg("vertices"), py::arg("embedding") = true);

    m.def(
        "classify",
        [](const Vertices& vs) {
            const Classification c = classify_one_singularity(polygon_of(vs));
            py::dict d;
            d["k"] = c.k;
            d["p"] = c.p;
            d["transform"] = std::vector<Int>{c.transform.a(), c.transform.b(), c.transform.c(), c.transform.d()};
            d["mu"] = c.mu;
            d["target"] = c.target == ClassTarget::canonical ? "Q" : "Qcheck";
            return d;
        },
        py::arg("vertices"));

    m.def(
        "quadrics",
        [](const Vertices& vs, bool verify_rank) {
            MinimalSystemOptions opt;
            opt.verify_rank = verify_rank;
            const auto r = minimal_system(embedding_data(ldp_analyze(polygon_of(vs))), opt);
            std::vector<std::string> lines;
            for (const auto& g : r.generators) lines.push_back(format_binomial(g));
            py::dict d;
            d["delta"] = r.delta;
            d["degree"] = r.degree;
            d["genus"] = r.genus;
            d["beta"] = r.beta;
            d["rank"] = r.rank ? py::cast(*r.rank) : py::none();
            d["generators"] = lines;
            return d;
        },
        py::arg("vertices"), py::arg("verify_rank") = true);

    m.def(
        "span_membership",
        [](const Vertices& vs, const std::vector<std::string>& binomials) {
            const auto r = minimal_system(embedding_data(ldp_analyze(polygon_of(vs))));
            const SpanChecker span(r);
            std::vector<bool> out;
            for (const auto& b : binomials) out.push_back(span.contains(parse_binomial(b)));
            return out;
        },
        py::arg("vertices"), py::arg("binomials"));

    m.def(
        "table_formulas",
        [](int k, Int p) {
            const TableRow t = table_formulas(k, p);
            py::dict d;
            d["degree"] = t.degree;
            d["delta"] = t.delta;
            d["beta"] = t.beta;
            d["genus"] = t.genus;
            d["boundary"] = t.boundary;
            return d;
        },
        py::arg("k"), py::arg("p"));

    m.def(
        "table_cell",
        [](int k, Int p) {
            const TableCell c = compute_table_cell(k, p);
            py::dict d;
            d["degree"] = c.computed.degree;
            d["delta"] = c.computed.delta;
            d["beta"] = c.computed.beta;
            d["genus"] = c.computed.genus;
            d["boundary"] = c.computed.boundary;
            d["index"] = c.index;
            d["mismatches"] = c.mismatches;
            return d;
        },
        py::arg("k"), py::arg("p"));

    m.def(
        "enumerate_one_singularity",
        [](Int bound, bool reverse) {
            EnumerationOptions opt;
            opt.reverse_order = reverse;
            const auto res = enumerate_one_singularity(bound, opt);
            py::list classes;
            for (const auto& c : res.classes) {
                py::dict d;
                d["k"] = c.k;
                d["p"] = c.p;
                d["count"] = c.count;
                d["representative"] = vertices_of(c.representative);
                classes.append(d);
            }
            py::dict d;
            d["polygons_found"] = res.polygons_found;
            d["classes"] = classes;
            d["failures"] = res.failures;
            return d;
        },
        py::arg("bound"), py::arg("reverse") = false);

    m.def("index_parity_check", &index_parity_check, py::arg("ell"));
}
