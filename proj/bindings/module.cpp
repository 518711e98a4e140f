#include "operadlab/hnf.hpp"
#include "operadlab/lll.hpp"
#include "operadlab/morphisms.hpp"
#include "operadlab/operads.hpp"
#include "operadlab/pipelines.hpp"
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace operadlab;

// The python surface works on JSON strings so the exact scalars survive the
// boundary unchanged.
namespace {

Matrix mat(const std::string& json) { return Matrix::from_json(json); }

Relation rel(const std::string& json) {
    return Relation::from_json(nlohmann::ordered_json::parse(json));
}

std::vector<Relation> rels(const std::vector<std::string>& jsons) {
    std::vector<Relation> out;
    out.reserve(jsons.size());
    for (const auto& j : jsons) out.push_back(rel(j));
    return out;
}

std::string run_pipeline_json(const std::string& name) {
    return run_pipeline(name).to_json().dump();
}

bool verify_all() {
    for (const PipelineReport& r : run_all())
        if (!r.all_pass()) return false;
    return true;
}

std::string hnf_json(const std::string& m) {
    return hnf_with_transform(mat(m)).H.to_json();
}

std::string hnf_transform_json(const std::string& m) {
    return hnf_with_transform(mat(m)).U.to_json();
}

std::string nullspace_json(const std::string& m) { return nullspace_basis(mat(m)).to_json(); }

std::string saturation_json(const std::string& m) {
    return rowspace_saturation_basis(mat(m)).to_json();
}

std::size_t rank_py(const std::string& m) { return rank(mat(m)); }

std::string lll_json(const std::string& m, const std::string& delta) {
    return lll_reduce(mat(m), parse_rational(delta)).to_json();
}

bool lattice_equal_py(const std::string& a, const std::string& b) {
    return lattice_equal(mat(a), mat(b));
}

std::string specialize_json(const std::string& m, const std::string& q0) {
    return specialize_matrix(mat(m), parse_rational(q0)).to_json();
}

bool membership_py(const std::string& basis, const std::string& v) {
    Matrix b = mat(basis), w = mat(v);
    if (w.rows() != 1) throw std::invalid_argument("candidate must be a 1-row matrix");
    return is_module_member(b, w.row(0));
}

std::string render_relation_py(const std::string& r, bool unicode) {
    return render_relation(rel(r), unicode);
}

std::vector<std::string> extract_generators_py(const std::vector<std::string>& rows,
                                               bool minimize, const std::string& mode) {
    Membership m = mode == "field" ? Membership::FIELD : Membership::RING;
    std::vector<std::string> out;
    for (const Relation& g : extract_generators(rels(rows), minimize, m).generators)
        out.push_back(g.to_json().dump());
    return out;
}

bool module_equal_py(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return module_equal(rels(a), rels(b));
}

std::string polarize_py(const std::string& r) { return polarize(rel(r)).to_json().dump(); }

std::string expand_polarized_py(const std::string& r) {
    return expand_polarized(rel(r)).to_json().dump();
}

std::string split_expand_py(const std::string& r) { return split_expand(rel(r)).to_json().dump(); }

std::string poly_mul(const std::string& a, const std::string& b) {
    return poly_to_string(parse_poly(a) * parse_poly(b));
}

std::string poly_eval_str(const std::string& p, const std::string& q0) {
    return rational_to_string(parse_poly(p).eval(parse_rational(q0)));
}

} // namespace

PYBIND11_MODULE(_operadlab, m) {
    m.doc() = "exact deformation computations for dendriform and diassociative relations";
    m.def("run_pipeline", &run_pipeline_json, py::arg("name"),
          "run a named pipeline, returning the report as JSON");
    m.def("pipeline_names", &pipeline_names);
    m.def("verify", &verify_all, "run every pipeline; true iff all checks pass");
    m.def("hnf", &hnf_json, py::arg("matrix_json"));
    m.def("hnf_transform", &hnf_transform_json, py::arg("matrix_json"));
    m.def("nullspace", &nullspace_json, py::arg("matrix_json"));
    m.def("saturation", &saturation_json, py::arg("matrix_json"));
    m.def("rank", &rank_py, py::arg("matrix_json"));
    m.def("lll_reduce", &lll_json, py::arg("matrix_json"), py::arg("delta") = "3/4");
    m.def("lattice_equal", &lattice_equal_py, py::arg("a"), py::arg("b"));
    m.def("specialize", &specialize_json, py::arg("matrix_json"), py::arg("q"));
    m.def("is_module_member", &membership_py, py::arg("basis_json"), py::arg("row_json"));
    m.def("render_relation", &render_relation_py, py::arg("relation_json"),
          py::arg("unicode") = false);
    m.def("extract_generators", &extract_generators_py, py::arg("relations_json"),
          py::arg("minimize") = false, py::arg("membership") = "ring");
    m.def("module_equal", &module_equal_py, py::arg("a"), py::arg("b"));
    m.def("polarize", &polarize_py, py::arg("relation_json"));
    m.def("expand_polarized", &expand_polarized_py, py::arg("relation_json"));
    m.def("split_expand", &split_expand_py, py::arg("relation_json"));
    m.def("poly_mul", &poly_mul, py::arg("a"), py::arg("b"));
    m.def("poly_eval", &poly_eval_str, py::arg("p"), py::arg("q"));
}
