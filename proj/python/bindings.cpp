#include "bracekit/brace_enumeration.hpp"
#include "bracekit/error.hpp"
#include "bracekit/io.hpp"
#include "bracekit/presets.hpp"
#include "bracekit/reports.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bracekit;

namespace {

std::vector<std::vector<std::string>> matrix_rows(const RationalMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(to_string(m.at(r, c)));
    return rows;
}

BilinearMap tensor_from_entries(std::size_t dim,
                                const std::vector<std::tuple<int, int, int, std::string>>& entries,
                                bool antisymmetric) {
    BilinearMap t = BilinearMap::zero(dim);
    for (const auto& [i, j, k, value] : entries) {
        const Rational q = parse_rational(value);
        t.coeff(i, j, k) = q;
        if (antisymmetric) t.coeff(j, i, k) = -q;
    }
    return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and numeric computations for skew braces and post-Lie algebras";

    py::register_exception<Error>(m, "BracekitError");

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_static("from_table", &FiniteGroup::check_group, py::arg("table"))
        .def_property_readonly("order", &FiniteGroup::order)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("element_order", &FiniteGroup::element_order)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("table", &FiniteGroup::table_rows)
        .def("opposite", &FiniteGroup::opposite);

    m.def("group_preset", &group_preset, py::arg("name"));
    m.def("group_preset_names", &group_preset_names);
    m.def("cyclic_group", &cyclic_group);
    m.def("symmetric_group", &symmetric_group);
    m.def("automorphism_count",
          [](const FiniteGroup& g) { return automorphisms(g).size(); });
    m.def("holomorph", &holomorph);
    m.def("is_solvable_group", [](const FiniteGroup& g) { return is_solvable(g); });
    m.def("is_abstractly_simple", &is_abstractly_simple);
    m.def("isomorphic", &isomorphic);
    m.def("identify_group", &identify_group);

    py::class_<FiniteSkewBrace>(m, "FiniteSkewBrace")
        .def_static("verify", &FiniteSkewBrace::verify_brace, py::arg("dot"), py::arg("circ"))
        .def_property_readonly("order", &FiniteSkewBrace::order)
        .def_property_readonly("dot", &FiniteSkewBrace::dot)
        .def_property_readonly("circ", &FiniteSkewBrace::circ)
        .def("lambda_map", &FiniteSkewBrace::lambda_map)
        .def("star", &FiniteSkewBrace::star);

    m.def("classify_triviality",
          [](const FiniteSkewBrace& b) { return to_string(classify_triviality(b)); });
    m.def("all_ideals", &all_ideals, py::arg("brace"), py::arg("order_bound") = 60);
    m.def("quotient", &quotient);
    m.def("brace_derived_series", [](const FiniteSkewBrace& b) {
        auto s = brace_derived_series(b);
        return py::make_tuple(s.chain, s.solvable);
    });
    m.def("enumerate_braces", &enumerate_braces, py::arg("additive"),
          py::arg("order_bound") = 60);
    m.def("count_braces", &count_braces, py::arg("additive"), py::arg("order_bound") = 60);
    m.def("braces_isomorphic", &braces_isomorphic);

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_static(
            "from_constants",
            [](std::size_t dim, const std::vector<std::tuple<int, int, int, std::string>>& entries) {
                return LieAlgebra(tensor_from_entries(dim, entries, true));
            },
            py::arg("dim"), py::arg("entries"),
            "entries: (i, j, k, 'p/q') with 0-based i < j; antisymmetric completion implied")
        .def_property_readonly("dim", &LieAlgebra::dim)
        .def("is_abelian", &LieAlgebra::is_abelian);

    m.def("sl2", &sl2);
    m.def("so3", &so3);
    m.def("check_jacobi", [](const LieAlgebra& L) { check_jacobi(L); });
    m.def("is_semisimple", &is_semisimple);
    m.def("is_solvable_algebra", [](const LieAlgebra& L) { return is_solvable(L); });
    m.def("is_simple_algebra", &is_simple_algebra);
    m.def("killing_form", [](const LieAlgebra& L) { return matrix_rows(killing_form(L)); });
    m.def("simple_summand_count", [](const LieAlgebra& L) {
        auto r = simple_summand_count(L);
        return py::make_tuple(r.count, r.non_split);
    });
    m.def("all_ideals_lowdim", [](const LieAlgebra& L) {
        auto list = all_ideals_lowdim(L);
        std::vector<std::vector<std::vector<std::string>>> ideals;
        for (const auto& s : list.subspaces) ideals.push_back(matrix_rows(s.basis()));
        return py::make_tuple(ideals, list.continuous_family);
    });

    py::class_<PostLieAlgebra>(m, "PostLieAlgebra")
        .def(py::init([](const LieAlgebra& dot,
                         const std::vector<std::tuple<int, int, int, std::string>>& entries) {
                 return PostLieAlgebra(dot, tensor_from_entries(dot.dim(), entries, false));
             }),
             py::arg("dot"), py::arg("triangle_entries"))
        .def_property_readonly("dim", &PostLieAlgebra::dim)
        .def_property_readonly("dot", &PostLieAlgebra::dot)
        .def_property_readonly("circ", &PostLieAlgebra::circ);

    m.def("a11_post_lie", &a11_post_lie);
    m.def("check_postlie", [](const PostLieAlgebra& P) { check_postlie(P); });
    m.def("is_simple_brace_infinitesimal", &is_simple_brace_infinitesimal);
    m.def("rigidity_classify", [](const PostLieAlgebra& P) {
        auto r = rigidity_classify(P);
        const char* name = r.result == RigidityCase::case_i
                               ? "case_i"
                               : (r.result == RigidityCase::case_ii ? "case_ii" : "violation");
        return py::make_tuple(name, r.detail);
    });

    py::class_<GroupLaw>(m, "GroupLaw")
        .def_property_readonly("dim", &GroupLaw::dim)
        .def("apply", &GroupLaw::apply)
        .def("inverse", &GroupLaw::inverse);

    m.def("law_preset", &law_preset);
    m.def("brace_law_preset", &brace_law_preset);
    m.def("brace_law_preset_names", &brace_law_preset_names);
    m.def("parse_group_law", [](const std::string& text) { return io::read_grouplaw(text); });
    m.def(
        "check_brace_numeric",
        [](const GroupLaw& dot, const GroupLaw& circ, std::size_t samples, double tol,
           std::uint64_t seed) {
            auto r = check_brace_numeric(dot, circ, samples, tol, seed);
            py::dict out;
            out["brace_residual"] = r.brace_residual;
            out["dot_associativity_residual"] = r.dot_report.associativity_residual;
            out["circ_associativity_residual"] = r.circ_report.associativity_residual;
            out["pass"] = r.pass;
            return out;
        },
        py::arg("dot"), py::arg("circ"), py::arg("samples") = 1000, py::arg("tol") = 1e-8,
        py::arg("seed") = 42);
    m.def("lambda_numeric", &lambda_numeric);
    m.def("extract_and_rationalize", [](const GroupLaw& dot, const GroupLaw& circ,
                                        std::size_t max_den) {
        auto tri = rationalize(extract_triangle(dot, circ), max_den, 1e-6);
        auto dotc = rationalize(extract_bracket(dot), max_den, 1e-6);
        PostLieAlgebra P{LieAlgebra(dotc), tri};
        check_postlie(P);
        return P;
    });

    m.def("cli_run", [](const std::vector<std::string>& args) {
        auto r = cli::run(args);
        return py::make_tuple(r.exit_code, r.report);
    });
}
