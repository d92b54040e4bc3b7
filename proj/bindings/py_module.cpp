#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conormal/complex.hpp"
#include "conormal/errors.hpp"
#include "conormal/homology.hpp"
#include "conormal/ktheory.hpp"
#include "conormal/orbit.hpp"
#include "conormal/poset.hpp"
#include "conormal/snf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace conormal;

namespace {

// cpp_int <-> python int, routed through decimal strings so arbitrary
// magnitudes survive.
py::int_ to_py_int(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Int to_cpp_int(const py::int_& v) {
    return Int(py::str(static_cast<py::handle>(v)).cast<std::string>());
}

IntMatrix matrix_from_rows(const std::vector<std::vector<py::int_>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != c) throw std::invalid_argument("rows have unequal lengths");
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = to_cpp_int(rows[i][j]);
    return m;
}

std::vector<std::vector<py::int_>> matrix_to_rows(const IntMatrix& m) {
    std::vector<std::vector<py::int_>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(to_py_int(m(i, j)));
    }
    return rows;
}

std::vector<py::int_> torsion_list(const AbelianGroup& g) {
    std::vector<py::int_> out;
    out.reserve(g.torsion.size());
    for (const Int& t : g.torsion) out.push_back(to_py_int(t));
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NoBoundary: return "NO_BOUNDARY";
        case Verdict::RationallyUnobstructed: return "RATIONALLY_UNOBSTRUCTED";
        case Verdict::Obstructed: return "OBSTRUCTED";
    }
    return "";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Conormal homology and rational K-theory of manifolds with embedded corners";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<AmbiguityError>(m, "AmbiguityError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    py::class_<CornerPoset>(m, "CornerPoset")
        .def_property_readonly("n", &CornerPoset::hypersurface_count,
                               "number of boundary hypersurfaces")
        .def_property_readonly("d", &CornerPoset::max_codim, "maximal codimension")
        .def_property_readonly("num_faces", [](const CornerPoset& p) { return p.faces().size(); })
        .def("face_ids",
             [](const CornerPoset& p, int codim) {
                 std::vector<std::string> ids;
                 for (const Face* f : p.faces_of_codim(codim)) ids.push_back(f->id);
                 return ids;
             },
             py::arg("codim"), "face ids of one codimension, in basis order")
        .def("serialize", [](const CornerPoset& p) { return serialize(p); })
        .def("__repr__", [](const CornerPoset& p) {
            return "<CornerPoset n=" + std::to_string(p.hypersurface_count()) +
                   " d=" + std::to_string(p.max_codim()) +
                   " faces=" + std::to_string(p.faces().size()) + ">";
        });

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def_property_readonly("free_rank", [](const AbelianGroup& g) { return g.free_rank; })
        .def_property_readonly("torsion", &torsion_list)
        .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
        .def("__str__", &AbelianGroup::str)
        .def("__repr__", [](const AbelianGroup& g) { return "<AbelianGroup " + g.str() + ">"; });

    py::class_<KTheoryReport>(m, "KTheoryReport")
        .def_readonly("k0_rank", &KTheoryReport::k0_rank)
        .def_readonly("k1_rank", &KTheoryReport::k1_rank)
        .def_readonly("periodic_even", &KTheoryReport::periodic_even)
        .def_readonly("periodic_odd", &KTheoryReport::periodic_odd)
        .def_readonly("codim_le_3", &KTheoryReport::codim_le_3)
        .def_readonly("even_torsion_free", &KTheoryReport::even_torsion_free)
        .def_readonly("product_rule", &KTheoryReport::product_rule)
        .def_readonly("torsion_caveat", &KTheoryReport::torsion_caveat)
        .def_property_readonly("verdict",
                               [](const KTheoryReport& r) { return verdict_name(r.verdict); })
        .def("__str__", &KTheoryReport::str);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("passed", &ComparisonReport::pass)
        .def_property_readonly("lines",
                               [](const ComparisonReport& r) {
                                   std::vector<py::tuple> out;
                                   for (const ComparisonLine& line : r.lines)
                                       out.push_back(py::make_tuple(line.degree, line.conormal,
                                                                    line.orbit, line.ok));
                                   return out;
                               })
        .def("__str__", &ComparisonReport::str);

    m.def("closed_manifold", &closed_manifold);
    m.def("boundary_components", &boundary_components, py::arg("p"));
    m.def("interval", &interval);
    m.def("simplex", &simplex, py::arg("k"));
    m.def("hypercube", &hypercube, py::arg("k"));
    m.def("product", &product, py::arg("a"), py::arg("b"));

    m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"),
          "parse and validate a poset file");
    m.def("serialize", &serialize, py::arg("poset"));
    m.def("validate",
          [](const CornerPoset& poset) {
              std::vector<std::pair<std::string, std::string>> out;
              for (const Violation& v : validate(poset).violations) out.emplace_back(v.rule, v.detail);
              return out;
          },
          py::arg("poset"), "list of (rule, detail) violations; empty iff valid");

    m.def("contraction_sign", &contraction_sign, py::arg("i"), py::arg("index_set"));

    m.def("homology",
          [](const CornerPoset& poset) { return full_summary(build_complex(poset)).groups; },
          py::arg("poset"), "conormal homology groups in degrees 0..d");
    m.def("betti_numbers",
          [](const CornerPoset& poset) { return full_summary(build_complex(poset)).betti; },
          py::arg("poset"), "rational Betti numbers in degrees 0..d");
    m.def("homology_report",
          [](const CornerPoset& poset) { return full_summary(build_complex(poset)).str(); },
          py::arg("poset"));

    m.def("ktheory", &ktheory, py::arg("poset"));

    m.def("crosscheck",
          [](const CornerPoset& poset, std::optional<int> ambient_degree) {
              return assert_B_isomorphism(poset, ambient_degree);
          },
          py::arg("poset"), py::arg("ambient_degree") = std::nullopt,
          "compare the conormal and orbit-cochain paths degree by degree");

    m.def("smith_normal_form",
          [](const std::vector<std::vector<py::int_>>& rows) {
              SmithDecomposition snf = smith_normal_form(matrix_from_rows(rows));
              std::vector<py::int_> diag;
              for (const Int& d : snf.diag) diag.push_back(to_py_int(d));
              return py::make_tuple(matrix_to_rows(snf.u), diag, matrix_to_rows(snf.v));
          },
          py::arg("rows"), "returns (U, invariant_factors, V) with U*M*V diagonal");

    m.attr("__version__") = "0.1.0";
}
