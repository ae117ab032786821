#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotdef/error.hpp"
#include "knotdef/records.hpp"

namespace py = pybind11;
using namespace knotdef;

namespace pybind11::detail {

// Arbitrary-precision integers cross the boundary as Python ints via their decimal text.
template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool convert) {
        if (!src) return false;
        if (!PyLong_Check(src.ptr())) {
            if (!convert || !PyIndex_Check(src.ptr())) return false;
        }
        object as_int = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
        if (!as_int) {
            PyErr_Clear();
            return false;
        }
        value = BigInt(str(as_int).cast<std::string>());
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using Rows = std::vector<std::vector<BigInt>>;

IntMatrix to_matrix(const Rows& rows) { return IntMatrix::from_rows(rows); }

SeifertMatrix to_seifert(const Rows& rows) { return validate(to_matrix(rows)); }

Rows from_matrix(const IntMatrix& m) { return m.rows(); }

std::vector<std::pair<int, BigInt>> from_poly(const LaurentPoly& p) { return p.pairs(); }

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

BraidWord to_braid(const std::vector<int>& letters, std::optional<int> strands) {
    return BraidWord(letters, strands);
}

CylindricalCurve to_curve(const py::object& vertices) {
    Json j;
    j["vertices"] = from_python(vertices);
    return curve_from_json(j);
}

std::string rational_text(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::vector<std::array<std::string, 3>> curve_vertices(const CylindricalCurve& c) {
    std::vector<std::array<std::string, 3>> out;
    for (const auto& q : c.vertices()) out.push_back({rational_text(q.r), rational_text(q.theta), rational_text(q.z)});
    return out;
}

LinkingOptions lk_options(int max_segments) {
    LinkingOptions o;
    o.max_segments = max_segments;
    return o;
}

}  // namespace

PYBIND11_MODULE(_knotdef, m) {
    m.doc() = "Exact knot invariants, definiteness certificates and periodicity checks";
    m.attr("__version__") = KNOTDEF_VERSION;

    static PyObject* error_type = PyErr_NewException("knotdef.KnotdefError", PyExc_ValueError, nullptr);
    m.attr("KnotdefError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error_type)(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type, exc.ptr());
        }
    });

    m.def("det", [](const Rows& rows) { return det(to_matrix(rows)); }, py::arg("matrix"),
          "Exact determinant of a square integer matrix.");
    m.def(
        "inertia",
        [](const Rows& rows) {
            const Inertia in = inertia(to_matrix(rows));
            return py::make_tuple(in.n_plus, in.n_zero, in.n_minus);
        },
        py::arg("matrix"), "(n_plus, n_zero, n_minus) of a symmetric integer matrix.");
    m.def(
        "classify_form", [](const Rows& rows) { return std::string(to_string(classify_form(to_matrix(rows)))); },
        py::arg("matrix"));
    m.def(
        "direct_sum",
        [](const std::vector<Rows>& blocks) {
            std::vector<IntMatrix> ms;
            for (const auto& b : blocks) ms.push_back(to_matrix(b));
            return from_matrix(direct_sum(ms));
        },
        py::arg("blocks"));

    m.def("validate", [](const Rows& v) { return from_matrix(to_seifert(v).matrix()); }, py::arg("seifert_matrix"),
          "Returns the matrix unchanged if it is a valid knot Seifert matrix; raises otherwise.");
    m.def("symmetrize", [](const Rows& v) { return from_matrix(symmetrize(to_seifert(v))); }, py::arg("seifert_matrix"));
    m.def("signature", [](const Rows& v) { return signature(to_seifert(v)); }, py::arg("seifert_matrix"));
    m.def("surface_genus", [](const Rows& v) { return surface_genus(to_seifert(v)); }, py::arg("seifert_matrix"));
    m.def("alexander_polynomial", [](const Rows& v) { return from_poly(alexander_polynomial(to_seifert(v))); },
          py::arg("seifert_matrix"), "Normalized Alexander polynomial as ascending (exponent, coefficient) pairs.");
    m.def("alexander_width", [](const Rows& v) { return alexander_width(to_seifert(v)); }, py::arg("seifert_matrix"));
    m.def(
        "certify_definite",
        [](const Rows& v, bool minimal_genus_asserted) {
            return to_python(to_json(certify_definite(to_seifert(v), minimal_genus_asserted)));
        },
        py::arg("seifert_matrix"), py::arg("minimal_genus_asserted") = false);

    m.def(
        "parse_braid",
        [](const std::string& text) {
            const BraidWord b = parse_braid(text);
            return py::make_tuple(b.letters(), b.strands());
        },
        py::arg("text"), "Returns (letters, strands).");
    m.def(
        "seifert_matrix_from_braid",
        [](const std::vector<int>& letters, std::optional<int> strands) {
            return from_matrix(seifert_matrix_from_braid(to_braid(letters, strands)).matrix());
        },
        py::arg("letters"), py::arg("strands") = py::none());
    m.def(
        "burau_alexander",
        [](const std::vector<int>& letters, std::optional<int> strands) {
            return from_poly(burau_alexander(to_braid(letters, strands)));
        },
        py::arg("letters"), py::arg("strands") = py::none());

    m.def(
        "check_theorem",
        [](const Rows& quotient, int p, bool minimal_genus_asserted) {
            return to_python(to_json(check_theorem(make_periodic_model(to_seifert(quotient), p), minimal_genus_asserted)));
        },
        py::arg("quotient"), py::arg("period"), py::arg("minimal_genus_asserted") = false);

    m.def(
        "knot_report", [](const py::object& record) { return to_python(knot_report(record_from_json(from_python(record)))); },
        py::arg("record"), "Full report for a record dict such as {'name': 'trefoil', 'braid': [1, 1, 1]}.");

    m.def(
        "linking_number",
        [](const py::object& a, const py::object& b, int max_segments) {
            return linking_number(to_curve(a), to_curve(b), lk_options(max_segments)).value;
        },
        py::arg("a"), py::arg("b"), py::arg("max_segments") = 1 << 14,
        "Linking number of two closed curves given as [[r, theta_turns, z], ...] vertex lists.");
    m.def(
        "lift_curve",
        [](const py::object& c, int p) {
            std::vector<std::vector<std::array<std::string, 3>>> out;
            for (const auto& comp : lift_curve(to_curve(c), p)) out.push_back(curve_vertices(comp));
            return out;
        },
        py::arg("curve"), py::arg("period"));
    m.def(
        "check_lk_scaling",
        [](const py::object& a, const py::object& b, int p, int max_segments) {
            return to_python(to_json(check_lk_scaling(to_curve(a), to_curve(b), p, lk_options(max_segments))));
        },
        py::arg("a"), py::arg("b"), py::arg("period"), py::arg("max_segments") = 1 << 14);
    m.def(
        "check_self_lk_scaling",
        [](const py::object& a, int p, int max_segments) {
            return to_python(to_json(check_self_lk_scaling(to_curve(a), p, lk_options(max_segments))));
        },
        py::arg("a"), py::arg("period"), py::arg("max_segments") = 1 << 14);
}
