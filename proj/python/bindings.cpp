#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extlim/diagram_io.hpp"
#include "extlim/error.hpp"
#include "extlim/fextcat.hpp"
#include "extlim/group_expr.hpp"
#include "extlim/koszul.hpp"
#include "extlim/torlab.hpp"
#include "extlim/verify.hpp"

namespace py = pybind11;
using namespace extlim;

namespace {

py::int_ to_pyint(const Int& v) {
    std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Int from_pyint(const py::int_& v) {
    py::object s = py::reinterpret_steal<py::object>(PyObject_Str(v.ptr()));
    if (!s) throw py::error_already_set();
    return Int(s.cast<std::string>());
}

IntMatrix matrix_from_python(const std::vector<std::vector<py::int_>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InputError("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = from_pyint(rows[i][j]);
    }
    return m;
}

py::list matrix_to_python(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_pyint(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict group_to_python(const FgAbGroup& g) {
    py::dict d;
    d["free_rank"] = g.free_rank();
    py::list torsion;
    for (const Int& f : g.torsion()) torsion.append(to_pyint(f));
    d["torsion"] = torsion;
    d["expr"] = format_group(g);
    return d;
}

}  // namespace

PYBIND11_MODULE(_extlim, m) {
    m.doc() = "exact derived functors and derived limits over extension categories";

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<SizeGuardError>(m, "SizeGuardError");

    m.def("group", [](const std::string& expr) { return group_to_python(parse_group(expr)); },
          py::arg("expr"), "Invariant factors of a group expression such as 'Z^2+Z/4+Z/6'.");

    m.def("hnf", [](const std::vector<std::vector<py::int_>>& rows) {
        return matrix_to_python(hnf(matrix_from_python(rows)).basis);
    }, py::arg("matrix"), "Column-style Hermite basis of the column lattice.");

    m.def("snf", [](const std::vector<std::vector<py::int_>>& rows) {
        SmithDecomposition s = snf(matrix_from_python(rows));
        py::dict d;
        d["U"] = matrix_to_python(s.U);
        d["D"] = matrix_to_python(s.D);
        d["V"] = matrix_to_python(s.V);
        return d;
    }, py::arg("matrix"), "Smith decomposition D = U*M*V.");

    m.def("kernel_basis", [](const std::vector<std::vector<py::int_>>& rows) {
        return matrix_to_python(kernel_basis(matrix_from_python(rows)).basis);
    }, py::arg("matrix"));

    m.def("solve", [](const std::vector<std::vector<py::int_>>& rows,
                      const std::vector<py::int_>& rhs) -> py::object {
        std::vector<Int> b;
        for (const auto& v : rhs) b.push_back(from_pyint(v));
        auto x = solve(matrix_from_python(rows), b);
        if (!x) return py::none();
        py::list out;
        for (const Int& v : *x) out.append(to_pyint(v));
        return out;
    }, py::arg("matrix"), py::arg("rhs"), "Integer solution of M x = b, or None.");

    m.def("tor", [](const std::vector<std::string>& exprs, std::size_t arity,
                    const std::string& method) {
        if (arity > 0) {
            if (exprs.size() != 1 || arity < 2) throw InputError("arity needs one group, n >= 2");
            FgAbGroup a = parse_group(exprs[0]);
            FreePresentation p = canonical_presentation(a);
            if (method == "resolution") return group_to_python(tor_bracket(a, arity));
            if (method == "kunneth") return group_to_python(kunneth_iterate(a, arity));
            if (method == "intersection")
                return group_to_python(tor_bracket_intersection(p, arity).group);
            if (method == "equalizer")
                return group_to_python(equalizer_realization(p, arity).group);
            throw InputError("unknown method '" + method + "'");
        }
        std::vector<FgAbGroup> args;
        for (const std::string& e : exprs) args.push_back(parse_group(e));
        if (args.size() < 2) throw InputError("tor needs at least two groups or arity");
        return group_to_python(tor_multi(args, args.size() - 1));
    }, py::arg("exprs"), py::arg("arity") = 0, py::arg("method") = "resolution",
       "Top multi-Tor of the listed groups, or Tor^[arity] of a single group.");

    m.def("derived", [](const std::string& functor, std::size_t n, std::size_t i,
                        const std::string& expr, const std::string& via) {
        FreePresentation p = canonical_presentation(parse_group(expr));
        if (via == "kernel") {
            if (i + 1 != n) throw InputError("via='kernel' computes only i = n-1");
            return group_to_python(functor == "sp" ? top_derived_sp_via_kernel(p, n).group
                                                   : top_derived_lambda_via_kernel(p, n).group);
        }
        return group_to_python(functor == "sp" ? derived_sp(p, n, i)
                                               : derived_lambda(p, n, i));
    }, py::arg("functor"), py::arg("n"), py::arg("i"), py::arg("expr"),
       py::arg("via") = "koszul", "L_i SP^n or L_i Λ^n at the canonical presentation.");

    m.def("lim", [](const std::string& diagram_json, std::size_t degree, bool normalized) {
        AbDiagram d = load_diagram_json(diagram_json);
        return group_to_python(lim_n(d, degree, normalized));
    }, py::arg("diagram_json"), py::arg("degree") = 0, py::arg("normalized") = true,
       "lim^degree of a JSON diagram (degree <= 2).");

    m.def("extcat_lim", [](const std::string& recipe_json, std::size_t degree) {
        ParsedRecipe pr = parse_recipe_json(recipe_json);
        TruncatedDiagram td = truncated_diagram(pr.base, pr.tag, pr.recipe);
        return group_to_python(lim_n(td.diagram, degree));
    }, py::arg("recipe_json"), py::arg("degree") = 0,
       "lim^degree of a truncated extension-category recipe.");

    m.def("verify", [](const std::string& suite) {
        py::list out;
        auto results = suite == "all"
                           ? extlim::verify::run_all()
                           : std::vector<extlim::verify::CriterionResult>{
                                 extlim::verify::run_suite(suite)};
        for (const auto& r : results) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["seconds"] = r.seconds;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }, py::arg("suite") = "all", "Run acceptance suites; returns per-criterion results.");

    m.def("suites", [] { return extlim::verify::suite_names(); });
}
