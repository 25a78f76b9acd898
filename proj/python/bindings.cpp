// Python bindings for the main library operations. Matrices cross the
// boundary as (m, n, grid) with integer or "p/q" string cells; every value
// returned to python is exact (strings for scalars, never floats).

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "glmn/error.hpp"
#include "glmn/io.hpp"
#include "glmn/jordan.hpp"
#include "glmn/osp.hpp"
#include "glmn/sl2.hpp"
#include "glmn/superjordan.hpp"

namespace py = pybind11;
using namespace glmn;

namespace {

Rational cell_to_rational(const py::handle& cell) {
    const std::string text = py::str(cell);
    const auto parsed = parse_rational(text);
    if (!parsed) {
        throw Error("cannot parse matrix cell '" + text + "'");
    }
    return *parsed;
}

SuperMatrix matrix_from_python(int m, int n, const py::sequence& grid) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : grid) {
        std::vector<Rational> cells;
        for (const auto& cell : py::cast<py::sequence>(row)) {
            cells.push_back(cell_to_rational(cell));
        }
        rows.push_back(std::move(cells));
    }
    return SuperMatrix::from_grid(m, n, rows);
}

std::vector<std::vector<std::string>> matrix_entries(const SuperMatrix& g) {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < g.dim(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < g.dim(); ++j) {
            row.push_back(to_string(g.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Parity parity_from_string(const std::string& text) {
    if (text == "even") {
        return Parity::Even;
    }
    if (text == "odd") {
        return Parity::Odd;
    }
    throw Error("parity must be 'even' or 'odd', got '" + text + "'");
}

std::vector<SuperJordanBlock> blocks_from_python(
    const std::vector<std::pair<int, std::string>>& blocks) {
    std::vector<SuperJordanBlock> out;
    for (const auto& [size, parity] : blocks) {
        out.push_back(SuperJordanBlock{size, parity_from_string(parity)});
    }
    return out;
}

std::vector<std::pair<int, std::string>> blocks_to_python(
    const std::vector<SuperJordanBlock>& blocks) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& b : blocks) {
        out.emplace_back(b.size, to_string(b.generator_parity));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_glmn, module) {
    module.doc() = "Exact arithmetic for odd nilpotent elements of gl(m|n)";

    py::register_exception<Error>(module, "Error", PyExc_RuntimeError);

    py::class_<SuperMatrix>(module, "SuperMatrix")
        .def(py::init(&matrix_from_python), py::arg("m"), py::arg("n"), py::arg("entries"))
        .def_static("zero", &SuperMatrix::zero, py::arg("m"), py::arg("n"))
        .def_static("identity", &SuperMatrix::identity, py::arg("m"), py::arg("n"))
        .def_property_readonly("m", &SuperMatrix::even_dim)
        .def_property_readonly("n", &SuperMatrix::odd_dim)
        .def("dim", &SuperMatrix::dim)
        .def("entry",
             [](const SuperMatrix& g, int i, int j) { return to_string(g.at(i, j)); })
        .def("entries", &matrix_entries)
        .def("is_zero", &SuperMatrix::is_zero)
        .def("parity",
             [](const SuperMatrix& g) -> py::object {
                 const auto p = parity_of(g);
                 if (!p) {
                     return py::none();
                 }
                 return py::str(to_string(*p));
             })
        .def(py::self == py::self)
        .def("__repr__",
             [](const SuperMatrix& g) {
                 return "SuperMatrix(m=" + std::to_string(g.even_dim()) +
                        ", n=" + std::to_string(g.odd_dim()) + ")";
             })
        .def("__str__", &matrix_to_text);

    module.def("supercommutator", &supercommutator, py::arg("x"), py::arg("y"));
    module.def("supertrace",
               [](const SuperMatrix& g) { return to_string(supertrace(g)); });
    module.def("is_nilpotent", &is_nilpotent);
    module.def("rank", &rank);
    module.def("inverse", &inverse);
    module.def("conjugate", &conjugate, py::arg("g"), py::arg("p"));

    py::class_<OrbitParams>(module, "OrbitParams")
        .def_static(
            "validate",
            [](int m, int n, const std::vector<int>& k, const std::vector<int>& column_marked,
               const std::vector<int>& row_marked, int s) {
                return OrbitParams::validate(
                    m, n, k, std::set<int>(column_marked.begin(), column_marked.end()),
                    std::set<int>(row_marked.begin(), row_marked.end()), s);
            },
            py::arg("m"), py::arg("n"), py::arg("k") = std::vector<int>{},
            py::arg("column_marked") = std::vector<int>{},
            py::arg("row_marked") = std::vector<int>{}, py::arg("s") = 0)
        .def_property_readonly("m", &OrbitParams::even_dim)
        .def_property_readonly("n", &OrbitParams::odd_dim)
        .def_property_readonly("k", &OrbitParams::k)
        .def_property_readonly("s", &OrbitParams::tail)
        .def_property_readonly("column_marked",
                               [](const OrbitParams& p) {
                                   return std::vector<int>(p.column_marked().begin(),
                                                           p.column_marked().end());
                               })
        .def_property_readonly("row_marked",
                               [](const OrbitParams& p) {
                                   return std::vector<int>(p.row_marked().begin(),
                                                           p.row_marked().end());
                               })
        .def(py::self == py::self)
        .def("__repr__", &params_to_text);

    module.def("representative", &representative);
    module.def("square", &square);
    module.def("enumerate_params", &enumerate_params, py::arg("m"), py::arg("n"));

    module.def("build_H", &build_H);
    module.def("build_F", &build_F);
    module.def("sl2_triple_for", [](const OrbitParams& p) {
        const Sl2Triple t = sl2_triple_for(p);
        return py::make_tuple(t.H, t.E, t.F);
    });

    module.def("jordan_matrix",
               [](const std::vector<int>& parts) { return jordan_matrix(Partition(parts)); });
    module.def("partition_of_nilpotent",
               [](const SuperMatrix& N) { return partition_of_nilpotent(N).parts(); });
    module.def("sl2_triple_for_partition", [](const std::vector<int>& parts) {
        const Sl2Triple t = sl2_triple_for_partition(Partition(parts));
        return py::make_tuple(t.H, t.E, t.F);
    });
    module.def("jordan_basis", &jordan_basis);

    py::class_<SuperJordanType>(module, "SuperJordanType")
        .def_property_readonly(
            "blocks", [](const SuperJordanType& t) { return blocks_to_python(t.blocks); })
        .def_property_readonly("basis",
                               [](const SuperJordanType& t) { return t.basis; })
        .def("__repr__", [](const SuperJordanType& t) {
            std::string out = "SuperJordanType(";
            for (std::size_t i = 0; i < t.blocks.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                out += "(" + std::to_string(t.blocks[i].size) + ", " +
                       to_string(t.blocks[i].generator_parity) + ")";
            }
            return out + ")";
        });

    module.def("super_jordan_matrix",
               [](const std::vector<std::pair<int, std::string>>& blocks, int m, int n) {
                   return super_jordan_matrix(blocks_from_python(blocks), m, n);
               });
    module.def("superjordan_decompose", &superjordan_decompose);
    module.def("block_sizes", [](const SuperJordanType& t) {
        const auto sizes = block_sizes(t);
        return std::vector<int>(sizes.begin(), sizes.end());
    });
    module.def("params_from_type", &params_from_type);
    module.def("params_from_blocks",
               [](const std::vector<std::pair<int, std::string>>& blocks) {
                   return params_from_blocks(blocks_from_python(blocks));
               });

    module.def("odd_f", &odd_f, py::arg("e"), py::arg("F"));
    module.def("is_embeddable_params", &is_embeddable_params);
    module.def("is_embeddable_matrix", &is_embeddable_matrix);
    module.def("embeddability_violations", &embeddability_violations);
    module.def("construct_osp12", [](const OrbitParams& p) {
        const Osp12Quintuple q = construct_osp12(p);
        return py::make_tuple(q.e, q.f, q.H, q.E, q.F);
    });
    module.def("verify_osp12",
               [](const SuperMatrix& e, const SuperMatrix& f, const SuperMatrix& H,
                  const SuperMatrix& E, const SuperMatrix& F) {
                   const RelationReport report = verify_osp12({e, f, H, E, F});
                   std::vector<std::pair<std::string, bool>> out;
                   for (const auto& check : report.checks) {
                       out.emplace_back(check.name, check.holds);
                   }
                   return out;
               });
}
