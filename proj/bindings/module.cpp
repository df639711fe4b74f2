// Python bindings. Terms and atoms cross the boundary as lists of constant
// names; models and tables are wrapped objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "atomlat/crossing.hpp"
#include "atomlat/decompose.hpp"
#include "atomlat/formats.hpp"
#include "atomlat/oracle.hpp"
#include "atomlat/redundancy.hpp"

namespace py = pybind11;
using namespace atomlat;

namespace {

Term term_from_names(const TablePtr& table, const std::vector<std::string>& names) {
    if (names.empty())
        throw ValueError("terms must mention at least one constant");
    CSet constants(table->size());
    for (const std::string& name : names) {
        auto index = table->index_of(name);
        if (!index)
            throw ValueError("unknown constant '" + name + "'");
        constants.set(*index);
    }
    return Term{std::move(constants)};
}

Atom atom_from_names(const TablePtr& table, const std::vector<std::string>& names) {
    return Atom{term_from_names(table, names).constants};
}

std::vector<std::string> names_of(const TablePtr& table, const CSet& set) {
    std::vector<std::string> out;
    for (uint32_t i : set.indices())
        out.push_back(table->name(i));
    return out;
}

std::vector<Duple> duples_from_pairs(
    const TablePtr& table,
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& pairs) {
    std::vector<Duple> out;
    out.reserve(pairs.size());
    for (const auto& [left, right] : pairs)
        out.push_back(Duple{term_from_names(table, left), term_from_names(table, right)});
    return out;
}

std::vector<std::vector<std::string>> atoms_as_names(const TablePtr& table,
                                                     const std::vector<Atom>& atoms) {
    std::vector<std::vector<std::string>> out;
    out.reserve(atoms.size());
    for (const Atom& phi : atoms)
        out.push_back(names_of(table, phi.ucs));
    return out;
}

using NamePair = std::pair<std::vector<std::string>, std::vector<std::string>>;

} // namespace

PYBIND11_MODULE(atomlat, m) {
    m.doc() = "atomized semilattices: order queries, full crossing, reduction, "
              "and oracle checks";

    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const GuardError&) {
            throw; // handled by the registered exception above
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<ConstantTable, std::shared_ptr<ConstantTable>>(m, "ConstantTable")
        .def(py::init([](std::vector<std::string> names) {
                 return std::const_pointer_cast<ConstantTable>(
                     intern_constants(std::move(names)));
             }),
             py::arg("names"))
        .def("__len__", &ConstantTable::size)
        .def("names", &ConstantTable::names)
        .def("__repr__", [](const ConstantTable& t) {
            return "ConstantTable(" + std::to_string(t.size()) + " constants)";
        });

    py::class_<Model>(m, "Model")
        .def("atoms",
             [](const Model& self) { return atoms_as_names(self.table(), self.atoms()); })
        .def("table", [](const Model& self) {
            return std::const_pointer_cast<ConstantTable>(self.table());
        })
        .def("term_le",
             [](const Model& self, const std::vector<std::string>& left,
                const std::vector<std::string>& right) {
                 return self.term_le(term_from_names(self.table(), left),
                                     term_from_names(self.table(), right));
             },
             py::arg("left"), py::arg("right"))
        .def("lower_segment",
             [](const Model& self, const std::vector<std::string>& term) {
                 return atoms_as_names(self.table(),
                                       self.lower_segment(term_from_names(self.table(), term)));
             },
             py::arg("term"))
        .def("discriminant",
             [](const Model& self, const NamePair& duple) {
                 return atoms_as_names(
                     self.table(),
                     self.discriminant(Duple{term_from_names(self.table(), duple.first),
                                             term_from_names(self.table(), duple.second)}));
             },
             py::arg("duple"))
        .def("is_compatible",
             [](const Model& self, const std::vector<std::string>& atom) {
                 return self.is_compatible(atom_from_names(self.table(), atom));
             },
             py::arg("atom"))
        .def("is_trivial", &Model::is_trivial)
        .def("__eq__", [](const Model& a, const Model& b) { return a == b; })
        .def("__repr__", [](const Model& self) {
            return "Model(" + std::to_string(self.atoms().size()) + " atoms over " +
                   std::to_string(self.universe()) + " constants)";
        });

    m.def(
        "new_model",
        [](const TablePtr& table, const std::vector<std::vector<std::string>>& atoms,
           bool auto_zero) {
            std::vector<Atom> parsed;
            parsed.reserve(atoms.size());
            for (const auto& names : atoms)
                parsed.push_back(atom_from_names(table, names));
            return Model::create(table, std::move(parsed), auto_zero);
        },
        py::arg("table"), py::arg("atoms"), py::arg("auto_zero") = false);

    m.def(
        "freest_model",
        [](const TablePtr& table, const std::vector<NamePair>& assertions) {
            return freest_model(table, duples_from_pairs(table, assertions));
        },
        py::arg("table"), py::arg("assertions") = std::vector<NamePair>{});

    m.def(
        "full_cross",
        [](const Model& m, const NamePair& duple) {
            return full_cross(m, Duple{term_from_names(m.table(), duple.first),
                                       term_from_names(m.table(), duple.second)});
        },
        py::arg("model"), py::arg("duple"));

    m.def(
        "full_cross_batch",
        [](const Model& m, const std::vector<NamePair>& duples) {
            return full_cross_batch(m, duples_from_pairs(m.table(), duples));
        },
        py::arg("model"), py::arg("duples"));

    m.def(
        "full_cross_omega",
        [](const Model& m, const std::vector<NamePair>& duples, unsigned guard) {
            return full_cross_omega(m, duples_from_pairs(m.table(), duples), guard);
        },
        py::arg("model"), py::arg("duples"), py::arg("guard") = kOmegaGuard);

    m.def("model_sum", &model_sum, py::arg("m"), py::arg("n"));

    m.def("freer_or_as_free", &freer_or_as_free, py::arg("m"), py::arg("n"),
          py::arg("guard") = kEnumerationGuard);

    m.def(
        "theory_equal",
        [](const Model& m, const Model& n, unsigned guard) {
            return positive_theory(m, guard) == positive_theory(n, guard);
        },
        py::arg("m"), py::arg("n"), py::arg("guard") = kEnumerationGuard);

    m.def(
        "omega",
        [](const Model& m, unsigned guard) {
            return atoms_as_names(m.table(), omega(m, guard));
        },
        py::arg("model"), py::arg("guard") = kOmegaGuard);

    m.def(
        "non_redundant_atoms",
        [](const Model& m, unsigned guard) {
            return atoms_as_names(m.table(), non_redundant_atoms(m, guard));
        },
        py::arg("model"), py::arg("guard") = kOmegaGuard);

    m.def(
        "is_redundant",
        [](const Model& m, const std::vector<std::string>& atom, unsigned guard) {
            return is_redundant(m, atom_from_names(m.table(), atom), guard);
        },
        py::arg("model"), py::arg("atom"), py::arg("guard") = kOmegaGuard);

    m.def("reduce_atomization", &reduce_atomization, py::arg("model"));

    m.def(
        "oracle_counterexample",
        [](const Model& m, const std::vector<NamePair>& assertions,
           unsigned guard) -> std::optional<NamePair> {
            OrderOracle oracle =
                congruence_closure(m.table(), duples_from_pairs(m.table(), assertions), guard);
            EquivResult result = oracle_equiv(m, oracle);
            if (result.equivalent)
                return std::nullopt;
            return NamePair{names_of(m.table(), result.counterexample->left.constants),
                            names_of(m.table(), result.counterexample->right.constants)};
        },
        py::arg("model"), py::arg("assertions"), py::arg("guard") = kOracleGuard,
        "None when the model matches the congruence-closure oracle for the "
        "assertions; otherwise the first disagreeing duple");

    m.def(
        "verify_subdirect",
        [](const Model& m, unsigned guard) { return verify_subdirect(m, guard); },
        py::arg("model"), py::arg("guard") = kEnumerationGuard);

    m.def(
        "subdirect_factors",
        [](const Model& m) {
            std::vector<std::vector<std::string>> out;
            for (const Factor& f : subdirect_factors(m))
                out.push_back(names_of(m.table(), f.atom.ucs));
            return out;
        },
        py::arg("model"));

    py::class_<Problem>(m, "Problem")
        .def_property_readonly(
            "table",
            [](const Problem& p) { return std::const_pointer_cast<ConstantTable>(p.table); })
        .def_property_readonly("assertions",
                               [](const Problem& p) {
                                   std::vector<NamePair> out;
                                   for (const Duple& r : p.assertions)
                                       out.emplace_back(names_of(p.table, r.left.constants),
                                                        names_of(p.table, r.right.constants));
                                   return out;
                               })
        .def_property_readonly("queries", [](const Problem& p) {
            std::vector<NamePair> out;
            for (const Duple& r : p.queries)
                out.emplace_back(names_of(p.table, r.left.constants),
                                 names_of(p.table, r.right.constants));
            return out;
        });

    m.def("parse_problem", &parse_problem, py::arg("text"));

    m.def(
        "serialize_model",
        [](const Model& m, const std::string& style) {
            if (style != "text" && style != "structured")
                throw ValueError("style must be 'text' or 'structured'");
            return serialize_model(m, style == "text" ? SerializeStyle::text
                                                      : SerializeStyle::structured);
        },
        py::arg("model"), py::arg("style") = "structured");

    m.def("parse_model", &parse_model, py::arg("text"));

    m.def("hasse_dot", &hasse_dot, py::arg("model"), py::arg("guard") = kEnumerationGuard);

    m.attr("ENUMERATION_GUARD") = kEnumerationGuard;
    m.attr("OMEGA_GUARD") = kOmegaGuard;
    m.attr("ORACLE_GUARD") = kOracleGuard;
}
