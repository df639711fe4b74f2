#pragma once

#include <string>
#include <vector>

#include "atomlat/model.hpp"

namespace atomlat {

// A parsed problem file: the declared universe, the duples to make positive,
// and the duples to classify.
struct Problem {
    TablePtr table;
    std::vector<Duple> assertions;
    std::vector<Duple> queries;
};

// Line-oriented problem grammar ('#' starts a comment):
//
//   constants: a b c
//   assert: a + b <= c
//   query: a <= b
//
// One constants line first, then any mix of assert/query lines. Names match
// [A-Za-z_][A-Za-z0-9_]*. Duplicate assertions are dropped, keeping the first
// occurrence. Raises ParseError with a 1-based line/column.
Problem parse_problem(const std::string& text);

// Canonical text for a problem; parse_problem of the output reproduces the
// value exactly.
std::string serialize_problem(const Problem& problem);

enum class SerializeStyle { text, structured };

// text: one "atom {a,b}" line per atom in (size, lex) order.
// structured: a single-line JSON document {"atoms": [...], "constants": [...]},
// self-contained and byte-stable across runs.
std::string serialize_model(const Model& m, SerializeStyle style);

// Reads the structured style back, table included.
Model parse_model(const std::string& text);

// Reads text-style atom lines against an existing table.
std::vector<Atom> parse_model_atoms(const TablePtr& table, const std::string& text);

// DOT digraph of the distinct elements, one node per equivalence class
// labelled by its minimal term, with edges for the covering relation.
std::string hasse_dot(const Model& m, unsigned guard = kEnumerationGuard);

std::string term_to_string(const ConstantTable& table, const Term& t);
std::string atom_to_string(const ConstantTable& table, const Atom& phi);

} // namespace atomlat
