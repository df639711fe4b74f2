#pragma once

#include <vector>

#include "atomlat/model.hpp"

namespace atomlat {

// One two-element factor of the subdirect decomposition, indexed by a
// non-zero atom of the model.
struct Factor {
    Atom atom;
};

// One factor per atom other than the zero atom. A trivial model (only the
// zero atom) has a degenerate decomposition and raises ValueError.
std::vector<Factor> subdirect_factors(const Model& m);

// The image of t in the two-element factor: 1 when the factor's atom lies
// below t, else 0.
int factor_project(const Factor& f, const Term& t);

// Exhaustively confirms the subdirect embedding: factor tuples are equal
// exactly for terms the model identifies, and the componentwise tuple order
// is the model order.
bool verify_subdirect(const Model& m, unsigned guard = kEnumerationGuard);

} // namespace atomlat
