#pragma once

#include <optional>
#include <vector>

#include "atomlat/model.hpp"

namespace atomlat {

// The pinning term of an atom joins every constant outside its segment; the
// pinning duples (c, pinning term), one per segment constant, are the hardest
// duples the atom discriminates. The zero atom has no pinning term.
struct PinningInfo {
    Atom atom;
    std::optional<Term> pinning_term;
    std::vector<Duple> pinning_duples;
};

PinningInfo pinning(const TablePtr& table, const Atom& phi);

// Every atom compatible with the model, in (size, lex) order. Enumerates all
// 2^|C|-1 candidate segments, hence guarded.
std::vector<Atom> omega(const Model& m, unsigned guard = kOmegaGuard);

// phi is redundant when it equals the join of other compatible atoms; it is
// weakly redundant when every constant of its segment is covered by a
// narrower compatible atom. At a finite universe the two coincide. Both
// require phi itself to be compatible (ValueError otherwise).
bool is_redundant(const Model& m, const Atom& phi, unsigned guard = kOmegaGuard);
bool is_weakly_redundant(const Model& m, const Atom& phi, unsigned guard = kOmegaGuard);

// The compatible atoms that are not redundant; they spawn a model with the
// same theory.
std::vector<Atom> non_redundant_atoms(const Model& m, unsigned guard = kOmegaGuard);

// Repeatedly drops any atom equal to the union of strictly narrower atoms
// still present, widest first, until none qualifies. Theory-preserving.
Model reduce_atomization(const Model& m);

} // namespace atomlat
