#pragma once

#include <vector>

#include "atomlat/core.hpp"

namespace atomlat {

// phi < t holds exactly when phi's segment mentions a constant of t.
bool atom_le_term(const Atom& phi, const Term& t);

// An atomized semilattice: a constant table plus a deduplicated set of atoms.
// Every order-theoretic query derives from the atom set. Immutable.
class Model {
public:
    // Validates the atom set and spawns a model. Every constant needs an atom
    // below it; when some constant has none and auto_zero is set, the zero
    // atom (segment = the whole universe) is adjoined, otherwise AxiomError
    // lists the uncovered constants. Atoms are deduplicated and kept in
    // (size, lex) order.
    static Model create(TablePtr table, std::vector<Atom> atoms, bool auto_zero);

    const TablePtr& table() const { return table_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    uint32_t universe() const { return table_->size(); }

    bool contains_atom(const Atom& phi) const;

    // Atoms of this model below t. Nonempty for every term of a valid model.
    std::vector<Atom> lower_segment(const Term& t) const;

    // s <= t iff no atom of the model lies below s but not below t.
    bool term_le(const Term& s, const Term& t) const;

    // Atoms below r.left but not r.right; empty exactly when the duple holds.
    std::vector<Atom> discriminant(const Duple& r) const;

    // True when adjoining phi leaves the theory unchanged. Decided through
    // phi's pinning duples: phi is compatible iff no constant of its segment
    // sits below the join of the constants outside it.
    bool is_compatible(const Atom& phi) const;

    // True when every duple is positive; equivalently the only atom is the
    // zero atom.
    bool is_trivial() const;

    bool operator==(const Model& other) const;

private:
    Model(TablePtr table, std::vector<Atom> atoms);

    TablePtr table_;
    std::vector<Atom> atoms_;
};

// Model atomized by the union of both atom sets. Tables must agree.
Model model_sum(const Model& m, const Model& n);

// constants_below[mask(t)] = mask of every constant c with c <= t in the
// model, for all 2^|C|-1 terms. The whole order relation reads off this
// table: s <= t iff mask(s) is a subset of constants_below[mask(t)].
std::vector<uint64_t> constants_below_table(const Model& m, unsigned guard = kEnumerationGuard);

// True when every duple negative in n is negative in m, over all term pairs
// of the (finite) universe. Exhaustive; guarded by universe size.
bool freer_or_as_free(const Model& m, const Model& n, unsigned guard = kEnumerationGuard);

// The full classification of duples over a small universe. Stores the
// constants-below table; duple lists are materialized on demand.
class Theory {
public:
    const TablePtr& table() const { return table_; }

    bool is_positive(const Duple& r) const;
    uint64_t duple_count() const;
    uint64_t positive_count() const;
    uint64_t negative_count() const { return duple_count() - positive_count(); }

    // Materialized duple lists; refused above kTheoryMaterializeGuard.
    std::vector<Duple> positives() const;
    std::vector<Duple> negatives() const;

    bool operator==(const Theory& other) const;

    static constexpr unsigned kTheoryMaterializeGuard = 10;

private:
    friend Theory positive_theory(const Model& m, unsigned guard);
    Theory(TablePtr table, std::vector<uint64_t> below)
        : table_(std::move(table)), below_(std::move(below)) {}

    TablePtr table_;
    std::vector<uint64_t> below_;
};

Theory positive_theory(const Model& m, unsigned guard = kEnumerationGuard);

} // namespace atomlat
