#include "atomlat/model.hpp"

#include <algorithm>
#include <bit>

namespace atomlat {

bool atom_le_term(const Atom& phi, const Term& t) {
    return phi.ucs.intersects(t.constants);
}

namespace {

void check_term(const Model& m, const Term& t) {
    if (t.constants.universe() != m.universe())
        throw ValueError("term is bound to a different constant table");
    if (t.constants.empty())
        throw ValueError("terms must mention at least one constant");
}

void check_atom(const Model& m, const Atom& phi) {
    if (phi.ucs.universe() != m.universe())
        throw ValueError("atom is bound to a different constant table");
    if (phi.ucs.empty())
        throw ValueError("atom segments must be nonempty");
}

} // namespace

Model::Model(TablePtr table, std::vector<Atom> atoms)
    : table_(std::move(table)), atoms_(std::move(atoms)) {}

Model Model::create(TablePtr table, std::vector<Atom> atoms, bool auto_zero) {
    if (!table)
        throw ValueError("model requires a constant table");
    const uint32_t n = table->size();
    CSet covered(n);
    for (const Atom& phi : atoms) {
        if (phi.ucs.universe() != n)
            throw ValueError("atom is bound to a different constant table");
        if (phi.ucs.empty())
            throw ValueError("atom segments must be nonempty");
        covered |= phi.ucs;
    }
    if (!covered.is_full()) {
        if (auto_zero) {
            atoms.push_back(Atom{CSet::full(n)});
        } else {
            std::string names;
            for (uint32_t i : covered.complement().indices()) {
                if (!names.empty())
                    names += ", ";
                names += table->name(i);
            }
            throw AxiomError("no atom below constant(s): " + names);
        }
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return size_lex_less(a.ucs, b.ucs); });
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return Model(std::move(table), std::move(atoms));
}

bool Model::contains_atom(const Atom& phi) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), phi,
                              [](const Atom& a, const Atom& b) { return size_lex_less(a.ucs, b.ucs); });
}

std::vector<Atom> Model::lower_segment(const Term& t) const {
    check_term(*this, t);
    std::vector<Atom> out;
    for (const Atom& phi : atoms_)
        if (atom_le_term(phi, t))
            out.push_back(phi);
    return out;
}

bool Model::term_le(const Term& s, const Term& t) const {
    check_term(*this, s);
    check_term(*this, t);
    for (const Atom& phi : atoms_)
        if (phi.ucs.intersects(s.constants) && !phi.ucs.intersects(t.constants))
            return false;
    return true;
}

std::vector<Atom> Model::discriminant(const Duple& r) const {
    check_term(*this, r.left);
    check_term(*this, r.right);
    std::vector<Atom> out;
    for (const Atom& phi : atoms_)
        if (phi.ucs.intersects(r.left.constants) && !phi.ucs.intersects(r.right.constants))
            out.push_back(phi);
    return out;
}

bool Model::is_compatible(const Atom& phi) const {
    check_atom(*this, phi);
    if (phi.ucs.is_full())
        return true; // the zero atom discriminates nothing
    // Pinning duples (c, T_phi) are the hardest duples phi discriminates: any
    // positive duple phi discriminates forces some c <= T_phi, and each
    // positive (c, T_phi) is itself discriminated by phi.
    Term pinning{phi.ucs.complement()};
    Term c{CSet(universe())};
    for (uint32_t i : phi.ucs.indices()) {
        c.constants = CSet::of(universe(), {i});
        if (term_le(c, pinning))
            return false;
    }
    return true;
}

bool Model::is_trivial() const {
    for (const Atom& phi : atoms_)
        if (!phi.ucs.is_full())
            return false;
    return true;
}

bool Model::operator==(const Model& other) const {
    return *table_ == *other.table_ && atoms_ == other.atoms_;
}

Model model_sum(const Model& m, const Model& n) {
    if (!(*m.table() == *n.table()))
        throw ValueError("model_sum requires models over the same constant table");
    std::vector<Atom> atoms = m.atoms();
    atoms.insert(atoms.end(), n.atoms().begin(), n.atoms().end());
    return Model::create(m.table(), std::move(atoms), false);
}

std::vector<uint64_t> constants_below_table(const Model& m, unsigned guard) {
    const uint32_t n = m.universe();
    if (n > guard)
        throw GuardError("universe of " + std::to_string(n) +
                         " constants exceeds the enumeration guard of " + std::to_string(guard));
    if (n > 24 || (uint64_t{16} << n) > kOmegaMemoryCap)
        throw GuardError("term enumeration over " + std::to_string(n) +
                         " constants exceeds the memory cap");
    const uint64_t full = (uint64_t{1} << n) - 1;
    // reach[m] = union of the segments contained in m; subset-sum sweep.
    std::vector<uint64_t> reach(full + 1, 0);
    for (const Atom& phi : m.atoms()) {
        uint64_t mask = phi.ucs.low_word();
        reach[mask] |= mask;
    }
    for (uint32_t b = 0; b < n; ++b) {
        const uint64_t bit = uint64_t{1} << b;
        for (uint64_t mask = 0; mask <= full; ++mask)
            if (mask & bit)
                reach[mask] |= reach[mask ^ bit];
    }
    // c <= t unless some atom disjoint from t mentions c, i.e. unless c is
    // reachable inside t's complement.
    std::vector<uint64_t> below(full + 1, 0);
    for (uint64_t mask = 1; mask <= full; ++mask)
        below[mask] = full & ~reach[full & ~mask];
    return below;
}

bool freer_or_as_free(const Model& m, const Model& n, unsigned guard) {
    if (!(*m.table() == *n.table()))
        throw ValueError("freedom comparison requires models over the same constant table");
    if (m.universe() > guard)
        throw GuardError("universe of " + std::to_string(m.universe()) +
                         " constants exceeds the enumeration guard of " + std::to_string(guard) +
                         "; raise the guard or fall back to sampled duple checks");
    const std::vector<uint64_t> below_m = constants_below_table(m, guard);
    const std::vector<uint64_t> below_n = constants_below_table(n, guard);
    // Positives of m must all hold in n: for each t, everything below t in m
    // (the largest left side of a positive duple) must be below t in n.
    for (std::size_t t = 1; t < below_m.size(); ++t)
        if (below_m[t] & ~below_n[t])
            return false;
    return true;
}

bool Theory::is_positive(const Duple& r) const {
    if (r.left.constants.universe() != table_->size() ||
        r.right.constants.universe() != table_->size())
        throw ValueError("duple is bound to a different constant table");
    if (r.left.constants.empty() || r.right.constants.empty())
        throw ValueError("terms must mention at least one constant");
    const uint64_t s = r.left.constants.low_word();
    const uint64_t t = r.right.constants.low_word();
    return (s & ~below_[t]) == 0;
}

uint64_t Theory::duple_count() const {
    const uint64_t terms = below_.size() - 1;
    return terms * terms;
}

uint64_t Theory::positive_count() const {
    uint64_t total = 0;
    for (std::size_t t = 1; t < below_.size(); ++t)
        total += (uint64_t{1} << std::popcount(below_[t])) - 1;
    return total;
}

std::vector<Duple> Theory::positives() const {
    const uint32_t n = table_->size();
    if (n > kTheoryMaterializeGuard)
        throw GuardError("refusing to materialize the theory over " + std::to_string(n) +
                         " constants");
    std::vector<Duple> out;
    for (uint64_t t = 1; t < below_.size(); ++t) {
        // nonempty submasks of below_[t]
        for (uint64_t s = below_[t]; s != 0; s = (s - 1) & below_[t])
            out.push_back(Duple{Term{CSet::from_mask(n, s)}, Term{CSet::from_mask(n, t)}});
    }
    return out;
}

std::vector<Duple> Theory::negatives() const {
    const uint32_t n = table_->size();
    if (n > kTheoryMaterializeGuard)
        throw GuardError("refusing to materialize the theory over " + std::to_string(n) +
                         " constants");
    std::vector<Duple> out;
    for (uint64_t t = 1; t < below_.size(); ++t)
        for (uint64_t s = 1; s < below_.size(); ++s)
            if (s & ~below_[t])
                out.push_back(Duple{Term{CSet::from_mask(n, s)}, Term{CSet::from_mask(n, t)}});
    return out;
}

bool Theory::operator==(const Theory& other) const {
    return *table_ == *other.table_ && below_ == other.below_;
}

Theory positive_theory(const Model& m, unsigned guard) {
    return Theory(m.table(), constants_below_table(m, guard));
}

} // namespace atomlat
