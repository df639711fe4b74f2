#include "atomlat/redundancy.hpp"

#include <algorithm>
#include <cassert>

namespace atomlat {

PinningInfo pinning(const TablePtr& table, const Atom& phi) {
    if (!table)
        throw ValueError("pinning requires a constant table");
    if (phi.ucs.universe() != table->size())
        throw ValueError("atom is bound to a different constant table");
    if (phi.ucs.empty())
        throw ValueError("atom segments must be nonempty");

    PinningInfo info{phi, std::nullopt, {}};
    CSet outside = phi.ucs.complement();
    if (outside.empty())
        return info; // the zero atom pins nothing
    info.pinning_term = Term{outside};
    for (uint32_t c : phi.ucs.indices())
        info.pinning_duples.push_back(
            Duple{Term{CSet::of(table->size(), {c})}, *info.pinning_term});
    return info;
}

namespace {

struct OmegaView {
    uint32_t universe = 0;
    std::vector<uint64_t> below; // the guarded call; initialized before full
    uint64_t full = 0;

    explicit OmegaView(const Model& m, unsigned guard)
        : universe(m.universe()),
          below(constants_below_table(m, guard)),
          full((uint64_t{1} << m.universe()) - 1) {
        if ((uint64_t{64} << universe) > kOmegaMemoryCap)
            throw GuardError("compatible-atom enumeration over " + std::to_string(universe) +
                             " constants exceeds the memory cap");
    }

    bool compatible(uint64_t mask) const {
        return mask == full || (mask & below[full & ~mask]) == 0;
    }

    // Union of the compatible proper subsets of mask; equals mask exactly
    // when the atom with that segment is redundant.
    uint64_t proper_subset_cover(uint64_t mask) const {
        uint64_t cover = 0;
        for (uint64_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
            if (compatible(sub))
                cover |= sub;
            if (cover == mask)
                return cover;
        }
        return cover;
    }
};

uint64_t atom_mask(const Model& m, const Atom& phi) {
    if (phi.ucs.universe() != m.universe())
        throw ValueError("atom is bound to a different constant table");
    if (phi.ucs.empty())
        throw ValueError("atom segments must be nonempty");
    return phi.ucs.low_word();
}

} // namespace

std::vector<Atom> omega(const Model& m, unsigned guard) {
    OmegaView view(m, guard);
    std::vector<Atom> out;
    for (uint64_t mask = 1; mask <= view.full; ++mask)
        if (view.compatible(mask))
            out.push_back(Atom{CSet::from_mask(view.universe, mask)});
    std::sort(out.begin(), out.end(),
              [](const Atom& a, const Atom& b) { return size_lex_less(a.ucs, b.ucs); });
    return out;
}

bool is_redundant(const Model& m, const Atom& phi, unsigned guard) {
    OmegaView view(m, guard);
    const uint64_t mask = atom_mask(m, phi);
    if (!view.compatible(mask))
        throw ValueError("atom is not compatible with the model");
    return view.proper_subset_cover(mask) == mask;
}

bool is_weakly_redundant(const Model& m, const Atom& phi, unsigned guard) {
    OmegaView view(m, guard);
    const uint64_t mask = atom_mask(m, phi);
    if (!view.compatible(mask))
        throw ValueError("atom is not compatible with the model");
    // The pinning term is the worst right side any discriminated duple can
    // have, so one narrower compatible witness per segment constant settles
    // all of them.
    for (uint64_t bit = mask; bit != 0; bit &= bit - 1) {
        const uint64_t c = bit & (~bit + 1);
        bool witnessed = false;
        for (uint64_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
            if ((sub & c) != 0 && view.compatible(sub)) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed)
            return false;
    }
    return true;
}

std::vector<Atom> non_redundant_atoms(const Model& m, unsigned guard) {
    OmegaView view(m, guard);
    std::vector<Atom> out;
    for (uint64_t mask = 1; mask <= view.full; ++mask)
        if (view.compatible(mask) && view.proper_subset_cover(mask) != mask)
            out.push_back(Atom{CSet::from_mask(view.universe, mask)});
    std::sort(out.begin(), out.end(),
              [](const Atom& a, const Atom& b) { return size_lex_less(a.ucs, b.ucs); });
    return out;
}

Model reduce_atomization(const Model& m) {
    // Widest first, lex to break ties; removal can only shrink the witness
    // pool of wider atoms, never of narrower ones, so one ordered sweep per
    // round suffices and the loop stabilizes quickly.
    std::vector<Atom> atoms = m.atoms();
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        const uint32_t ca = a.ucs.count();
        const uint32_t cb = b.ucs.count();
        if (ca != cb)
            return ca > cb;
        return CSet::lex_less(a.ucs, b.ucs);
    });

#ifndef NDEBUG
    const bool audit_steps = m.universe() <= 10;
    const std::vector<uint64_t> reference_below =
        audit_steps ? constants_below_table(m, m.universe()) : std::vector<uint64_t>{};
#endif

    bool removed_any = true;
    while (removed_any) {
        removed_any = false;
        for (std::size_t i = 0; i < atoms.size();) {
            CSet cover(m.universe());
            for (std::size_t j = 0; j < atoms.size(); ++j)
                if (j != i && atoms[j].ucs.proper_subset_of(atoms[i].ucs))
                    cover |= atoms[j].ucs;
            if (cover == atoms[i].ucs) {
                atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i));
                removed_any = true;
#ifndef NDEBUG
                if (audit_steps) {
                    Model step = Model::create(m.table(), atoms, false);
                    assert(constants_below_table(step, m.universe()) == reference_below &&
                           "reduction step changed the theory");
                }
#endif
            } else {
                ++i;
            }
        }
    }
    return Model::create(m.table(), std::move(atoms), false);
}

} // namespace atomlat
