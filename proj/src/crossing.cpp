#include "atomlat/crossing.hpp"

namespace atomlat {

Model full_cross(const Model& m, const Duple& r) {
    if (r.left.constants.universe() != m.universe() ||
        r.right.constants.universe() != m.universe())
        throw ValueError("duple is bound to a different constant table");

    const std::vector<Atom> discriminating = m.discriminant(r);
    if (discriminating.empty())
        return m;
    const std::vector<Atom> under_right = m.lower_segment(r.right);

    std::vector<Atom> next;
    next.reserve(m.atoms().size() - discriminating.size() +
                 discriminating.size() * under_right.size());
    for (const Atom& phi : m.atoms())
        if (!phi.ucs.intersects(r.left.constants) || phi.ucs.intersects(r.right.constants))
            next.push_back(phi);
    for (const Atom& phi : discriminating)
        for (const Atom& psi : under_right)
            next.push_back(Atom{phi.ucs | psi.ucs});

    // Coverage survives: every removed atom reappears widened by an atom
    // below the right side. create() re-validates and dedups.
    return Model::create(m.table(), std::move(next), false);
}

Model full_cross_batch(const Model& m, std::span<const Duple> rules) {
    Model result = m;
    for (const Duple& r : rules)
        result = full_cross(result, r);
    return result;
}

Model full_cross_omega(const Model& m, std::span<const Duple> rules, unsigned guard) {
    const uint32_t n = m.universe();
    const std::vector<uint64_t> below = constants_below_table(m, guard);
    const uint64_t full = (uint64_t{1} << n) - 1;

    std::vector<std::pair<uint64_t, uint64_t>> rule_masks;
    rule_masks.reserve(rules.size());
    for (const Duple& r : rules) {
        if (r.left.constants.universe() != n || r.right.constants.universe() != n)
            throw ValueError("duple is bound to a different constant table");
        rule_masks.emplace_back(r.left.constants.low_word(), r.right.constants.low_word());
    }

    std::vector<Atom> atoms;
    for (uint64_t mask = 1; mask <= full; ++mask) {
        // compatible with m: no constant of the segment sits below its
        // complement term (the zero atom is always compatible)
        if (mask != full && (mask & below[full & ~mask]) != 0)
            continue;
        bool discriminates = false;
        for (const auto& [left, right] : rule_masks) {
            if ((mask & left) != 0 && (mask & right) == 0) {
                discriminates = true;
                break;
            }
        }
        if (!discriminates)
            atoms.push_back(Atom{CSet::from_mask(n, mask)});
    }
    return Model::create(m.table(), std::move(atoms), false);
}

Model freest_model(TablePtr table, std::span<const Duple> rules) {
    if (!table)
        throw ValueError("freest_model requires a constant table");
    std::vector<Atom> singletons;
    singletons.reserve(table->size());
    for (uint32_t i = 0; i < table->size(); ++i)
        singletons.push_back(Atom{CSet::of(table->size(), {i})});
    return full_cross_batch(Model::create(std::move(table), std::move(singletons), false), rules);
}

} // namespace atomlat
