#include "atomlat/decompose.hpp"

namespace atomlat {

std::vector<Factor> subdirect_factors(const Model& m) {
    if (m.is_trivial())
        throw ValueError("trivial model: subdirect decomposition is degenerate");
    std::vector<Factor> factors;
    for (const Atom& phi : m.atoms())
        if (!phi.ucs.is_full())
            factors.push_back(Factor{phi});
    return factors;
}

int factor_project(const Factor& f, const Term& t) {
    if (f.atom.ucs.universe() != t.constants.universe())
        throw ValueError("term is bound to a different constant table");
    if (t.constants.empty())
        throw ValueError("terms must mention at least one constant");
    return f.atom.ucs.intersects(t.constants) ? 1 : 0;
}

bool verify_subdirect(const Model& m, unsigned guard) {
    const uint32_t n = m.universe();
    const std::vector<uint64_t> below = constants_below_table(m, guard);
    const uint64_t full = (uint64_t{1} << n) - 1;

    // The zero atom projects to 1 everywhere, so only the proper factors can
    // separate anything; a trivial model yields the empty tuple for all terms.
    std::vector<uint64_t> factor_masks;
    for (const Atom& phi : m.atoms())
        if (!phi.ucs.is_full())
            factor_masks.push_back(phi.ucs.low_word());

    // tuple[t] packs the factor projections of t into one word per 64 factors.
    const std::size_t tuple_words = (factor_masks.size() + 63) / 64;
    std::vector<std::vector<uint64_t>> tuple(full + 1, std::vector<uint64_t>(tuple_words, 0));
    for (uint64_t t = 1; t <= full; ++t)
        for (std::size_t f = 0; f < factor_masks.size(); ++f)
            if (factor_masks[f] & t)
                tuple[t][f / 64] |= uint64_t{1} << (f % 64);

    for (uint64_t s = 1; s <= full; ++s) {
        for (uint64_t t = 1; t <= full; ++t) {
            const bool le = (s & ~below[t]) == 0;
            bool tuple_le = true;
            bool tuple_eq = true;
            for (std::size_t w = 0; w < tuple_words; ++w) {
                if (tuple[s][w] & ~tuple[t][w])
                    tuple_le = false;
                if (tuple[s][w] != tuple[t][w])
                    tuple_eq = false;
            }
            if (le != tuple_le)
                return false;
            const bool ge = (t & ~below[s]) == 0;
            if ((le && ge) != tuple_eq)
                return false;
        }
    }
    return true;
}

} // namespace atomlat
