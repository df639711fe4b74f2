#pragma once

// Shared helpers for the test suites: small-universe builders, random
// generators, and naive reference implementations kept independent of the
// library's fast paths.

#include <random>
#include <string>
#include <vector>

#include "atomlat/crossing.hpp"
#include "atomlat/model.hpp"
#include "atomlat/oracle.hpp"

namespace testsupport {

using namespace atomlat;

inline TablePtr table_n(uint32_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        if (n <= 26)
            names.emplace_back(1, static_cast<char>('a' + i));
        else
            names.push_back("c" + std::to_string(i));
    }
    return intern_constants(std::move(names));
}

inline Term term(uint32_t universe, std::initializer_list<uint32_t> indices) {
    return Term{CSet::of(universe, indices)};
}

inline Atom atom(uint32_t universe, std::initializer_list<uint32_t> indices) {
    return Atom{CSet::of(universe, indices)};
}

inline Term term_mask(uint32_t universe, uint64_t mask) {
    return Term{CSet::from_mask(universe, mask)};
}

inline Atom atom_mask(uint32_t universe, uint64_t mask) {
    return Atom{CSet::from_mask(universe, mask)};
}

inline uint64_t random_nonempty_mask(std::mt19937_64& rng, uint32_t n) {
    std::uniform_int_distribution<uint64_t> dist(1, (uint64_t{1} << n) - 1);
    return dist(rng);
}

inline Duple random_duple(std::mt19937_64& rng, uint32_t n) {
    return Duple{term_mask(n, random_nonempty_mask(rng, n)),
                 term_mask(n, random_nonempty_mask(rng, n))};
}

inline std::vector<Duple> random_duples(std::mt19937_64& rng, uint32_t n, std::size_t count) {
    std::vector<Duple> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_duple(rng, n));
    return out;
}

inline Model random_model(std::mt19937_64& rng, const TablePtr& table, std::size_t max_atoms) {
    const uint32_t n = table->size();
    std::uniform_int_distribution<std::size_t> count_dist(1, max_atoms);
    std::vector<Atom> atoms;
    const std::size_t k = count_dist(rng);
    atoms.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        atoms.push_back(atom_mask(n, random_nonempty_mask(rng, n)));
    return Model::create(table, std::move(atoms), true);
}

// Reference order check straight from the axioms: walks every pair of terms
// and compares lower segments element by element.
inline bool naive_freer_or_as_free(const Model& m, const Model& n) {
    const uint32_t c = m.universe();
    const uint64_t full = (uint64_t{1} << c) - 1;
    for (uint64_t s = 1; s <= full; ++s)
        for (uint64_t t = 1; t <= full; ++t) {
            const Duple r{term_mask(c, s), term_mask(c, t)};
            const bool n_negative = !n.term_le(r.left, r.right);
            const bool m_negative = !m.term_le(r.left, r.right);
            if (n_negative && !m_negative)
                return false;
        }
    return true;
}

// Definitional compatibility: adjoin the atom and compare every duple's sign.
inline bool naive_is_compatible(const Model& m, const Atom& phi) {
    std::vector<Atom> extended = m.atoms();
    extended.push_back(phi);
    const Model with = Model::create(m.table(), std::move(extended), false);
    const uint32_t c = m.universe();
    const uint64_t full = (uint64_t{1} << c) - 1;
    for (uint64_t s = 1; s <= full; ++s)
        for (uint64_t t = 1; t <= full; ++t) {
            const Term left = term_mask(c, s);
            const Term right = term_mask(c, t);
            if (m.term_le(left, right) != with.term_le(left, right))
                return false;
        }
    return true;
}

inline bool theories_equal(const Model& a, const Model& b) {
    return positive_theory(a) == positive_theory(b);
}

} // namespace testsupport
