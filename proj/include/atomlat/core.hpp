#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "atomlat/errors.hpp"

namespace atomlat {

// Default guards on exponential enumerations. Every guarded operation takes
// the guard as a parameter, so callers (and the CLI --guard flag) can raise
// or lower them per call.
inline constexpr unsigned kEnumerationGuard = 16; // theories, freedom, Hasse, subdirect checks
inline constexpr unsigned kOmegaGuard = 20;       // compatible-atom enumeration
inline constexpr unsigned kOracleGuard = 12;      // congruence closure
// omega-style enumerations also refuse when the estimated working set would
// exceed this many bytes, independent of the guard value.
inline constexpr std::size_t kOmegaMemoryCap = std::size_t{1} << 31;

// The universe of constants: distinct names interned to dense indices
// 0..size()-1 in input order. Immutable once built.
class ConstantTable {
public:
    explicit ConstantTable(std::vector<std::string> names);

    uint32_t size() const { return static_cast<uint32_t>(names_.size()); }
    const std::string& name(uint32_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<uint32_t> index_of(std::string_view name) const;

    bool operator==(const ConstantTable& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> index_;
};

using TablePtr = std::shared_ptr<const ConstantTable>;

// Builds a table from names; duplicate or empty names raise ValueError naming
// the offender.
TablePtr intern_constants(std::vector<std::string> names);

// A set of constant indices over a fixed universe 0..universe-1, packed into
// 64-bit words. Backs both upper constant segments of atoms and constant sets
// of terms, so union/intersection/subset must stay word-parallel.
class CSet {
public:
    CSet() = default;
    explicit CSet(uint32_t universe);

    static CSet full(uint32_t universe);
    static CSet of(uint32_t universe, std::initializer_list<uint32_t> indices);
    // Low 64 bits given directly; universe must be <= 64.
    static CSet from_mask(uint32_t universe, uint64_t mask);

    uint32_t universe() const { return universe_; }
    bool test(uint32_t i) const;
    void set(uint32_t i);
    uint32_t count() const;
    bool empty() const;
    bool is_full() const;

    CSet& operator|=(const CSet& other);
    CSet& operator&=(const CSet& other);
    CSet& operator-=(const CSet& other);
    friend CSet operator|(CSet a, const CSet& b) { a |= b; return a; }
    friend CSet operator&(CSet a, const CSet& b) { a &= b; return a; }
    friend CSet operator-(CSet a, const CSet& b) { a -= b; return a; }
    CSet complement() const;

    bool subset_of(const CSet& other) const;
    bool proper_subset_of(const CSet& other) const;
    bool intersects(const CSet& other) const;

    bool operator==(const CSet& other) const = default;

    // Order by the sorted element sequence: the smallest constant index on
    // which the sets differ decides. Total order on sets of one universe.
    static bool lex_less(const CSet& a, const CSet& b);

    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
    std::vector<uint32_t> indices() const;
    std::size_t hash() const;

private:
    uint32_t universe_ = 0;
    std::vector<uint64_t> words_;

    void trim();
};

// (cardinality, lex) order; the canonical order used for atom lists and
// serialized output.
bool size_lex_less(const CSet& a, const CSet& b);

// An atom, identified globally by its upper constant segment: the set of
// constants above it. Two atoms with equal segments are the same atom.
struct Atom {
    CSet ucs;

    bool operator==(const Atom& other) const = default;
};

// A term names the join of a nonempty set of constants; terms with equal
// constant sets are the same term.
struct Term {
    CSet constants;

    bool operator==(const Term& other) const = default;
};

// An ordered pair of terms. "left <= right" is the assertion it stands for.
struct Duple {
    Term left;
    Term right;

    bool operator==(const Duple& other) const = default;
};

struct CSetHash {
    std::size_t operator()(const CSet& s) const { return s.hash(); }
};
struct AtomHash {
    std::size_t operator()(const Atom& a) const { return a.ucs.hash(); }
};

// Join of one or more atoms: the atom whose segment is the union of the
// operands' segments. Empty input raises ValueError.
Atom atom_join(std::span<const Atom> atoms);
inline Atom atom_join(std::initializer_list<Atom> atoms) {
    return atom_join(std::span<const Atom>(atoms.begin(), atoms.size()));
}

// phi is wider than psi when its segment strictly contains psi's.
bool wider_than(const Atom& phi, const Atom& psi);

} // namespace atomlat
