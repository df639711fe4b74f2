#pragma once

#include <optional>
#include <span>
#include <vector>

#include "atomlat/model.hpp"

namespace atomlat {

struct EquivResult {
    bool equivalent = true;
    // First disagreeing duple in (left, right) lexicographic term order.
    std::optional<Duple> counterexample;
};

// Brute-force ground truth for the order a duple set induces: a union-find
// over every nonempty subset of the universe, closed under joining any term
// to both sides of a merged pair. Deliberately naive; its job is trust.
class OrderOracle {
public:
    const TablePtr& table() const { return table_; }

    // Representative of the class of t: the lexicographically least member.
    Term class_of(const Term& t) const;

    // s <= t iff s joined with t collapses into t's class.
    bool le(const Term& s, const Term& t) const;

    uint32_t class_count() const { return class_count_; }

private:
    friend OrderOracle congruence_closure(TablePtr table, std::span<const Duple> rules,
                                          unsigned guard);
    friend EquivResult oracle_equiv(const Model& m, const OrderOracle& oracle);
    OrderOracle() = default;

    TablePtr table_;
    std::vector<uint32_t> rep_; // term mask -> representative mask
    uint32_t class_count_ = 0;
};

// Builds the oracle for the congruence generated by the rules: each duple
// (l, r) seeds r ~ l|r, and the closure rule propagates s ~ t into
// s|u ~ t|u for every nonempty u until a fixpoint is reached.
OrderOracle congruence_closure(TablePtr table, std::span<const Duple> rules,
                               unsigned guard = kOracleGuard);

bool oracle_le(const OrderOracle& oracle, const Term& s, const Term& t);

// Compares the model's order against the oracle over every pair of terms.
EquivResult oracle_equiv(const Model& m, const OrderOracle& oracle);

} // namespace atomlat
