#include "atomlat/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace atomlat {

namespace {

// Union-find over term masks with path halving and union by size.
struct MaskForest {
    std::vector<uint32_t> parent;
    std::vector<uint32_t> size;

    explicit MaskForest(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size[a] < size[b])
            std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

// lex order on single-word masks, as over sorted index sequences: the lowest
// differing index wins unless its owner's opponent has simply run out.
bool mask_lex_less(uint32_t a, uint32_t b) {
    const uint32_t diff = a ^ b;
    if (diff == 0)
        return false;
    const uint32_t low = diff & (~diff + 1);
    const uint32_t above = ~(low | (low - 1));
    if (a & low)
        return (b & above) != 0;
    return (a & above) == 0;
}

void check_oracle_term(const OrderOracle& oracle, const Term& t) {
    if (t.constants.universe() != oracle.table()->size())
        throw ValueError("term is bound to a different constant table");
    if (t.constants.empty())
        throw ValueError("terms must mention at least one constant");
}

} // namespace

OrderOracle congruence_closure(TablePtr table, std::span<const Duple> rules, unsigned guard) {
    if (!table)
        throw ValueError("congruence closure requires a constant table");
    const uint32_t n = table->size();
    if (n > guard)
        throw GuardError("universe of " + std::to_string(n) +
                         " constants exceeds the oracle guard of " + std::to_string(guard));
    if (n > 24)
        throw GuardError("congruence closure over " + std::to_string(n) +
                         " constants exceeds the memory cap");
    const uint32_t full = (uint32_t{1} << n) - 1;

    MaskForest forest(full + 1);
    std::vector<std::pair<uint32_t, uint32_t>> work;
    for (const Duple& r : rules) {
        if (r.left.constants.universe() != n || r.right.constants.universe() != n)
            throw ValueError("duple is bound to a different constant table");
        if (r.left.constants.empty() || r.right.constants.empty())
            throw ValueError("terms must mention at least one constant");
        const auto left = static_cast<uint32_t>(r.left.constants.low_word());
        const auto right = static_cast<uint32_t>(r.right.constants.low_word());
        work.emplace_back(right, left | right);
    }

    // Each successful merge of (s, t) enqueues (s|u, t|u) for every u; pairs
    // already equivalent are dropped on pop.
    while (!work.empty()) {
        auto [s, t] = work.back();
        work.pop_back();
        if (!forest.unite(s, t))
            continue;
        for (uint32_t u = 1; u <= full; ++u) {
            const uint32_t a = s | u;
            const uint32_t b = t | u;
            if (a != b && forest.find(a) != forest.find(b))
                work.emplace_back(a, b);
        }
    }

    OrderOracle oracle;
    oracle.table_ = std::move(table);
    oracle.rep_.assign(full + 1, 0);
    // Lex-least member per class, then a fully compressed lookup.
    std::vector<uint32_t> least(full + 1, 0);
    for (uint32_t mask = 1; mask <= full; ++mask) {
        const uint32_t root = forest.find(mask);
        if (least[root] == 0 || mask_lex_less(mask, least[root]))
            least[root] = mask;
    }
    uint32_t classes = 0;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        oracle.rep_[mask] = least[forest.find(mask)];
        if (forest.find(mask) == mask)
            ++classes;
    }
    oracle.class_count_ = classes;
    return oracle;
}

Term OrderOracle::class_of(const Term& t) const {
    check_oracle_term(*this, t);
    const auto mask = static_cast<uint32_t>(t.constants.low_word());
    return Term{CSet::from_mask(table_->size(), rep_[mask])};
}

bool OrderOracle::le(const Term& s, const Term& t) const {
    check_oracle_term(*this, s);
    check_oracle_term(*this, t);
    const auto ms = static_cast<uint32_t>(s.constants.low_word());
    const auto mt = static_cast<uint32_t>(t.constants.low_word());
    return rep_[ms | mt] == rep_[mt];
}

bool oracle_le(const OrderOracle& oracle, const Term& s, const Term& t) {
    return oracle.le(s, t);
}

EquivResult oracle_equiv(const Model& m, const OrderOracle& oracle) {
    if (!(*m.table() == *oracle.table()))
        throw ValueError("model and oracle use different constant tables");
    const uint32_t n = m.universe();
    const std::vector<uint64_t> below = constants_below_table(m, n);
    const uint64_t full = (uint64_t{1} << n) - 1;

    std::vector<uint32_t> order(full);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), mask_lex_less);

    for (uint32_t s : order) {
        for (uint32_t t : order) {
            const bool in_model = (s & ~below[t]) == 0;
            const bool in_oracle = oracle.rep_[s | t] == oracle.rep_[t];
            if (in_model != in_oracle) {
                EquivResult result;
                result.equivalent = false;
                result.counterexample =
                    Duple{Term{CSet::from_mask(n, s)}, Term{CSet::from_mask(n, t)}};
                return result;
            }
        }
    }
    return EquivResult{};
}

} // namespace atomlat
