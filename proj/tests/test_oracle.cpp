#include "doctest.h"

#include <random>

#include "atomlat/crossing.hpp"
#include "atomlat/oracle.hpp"
#include "support.hpp"

using namespace atomlat;
using namespace testsupport;

TEST_CASE("empty rule set keeps every term in its own class") {
    const TablePtr t3 = table_n(3);
    const OrderOracle oracle = congruence_closure(t3, {});
    CHECK(oracle.class_count() == 7);
    CHECK(oracle.le(term(3, {0}), term(3, {0})));
    CHECK(oracle.le(term(3, {0}), term(3, {0, 1})));
    CHECK(!oracle.le(term(3, {0}), term(3, {1})));
}

TEST_CASE("one rule merges the seeded pair and nothing else at two constants") {
    const TablePtr t2 = table_n(2);
    const std::vector<Duple> rules{{term(2, {0}), term(2, {1})}};
    const OrderOracle oracle = congruence_closure(t2, rules);
    CHECK(oracle.class_count() == 2);
    CHECK(oracle.class_of(term(2, {1})) == oracle.class_of(term(2, {0, 1})));
    CHECK(oracle.class_of(term(2, {0})) != oracle.class_of(term(2, {1})));
    CHECK(oracle.le(term(2, {0}), term(2, {1})));
    CHECK(!oracle.le(term(2, {1}), term(2, {0})));
}

TEST_CASE("opposing rules collapse everything at two constants") {
    const TablePtr t2 = table_n(2);
    const std::vector<Duple> rules{{term(2, {0}), term(2, {1})},
                                   {term(2, {1}), term(2, {0})}};
    const OrderOracle oracle = congruence_closure(t2, rules);
    CHECK(oracle.class_count() == 1);
}

TEST_CASE("oracle order is a semilattice order") {
    std::mt19937_64 rng(11);
    const uint32_t n = 4;
    const TablePtr table = table_n(n);
    const uint64_t full = (uint64_t{1} << n) - 1;
    for (int i = 0; i < 20; ++i) {
        const auto rules = random_duples(rng, n, 1 + rng() % 5);
        const OrderOracle oracle = congruence_closure(table, rules);
        for (uint64_t s = 1; s <= full; ++s) {
            const Term ts = term_mask(n, s);
            CHECK(oracle.le(ts, ts));
            for (uint64_t t = 1; t <= full; ++t) {
                const Term tt = term_mask(n, t);
                const Term join = term_mask(n, s | t);
                CHECK(oracle.le(ts, join)); // s <= s join t
                if (oracle.le(ts, tt) && oracle.le(tt, ts))
                    CHECK(oracle.class_of(ts) == oracle.class_of(tt));
                for (uint64_t u = 1; u <= full; ++u) {
                    const Term tu = term_mask(n, u);
                    if (oracle.le(ts, tt) && oracle.le(tt, tu))
                        CHECK(oracle.le(ts, tu));
                }
            }
        }
    }
}

TEST_CASE("class_of is a congruence") {
    std::mt19937_64 rng(13);
    const uint32_t n = 4;
    const TablePtr table = table_n(n);
    const uint64_t full = (uint64_t{1} << n) - 1;
    for (int i = 0; i < 20; ++i) {
        const auto rules = random_duples(rng, n, 1 + rng() % 5);
        const OrderOracle oracle = congruence_closure(table, rules);
        for (uint64_t s = 1; s <= full; ++s)
            for (uint64_t t = 1; t <= full; ++t) {
                if (oracle.class_of(term_mask(n, s)) != oracle.class_of(term_mask(n, t)))
                    continue;
                for (uint64_t u = 1; u <= full; ++u)
                    CHECK(oracle.class_of(term_mask(n, s | u)) ==
                          oracle.class_of(term_mask(n, t | u)));
            }
    }
}

TEST_CASE("oracle_equiv accepts the matching freest model") {
    const TablePtr t3 = table_n(3);
    const std::vector<Duple> rules{{term(3, {0}), term(3, {1})}};

    const Model crossed = freest_model(t3, rules);
    CHECK(oracle_equiv(crossed, congruence_closure(t3, rules)).equivalent);

    const Model free = freest_model(t3, {});
    CHECK(oracle_equiv(free, congruence_closure(t3, {})).equivalent);
}

TEST_CASE("oracle_equiv reports the lexicographically first counterexample") {
    const TablePtr t3 = table_n(3);
    const std::vector<Duple> rules{{term(3, {0}), term(3, {1})}};
    const Model free = freest_model(t3, {});
    const EquivResult result = oracle_equiv(free, congruence_closure(t3, rules));
    REQUIRE(!result.equivalent);
    REQUIRE(result.counterexample.has_value());
    CHECK(result.counterexample->left == term(3, {0}));
    CHECK(result.counterexample->right == term(3, {1}));
}

TEST_CASE("oracle guard rejects oversized universes") {
    CHECK_THROWS_AS(congruence_closure(table_n(13), {}), GuardError);
    CHECK_NOTHROW(congruence_closure(table_n(13), {}, 13));
}
