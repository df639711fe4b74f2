#include "doctest.h"

#include <random>

#include "atomlat/crossing.hpp"
#include "atomlat/decompose.hpp"
#include "support.hpp"

using namespace atomlat;
using namespace testsupport;

TEST_CASE("one factor per atom, zero atom excluded") {
    const TablePtr t3 = table_n(3);
    CHECK(subdirect_factors(freest_model(t3, {})).size() == 3);

    const Model quotient = Model::create(t3, {atom(3, {2}), atom(3, {0, 1})}, false);
    CHECK(subdirect_factors(quotient).size() == 2);

    const Model with_zero =
        Model::create(t3, {atom(3, {2}), atom(3, {0, 1}), atom(3, {0, 1, 2})}, false);
    CHECK(subdirect_factors(with_zero).size() == 2);

    const Model trivial = Model::create(t3, {}, true);
    CHECK_THROWS_AS(subdirect_factors(trivial), ValueError);
}

TEST_CASE("factor projections are the two-element images") {
    CHECK(factor_project(Factor{atom(3, {2})}, term(3, {2})) == 1);
    CHECK(factor_project(Factor{atom(3, {2})}, term(3, {0, 1})) == 0);
    CHECK(factor_project(Factor{atom(3, {0, 1})}, term(3, {0, 2})) == 1);
}

TEST_CASE("tuples separate exactly what the model separates") {
    const TablePtr t3 = table_n(3);
    CHECK(verify_subdirect(freest_model(t3, {})));

    const Model quotient = Model::create(t3, {atom(3, {2}), atom(3, {0, 1})}, false);
    CHECK(verify_subdirect(quotient));
    // a and b collapse onto the same tuple
    const auto factors = subdirect_factors(quotient);
    for (const Factor& f : factors)
        CHECK(factor_project(f, term(3, {0})) == factor_project(f, term(3, {1})));
}

TEST_CASE("random and crossed models verify exhaustively") {
    std::mt19937_64 rng(103);
    for (uint32_t n = 2; n <= 5; ++n) {
        const TablePtr table = table_n(n);
        for (int i = 0; i < 20; ++i) {
            CHECK(verify_subdirect(random_model(rng, table, 6)));
            CHECK(verify_subdirect(freest_model(table, random_duples(rng, n, rng() % 5))));
        }
    }
}

TEST_CASE("each proper factor takes both values over the terms") {
    std::mt19937_64 rng(107);
    const uint32_t n = 4;
    const TablePtr table = table_n(n);
    for (int i = 0; i < 30; ++i) {
        const Model m = random_model(rng, table, 6);
        if (m.is_trivial())
            continue;
        for (const Factor& f : subdirect_factors(m)) {
            CHECK(factor_project(f, Term{f.atom.ucs}) == 1);
            CHECK(factor_project(f, Term{f.atom.ucs.complement()}) == 0);
        }
    }
}
