#include <doctest.h>

#include <random>
#include <stdexcept>

#include "divgraph/cycle_type.hpp"
#include "divgraph/oracle.hpp"

using namespace divgraph;

TEST_CASE("enumeration counts match the partition recurrence") {
    CHECK(enumerate_cycle_types(1).size() == 1);
    CHECK(enumerate_cycle_types(4).size() == 5);
    CHECK(enumerate_cycle_types(10).size() == 42);
    for (unsigned n = 1; n <= 30; ++n)
        CHECK(enumerate_cycle_types(n).size() == partition_number(n));
}

TEST_CASE("enumeration is canonical: identity first, all distinct") {
    auto types = enumerate_cycle_types(6);
    CHECK(types.front() == CycleType::identity(6));
    for (std::size_t i = 0; i < types.size(); ++i)
        for (std::size_t j = i + 1; j < types.size(); ++j)
            CHECK(types[i] != types[j]);
    CHECK_THROWS_AS(enumerate_cycle_types(0), std::invalid_argument);
}

TEST_CASE("construction validates the partition") {
    CHECK_THROWS_AS(CycleType(5, 2, {{2, 1}}), std::invalid_argument);  // sums to 4
    CHECK_THROWS_AS(CycleType(5, 0, {{1, 5}}), std::invalid_argument);  // length 1 part
    CHECK_THROWS_AS(CycleType(8, 0, {{4, 1}, {2, 2}}), std::invalid_argument); // order
    CHECK_THROWS_AS(CycleType(4, 0, {{2, 0}, {4, 1}}), std::invalid_argument); // count 0
}

TEST_CASE("parity") {
    CHECK(CycleType(5, 3, {{2, 1}}).parity() == Parity::odd);   // transposition
    CHECK(CycleType(5, 2, {{3, 1}}).parity() == Parity::even);  // 3-cycle
    CHECK(CycleType(6, 0, {{2, 1}, {4, 1}}).parity() == Parity::even);
    CHECK(CycleType::identity(7).parity() == Parity::even);
}

TEST_CASE("parity agrees with the oracle sign for n <= 8") {
    for (unsigned n = 1; n <= 8; ++n)
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            int s = oracle::sign(oracle::representative(ct));
            CHECK((ct.parity() == Parity::even) == (s == 1));
        }
}

TEST_CASE("splitting classification") {
    CHECK(CycleType(5, 0, {{5, 1}}).splits_in_alternating());
    CHECK_FALSE(CycleType(5, 2, {{3, 1}}).splits_in_alternating());   // t = 2
    CHECK_FALSE(CycleType(5, 1, {{2, 2}}).splits_in_alternating());   // k = 2
    CHECK_FALSE(CycleType(6, 0, {{2, 1}, {4, 1}}).splits_in_alternating()); // even lengths
    CHECK_THROWS_AS(CycleType(5, 3, {{2, 1}}).splits_in_alternating(),
                    std::invalid_argument);
    // split types are structurally constrained
    for (unsigned n = 1; n <= 12; ++n)
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            if (ct.parity() != Parity::even || !ct.splits_in_alternating())
                continue;
            CHECK(ct.fixed_points() <= 1);
            for (const auto& p : ct.parts()) {
                CHECK(p.count == 1);
                CHECK(p.length % 2 == 1);
            }
        }
}

TEST_CASE("power on cycle types") {
    CHECK(CycleType(4, 0, {{4, 1}}).power(2) == CycleType(4, 0, {{2, 2}}));
    CHECK(CycleType(6, 0, {{6, 1}}).power(2) == CycleType(6, 0, {{3, 2}}));
    CHECK(CycleType(5, 0, {{2, 1}, {3, 1}}).power(2) == CycleType(5, 2, {{3, 1}}));
    CHECK_THROWS_AS(CycleType::identity(3).power(0), std::invalid_argument);
}

TEST_CASE("power agrees with actually powering a permutation") {
    for (unsigned n = 1; n <= 7; ++n)
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            oracle::Perm g = oracle::representative(ct);
            oracle::Perm h = g;
            for (unsigned m = 1; m <= 2 * n; ++m) {
                CHECK(oracle::cycle_type_of(h) == ct.power(m));
                h = oracle::compose(h, g);
            }
        }
}

TEST_CASE("power composes multiplicatively") {
    std::mt19937 rng(20240817);
    for (unsigned n : {5u, 9u, 14u, 22u}) {
        auto types = enumerate_cycle_types(n);
        std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
        std::uniform_int_distribution<unsigned> exp(1, 12);
        for (int trial = 0; trial < 200; ++trial) {
            const CycleType& ct = types[pick(rng)];
            unsigned a = exp(rng), b = exp(rng);
            CHECK(ct.power(1) == ct);
            CHECK(ct.power(a).degree() == n);
            CHECK(ct.power(a).power(b) == ct.power(a * b));
        }
    }
}

TEST_CASE("bracket notation") {
    CHECK(CycleType::identity(4).to_string() == "[1^4]");
    CHECK(CycleType(7, 2, {{2, 1}, {3, 1}}).to_string() == "[1^2,2^1,3^1]");
    CHECK(CycleType(5, 0, {{5, 1}}).to_string() == "[5^1]");
}
