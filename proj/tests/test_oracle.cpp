#include <doctest.h>

#include <set>

#include "divgraph/errors.hpp"
#include "divgraph/oracle.hpp"

using namespace divgraph;
using namespace divgraph::oracle;

TEST_CASE("group enumeration counts") {
    auto count = [](unsigned n, bool alt) {
        std::uint64_t c = 0;
        enumerate_group(n, alt, [&](const Perm&) { ++c; });
        return c;
    };
    CHECK(count(3, false) == 6);
    CHECK(count(4, true) == 12);
    CHECK(count(8, false) == 40320);
    CHECK_THROWS_AS(count(9, false), capacity_error);
}

TEST_CASE("tally of S_3") {
    auto tally = tally_class_sizes(3, false);
    REQUIRE(tally.size() == 3);
    CHECK(tally.at("[1^3]") == 1);
    CHECK(tally.at("[1^1,2^1]") == 3);
    CHECK(tally.at("[3^1]") == 2);
}

TEST_CASE("conjugation orbits detect A_n splitting") {
    auto orbit_sizes = [](unsigned n) {
        std::multiset<std::uint64_t> sizes;
        for (const auto& o : conjugacy_orbits(n, true))
            sizes.insert(o.size);
        return sizes;
    };
    CHECK(orbit_sizes(4) == std::multiset<std::uint64_t>{1, 3, 4, 4});
    CHECK(orbit_sizes(5) == std::multiset<std::uint64_t>{1, 12, 12, 15, 20});
    CHECK_THROWS_AS(conjugacy_orbits(8, true), capacity_error);
}

TEST_CASE("brute centralizer orders") {
    CHECK(centralizer_order(4, representative(CycleType::identity(4)), false) == 24);
    // (1 2)(3 4) in S_5: 2^2 * 2! * 1! = 8
    CHECK(centralizer_order(5, representative(CycleType(5, 1, {{2, 2}})), false) == 8);
    // 5-cycle in A_5: full cyclic group of order 5
    CHECK(centralizer_order(5, representative(CycleType(5, 0, {{5, 1}})), true) == 5);
    CHECK_THROWS_AS(centralizer_order(8, Perm{0, 1, 2, 3, 4, 5, 6, 7}, false),
                    capacity_error);
}

TEST_CASE("representative round-trips through cycle_type_of") {
    for (unsigned n = 1; n <= 8; ++n)
        for (const CycleType& ct : enumerate_cycle_types(n))
            CHECK(cycle_type_of(representative(ct)) == ct);
}

TEST_CASE("alternating tally route agrees with the orbit route") {
    for (unsigned n = 4; n <= 7; ++n) {
        std::multiset<std::uint64_t> via_orbits;
        for (const auto& o : conjugacy_orbits(n, true))
            via_orbits.insert(o.size);
        std::multiset<std::uint64_t> via_tally;
        for (const auto& t : alt_class_sizes_via_tally(n)) {
            via_tally.insert(t.class_size);
            if (t.split)
                via_tally.insert(t.class_size);
        }
        CHECK(via_orbits == via_tally);
    }
}
