#include <doctest.h>

#include "divgraph/class_sizes.hpp"
#include "divgraph/errors.hpp"

using namespace divgraph;

TEST_CASE("centralizer orders in S_n") {
    CHECK(centralizer_order_sym(CycleType::identity(6)).to_decimal() == "720");
    CHECK(centralizer_order_sym(CycleType(5, 1, {{2, 2}})).to_decimal() == "8");
    // p-cycle: p * (n - p)!
    CHECK(centralizer_order_sym(CycleType(12, 1, {{11, 1}})).to_decimal() == "11");
    CHECK(centralizer_order_sym(CycleType(10, 3, {{7, 1}})).to_decimal() == "42");
}

TEST_CASE("class sizes in S_n") {
    CHECK(class_size_sym(CycleType(5, 3, {{2, 1}})).to_decimal() == "10");
    CHECK(class_size_sym(CycleType(5, 0, {{5, 1}})).to_decimal() == "24");
    CHECK(class_size_sym(CycleType::identity(9)).to_decimal() == "1");
}

TEST_CASE("class sizes in A_n") {
    AltClassSizes five = class_sizes_alt(CycleType(5, 0, {{5, 1}}));
    CHECK(five.split);
    CHECK(five.size.to_decimal() == "12");
    AltClassSizes three = class_sizes_alt(CycleType(5, 2, {{3, 1}}));
    CHECK_FALSE(three.split);
    CHECK(three.size.to_decimal() == "20");
    AltClassSizes double_transposition = class_sizes_alt(CycleType(5, 1, {{2, 2}}));
    CHECK_FALSE(double_transposition.split);
    CHECK(double_transposition.size.to_decimal() == "15");
    CHECK_THROWS_AS(class_sizes_alt(CycleType(5, 3, {{2, 1}})), std::invalid_argument);
}

TEST_CASE("orbit-stabilizer round trip") {
    for (unsigned n = 1; n <= 20; ++n) {
        FactoredNat nfact = FactoredNat::factorial(n);
        for (const CycleType& ct : enumerate_cycle_types(n))
            CHECK(class_size_sym(ct) * centralizer_order_sym(ct) == nfact);
    }
}

TEST_CASE("class sizes partition the group") {
    for (unsigned n = 1; n <= 20; ++n) {
        BigInt total = 0;
        for (const CycleType& ct : enumerate_cycle_types(n))
            total += class_size_sym(ct).to_int();
        CHECK(total == FactoredNat::factorial(n).to_int());
    }
    for (unsigned n = 2; n <= 20; ++n) {
        BigInt total = 0;
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            if (ct.parity() != Parity::even)
                continue;
            AltClassSizes alt = class_sizes_alt(ct);
            total += alt.size.to_int() * (alt.split ? 2 : 1);
        }
        CHECK(total * 2 == FactoredNat::factorial(n).to_int());
    }
}

TEST_CASE("A_n size is the S_n size or exactly half of it") {
    for (unsigned n = 2; n <= 16; ++n)
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            if (ct.parity() != Parity::even)
                continue;
            ClassRecord rec = class_record(ct);
            REQUIRE(rec.size_alt.has_value());
            BigInt sym = rec.size_sym.to_int();
            BigInt alt = rec.size_alt->to_int();
            CHECK((alt == sym || 2 * alt == sym));
            CHECK(rec.split == (2 * alt == sym));
        }
}
