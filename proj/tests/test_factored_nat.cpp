#include <doctest.h>

#include <random>

#include "divgraph/errors.hpp"
#include "divgraph/factored_nat.hpp"

using namespace divgraph;

TEST_CASE("factorial factorization (Legendre)") {
    CHECK(FactoredNat::factorial(0).is_one());
    CHECK(FactoredNat::factorial(10).exponent(2) == 8); // 5 + 2 + 1
    FactoredNat six = FactoredNat::factorial(6);
    CHECK(six.exponent(2) == 4);
    CHECK(six.exponent(3) == 2);
    CHECK(six.exponent(5) == 1);
    CHECK(six.to_decimal() == "720");
    // converting back reproduces n!
    BigInt expect = 1;
    for (unsigned n = 1; n <= 25; ++n) {
        expect *= n;
        CHECK(FactoredNat::factorial(n).to_int() == expect);
    }
}

TEST_CASE("trial-division factorization round-trips") {
    for (std::uint64_t v : {1ULL, 2ULL, 97ULL, 1024ULL, 720720ULL, 999983ULL})
        CHECK(FactoredNat::of(v).to_int() == v);
    CHECK_THROWS_AS(FactoredNat::of(0), std::invalid_argument);
}

TEST_CASE("divides") {
    CHECK(FactoredNat::of(24).divides(FactoredNat::of(1080)));
    CHECK(FactoredNat().divides(FactoredNat::of(7)));
    CHECK_FALSE(FactoredNat::of(10).divides(FactoredNat::of(15)));
}

TEST_CASE("divides agrees with remainder-is-zero on random factored pairs") {
    std::mt19937 rng(99173);
    auto primes = primes_up_to(50);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<unsigned> exp(1, 5);
    std::uniform_int_distribution<int> nfac(0, 6);
    auto random_factored = [&] {
        FactoredNat v;
        int k = nfac(rng);
        for (int i = 0; i < k; ++i)
            v *= FactoredNat::prime_power(primes[pick(rng)], exp(rng));
        return v;
    };
    for (int trial = 0; trial < 10000; ++trial) {
        FactoredNat a = random_factored();
        FactoredNat b = random_factored();
        CHECK(a.divides(b) == (b.to_int() % a.to_int() == 0));
    }
}

TEST_CASE("exact division and halving") {
    FactoredNat v = FactoredNat::of(1080);
    CHECK(v.div_exact(FactoredNat::of(24)).to_decimal() == "45");
    CHECK_THROWS_AS(FactoredNat::of(10).div_exact(FactoredNat::of(4)), internal_error);
    CHECK(FactoredNat::of(10).halved().to_decimal() == "5");
    CHECK_THROWS_AS(FactoredNat::of(15).halved(), internal_error);
}

TEST_CASE("gcd") {
    CHECK(FactoredNat::of(12).gcd(FactoredNat::of(18)).to_decimal() == "6");
    CHECK(FactoredNat::of(10).gcd(FactoredNat::of(21)).is_one());
}

TEST_CASE("try_factor respects the prime bound") {
    auto ok = FactoredNat::try_factor(BigInt("123456789000"), 1000000);
    REQUIRE(ok.has_value());
    CHECK(ok->to_int() == BigInt("123456789000"));
    // 1000003 is prime and above the bound
    CHECK_FALSE(FactoredNat::try_factor(BigInt("1000003"), 1000000).has_value());
    CHECK(FactoredNat::try_factor(BigInt("999983"), 1000000).has_value());
}

TEST_CASE("serialization") {
    FactoredNat v = FactoredNat::of(1080);
    CHECK(v.to_decimal() == "1080");
    CHECK(v.factors() == std::map<unsigned, unsigned>{{2, 3}, {3, 3}, {5, 1}});
}
