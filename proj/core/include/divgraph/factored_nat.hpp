#ifndef DIVGRAPH_FACTORED_NAT_HPP
#define DIVGRAPH_FACTORED_NAT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace divgraph {

using BigInt = boost::multiprecision::cpp_int;

// A positive integer stored as its prime factorization. Divisibility is a
// pointwise exponent comparison; no division ever happens. The empty map
// is 1. Canonical form: no zero exponents, every key prime.
class FactoredNat {
public:
    FactoredNat() = default; // 1

    // Factor a machine integer by trial division. Throws for v == 0.
    static FactoredNat of(std::uint64_t v);

    static FactoredNat prime_power(unsigned p, unsigned e);

    // Exact factorization of n! via Legendre's formula:
    // v_p(n!) = sum_{j>=1} floor(n / p^j).
    static FactoredNat factorial(unsigned n);

    // Factor an arbitrary-precision integer by trial division with primes
    // up to prime_bound. Returns nullopt if a cofactor > 1 remains.
    static std::optional<FactoredNat> try_factor(const BigInt& v, unsigned prime_bound);

    FactoredNat& operator*=(const FactoredNat& rhs);
    friend FactoredNat operator*(FactoredNat a, const FactoredNat& b) { return a *= b; }

    FactoredNat pow(unsigned e) const;

    // Exponent-wise difference; throws internal_error if any exponent
    // would go negative.
    FactoredNat div_exact(const FactoredNat& d) const;

    // Divide by 2 once. Throws internal_error if the value is odd.
    FactoredNat halved() const;

    // True iff *this divides other, i.e. every exponent here is <= the
    // matching exponent there.
    bool divides(const FactoredNat& other) const;

    FactoredNat gcd(const FactoredNat& other) const;

    bool is_one() const { return exps_.empty(); }
    unsigned exponent(unsigned p) const;
    const std::map<unsigned, unsigned>& factors() const { return exps_; }

    BigInt to_int() const;
    std::string to_decimal() const;

    bool operator==(const FactoredNat&) const = default;

private:
    std::map<unsigned, unsigned> exps_;
};

// Value comparison (a < b as integers) without materializing big integers
// where possible; falls back to exact conversion.
bool value_less(const FactoredNat& a, const FactoredNat& b);

// Primes up to and including `bound`, ascending.
std::vector<unsigned> primes_up_to(unsigned bound);

bool is_prime(unsigned n);

} // namespace divgraph

#endif
