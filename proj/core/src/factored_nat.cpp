#include "divgraph/factored_nat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "divgraph/errors.hpp"

namespace divgraph {

FactoredNat FactoredNat::of(std::uint64_t v) {
    if (v == 0)
        throw std::invalid_argument("FactoredNat::of: zero is not representable");
    FactoredNat r;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        while (v % p == 0) {
            ++r.exps_[static_cast<unsigned>(p)];
            v /= p;
        }
    }
    if (v > 1)
        ++r.exps_[static_cast<unsigned>(v)];
    return r;
}

FactoredNat FactoredNat::prime_power(unsigned p, unsigned e) {
    FactoredNat r;
    if (e > 0)
        r.exps_[p] = e;
    return r;
}

FactoredNat FactoredNat::factorial(unsigned n) {
    FactoredNat r;
    for (unsigned p : primes_up_to(n)) {
        unsigned e = 0;
        for (std::uint64_t q = p; q <= n; q *= p)
            e += n / static_cast<unsigned>(q);
        r.exps_[p] = e;
    }
    return r;
}

std::optional<FactoredNat> FactoredNat::try_factor(const BigInt& v, unsigned prime_bound) {
    if (v <= 0)
        throw std::invalid_argument("FactoredNat::try_factor: value must be positive");
    FactoredNat r;
    BigInt rest = v;
    for (unsigned p : primes_up_to(prime_bound)) {
        if (rest == 1 || BigInt(p) * p > rest)
            break;
        while (rest % p == 0) {
            ++r.exps_[p];
            rest /= p;
        }
    }
    if (rest != 1) {
        // rest has no prime factor below min(bound, sqrt(rest)); it is either
        // a prime <= bound (fine) or carries a factor beyond the bound.
        if (rest > prime_bound)
            return std::nullopt;
        ++r.exps_[rest.convert_to<unsigned>()];
    }
    return r;
}

FactoredNat& FactoredNat::operator*=(const FactoredNat& rhs) {
    for (auto [p, e] : rhs.exps_)
        exps_[p] += e;
    return *this;
}

FactoredNat FactoredNat::pow(unsigned e) const {
    FactoredNat r;
    if (e == 0)
        return r;
    for (auto [p, k] : exps_)
        r.exps_[p] = k * e;
    return r;
}

FactoredNat FactoredNat::div_exact(const FactoredNat& d) const {
    FactoredNat r = *this;
    for (auto [p, e] : d.exps_) {
        auto it = r.exps_.find(p);
        if (it == r.exps_.end() || it->second < e)
            throw internal_error("div_exact: divisor exponent exceeds dividend at prime " +
                                 std::to_string(p));
        it->second -= e;
        if (it->second == 0)
            r.exps_.erase(it);
    }
    return r;
}

FactoredNat FactoredNat::halved() const {
    auto it = exps_.find(2);
    if (it == exps_.end())
        throw internal_error("halved: value is odd");
    return div_exact(prime_power(2, 1));
}

bool FactoredNat::divides(const FactoredNat& other) const {
    for (auto [p, e] : exps_) {
        auto it = other.exps_.find(p);
        if (it == other.exps_.end() || it->second < e)
            return false;
    }
    return true;
}

FactoredNat FactoredNat::gcd(const FactoredNat& other) const {
    FactoredNat r;
    for (auto [p, e] : exps_) {
        auto it = other.exps_.find(p);
        if (it != other.exps_.end())
            r.exps_[p] = std::min(e, it->second);
    }
    return r;
}

unsigned FactoredNat::exponent(unsigned p) const {
    auto it = exps_.find(p);
    return it == exps_.end() ? 0 : it->second;
}

BigInt FactoredNat::to_int() const {
    BigInt v = 1;
    for (auto [p, e] : exps_)
        v *= boost::multiprecision::pow(BigInt(p), e);
    return v;
}

std::string FactoredNat::to_decimal() const {
    return to_int().str();
}

bool value_less(const FactoredNat& a, const FactoredNat& b) {
    return a.to_int() < b.to_int();
}

std::vector<unsigned> primes_up_to(unsigned bound) {
    std::vector<unsigned> primes;
    if (bound < 2)
        return primes;
    std::vector<char> composite(bound + 1, 0);
    for (unsigned p = 2; p <= bound; ++p) {
        if (composite[p])
            continue;
        primes.push_back(p);
        for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= bound; q += p)
            composite[static_cast<std::size_t>(q)] = 1;
    }
    return primes;
}

bool is_prime(unsigned n) {
    if (n < 2)
        return false;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace divgraph
