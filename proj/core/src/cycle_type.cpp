#include "divgraph/cycle_type.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace divgraph {

CycleType::CycleType(unsigned n, unsigned fixed_points, std::vector<CyclePart> parts)
    : n_(n), fixed_(fixed_points), parts_(std::move(parts)) {
    if (n == 0)
        throw std::invalid_argument("CycleType: degree must be positive");
    unsigned long long total = fixed_;
    unsigned prev_len = 1;
    for (const auto& p : parts_) {
        if (p.length < 2)
            throw std::invalid_argument("CycleType: part length must be >= 2");
        if (p.length <= prev_len)
            throw std::invalid_argument("CycleType: part lengths must be strictly increasing");
        if (p.count == 0)
            throw std::invalid_argument("CycleType: part multiplicity must be >= 1");
        prev_len = p.length;
        total += static_cast<unsigned long long>(p.length) * p.count;
    }
    if (total != n_)
        throw std::invalid_argument("CycleType: parts do not sum to degree");
}

CycleType CycleType::identity(unsigned n) {
    return CycleType(n, n, {});
}

CycleType CycleType::from_cycle_lengths(unsigned n, std::vector<unsigned> lengths) {
    unsigned fixed = 0;
    std::map<unsigned, unsigned> counts;
    for (unsigned len : lengths) {
        if (len == 0)
            throw std::invalid_argument("CycleType: zero cycle length");
        if (len == 1)
            ++fixed;
        else
            ++counts[len];
    }
    std::vector<CyclePart> parts;
    parts.reserve(counts.size());
    for (auto [len, cnt] : counts)
        parts.push_back({len, cnt});
    return CycleType(n, fixed, std::move(parts));
}

Parity CycleType::parity() const {
    unsigned transpositions = 0;
    for (const auto& p : parts_)
        transpositions += p.count * (p.length - 1);
    return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

bool CycleType::splits_in_alternating() const {
    if (parity() == Parity::odd)
        throw std::invalid_argument("splits_in_alternating: odd cycle type is not in A_n");
    if (parts_.empty() || fixed_ > 1)
        return false; // identity never splits
    for (const auto& p : parts_) {
        if (p.count != 1 || p.length % 2 == 0)
            return false;
    }
    return true;
}

CycleType CycleType::power(unsigned m) const {
    if (m == 0)
        throw std::invalid_argument("power: exponent must be >= 1");
    unsigned fixed = fixed_;
    std::map<unsigned, unsigned> counts;
    for (const auto& p : parts_) {
        unsigned g = std::gcd(p.length, m);
        unsigned new_len = p.length / g;
        unsigned new_cnt = p.count * g;
        if (new_len == 1)
            fixed += new_cnt;
        else
            counts[new_len] += new_cnt;
    }
    std::vector<CyclePart> parts;
    parts.reserve(counts.size());
    for (auto [len, cnt] : counts)
        parts.push_back({len, cnt});
    return CycleType(n_, fixed, std::move(parts));
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    if (fixed_ > 0) {
        os << "1^" << fixed_;
        first = false;
    }
    for (const auto& p : parts_) {
        if (!first)
            os << ',';
        os << p.length << '^' << p.count;
        first = false;
    }
    os << ']';
    return os.str();
}

namespace {

// Partitions as non-decreasing part lists, ascending lexicographic order;
// the all-ones partition (identity type) comes first.
void gen_partitions(unsigned remaining, unsigned min_part,
                    std::vector<unsigned>& current,
                    std::vector<CycleType>& out, unsigned n) {
    if (remaining == 0) {
        out.push_back(CycleType::from_cycle_lengths(n, current));
        return;
    }
    for (unsigned part = min_part; part <= remaining; ++part) {
        current.push_back(part);
        gen_partitions(remaining - part, part, current, out, n);
        current.pop_back();
    }
}

} // namespace

std::vector<CycleType> enumerate_cycle_types(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("enumerate_cycle_types: n must be >= 1");
    std::vector<CycleType> out;
    std::vector<unsigned> current;
    gen_partitions(n, 1, current, out, n);
    return out;
}

std::uint64_t partition_number(unsigned n) {
    if (n > 100)
        throw std::invalid_argument("partition_number: supported up to n = 100");
    // Euler's pentagonal number recurrence.
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        std::uint64_t sum = 0;
        for (unsigned k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > static_cast<long long>(i) && g2 > static_cast<long long>(i))
                break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= static_cast<long long>(i))
                sum += sign * static_cast<long long>(p[i - g1]);
            if (g2 <= static_cast<long long>(i))
                sum += sign * static_cast<long long>(p[i - g2]);
        }
        p[i] = sum;
    }
    return p[n];
}

} // namespace divgraph
