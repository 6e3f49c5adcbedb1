#ifndef DIVGRAPH_CYCLE_TYPE_HPP
#define DIVGRAPH_CYCLE_TYPE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace divgraph {

enum class Parity { even, odd };

// One block of equal-length cycles: `count` cycles of length `length` (>= 2).
struct CyclePart {
    unsigned length;
    unsigned count;
    auto operator<=>(const CyclePart&) const = default;
};

// The cycle type of a permutation of degree n, kept in canonical form:
// fixed points counted separately, non-trivial part lengths strictly
// increasing. Immutable value type; equality is structural.
class CycleType {
public:
    // Validates n >= 1, fixed + sum(count*length) == n, lengths >= 2 and
    // strictly increasing, counts >= 1. Throws std::invalid_argument.
    CycleType(unsigned n, unsigned fixed_points, std::vector<CyclePart> parts);

    static CycleType identity(unsigned n);

    // Builds from a full list of cycle lengths (including 1s), any order.
    static CycleType from_cycle_lengths(unsigned n, std::vector<unsigned> lengths);

    unsigned degree() const { return n_; }
    unsigned fixed_points() const { return fixed_; }
    const std::vector<CyclePart>& parts() const { return parts_; }
    bool is_identity() const { return parts_.empty(); }

    Parity parity() const;

    // True iff the S_n-class of this type breaks into two equal A_n-classes:
    // every part length odd, every multiplicity 1, at most one fixed point.
    // Throws std::invalid_argument for odd types (they are not in A_n).
    bool splits_in_alternating() const;

    // Cycle type of the m-th power: a cycle of length L contributes
    // gcd(L, m) cycles of length L / gcd(L, m). m == 0 is rejected.
    CycleType power(unsigned m) const;

    // Bracket notation with explicit exponents, e.g. "[1^2,2^1,3^1]".
    std::string to_string() const;

    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;

private:
    unsigned n_;
    unsigned fixed_;
    std::vector<CyclePart> parts_;
};

// All cycle types of degree n, one per integer partition of n, in a fixed
// deterministic order: ascending lexicographic on the sorted part list, so
// the identity comes first. Throws std::invalid_argument for n == 0.
std::vector<CycleType> enumerate_cycle_types(unsigned n);

// Independent partition counter (Euler's pentagonal recurrence), used to
// cross-check enumeration counts. Values grow fast; valid for n <= 100.
std::uint64_t partition_number(unsigned n);

} // namespace divgraph

#endif
