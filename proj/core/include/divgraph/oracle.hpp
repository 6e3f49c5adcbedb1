#ifndef DIVGRAPH_ORACLE_HPP
#define DIVGRAPH_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "divgraph/cycle_type.hpp"

// Brute-force ground truth over actual permutations. Deliberately naive:
// nothing here may call into class_sizes; results are compared against the
// formula path by the verifiers.

namespace divgraph::oracle {

// One-line notation, 0-based: images[i] is the image of point i.
using Perm = std::vector<int>;

inline constexpr unsigned kMaxTallyDegree = 8;  // full enumeration / tallies
inline constexpr unsigned kMaxOrbitDegree = 7;  // conjugacy orbits, centralizers

Perm compose(const Perm& f, const Perm& g); // (f*g)(i) = f(g(i))
Perm inverse(const Perm& f);

// Permutation sign by inversion counting (independent of cycle structure).
int sign(const Perm& f);

// Cycle structure read off the permutation; used only to label results.
CycleType cycle_type_of(const Perm& f);

// An explicit representative permutation of the given cycle type.
Perm representative(const CycleType& ct);

// Visits each element of S_n (or A_n) exactly once.
// Throws capacity_error for n > kMaxTallyDegree.
void enumerate_group(unsigned n, bool alternating,
                     const std::function<void(const Perm&)>& visit);

// Element count per cycle type label (to_string form). In S_n this is the
// class size; in A_n it is the size of the full type, split or not.
std::map<std::string, std::uint64_t> tally_class_sizes(unsigned n, bool alternating);

// True conjugacy orbits, computed by closing a representative under
// conjugation by group generators (adjacent transpositions for S_n,
// 3-cycles (0 1 k) for A_n). Detects A_n class splitting without any
// centralizer formula. Throws capacity_error for n > kMaxOrbitDegree.
struct Orbit {
    std::string type_label;
    std::uint64_t size;
};
std::vector<Orbit> conjugacy_orbits(unsigned n, bool alternating);

// Count of group elements commuting with g.
// Throws capacity_error for n > kMaxOrbitDegree.
std::uint64_t centralizer_order(unsigned n, const Perm& g, bool alternating);

// A_n class sizes via tally plus an odd-commuter scan: a class of even
// permutations splits iff no odd permutation commutes with a
// representative. Works one degree beyond orbit mode since it only needs
// one pass over S_n per type. Throws capacity_error for n > kMaxTallyDegree.
struct AltTally {
    std::string type_label;
    std::uint64_t class_size; // per A_n-class
    bool split;
};
std::vector<AltTally> alt_class_sizes_via_tally(unsigned n);

} // namespace divgraph::oracle

#endif
