#ifndef DIVGRAPH_THEOREMS_HPP
#define DIVGRAPH_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "divgraph/graphs.hpp"

namespace divgraph {

enum class Verdict { pass, fail, report_only };

struct VerdictReport {
    std::string claim;
    std::vector<unsigned> range;         // n values checked
    Verdict verdict = Verdict::pass;
    std::optional<std::string> witness;  // counterexample description on fail
    std::vector<std::string> notes;      // report-only data, one line each
    double wall_ms = 0.0;
};

// Fixed-point-free product rule: for every cycle type of x with t = 0,
// prod k_i! * m_i^{k_i} divides x!, and twice that divides x! whenever some
// part length is >= 3.
VerdictReport verify_lemma2(unsigned x);

// For n > 2 and prime p >= n-1: p divides |C_{S_n}(g)| iff g is a p-cycle.
VerdictReport verify_lemma8(unsigned n);

// For n >= 9 and prime p >= n-2: p divides |C_{A_n}(g)| iff g is a p-cycle.
VerdictReport verify_lemma11(unsigned n);

// Isolated vertices of D(S_n), n > 6, are exactly the p-cycle class sizes
// for primes p in {n-1, n}; all other vertices form one component.
VerdictReport verify_theorem9(unsigned n);

// D(S_n) has at most two components; if disconnected, one is K_1. n >= 3.
VerdictReport verify_corollary2(unsigned n);

// Isolated vertices of D(A_n), n >= 9, are exactly the p-cycle vertices for
// primes p in {n-2, n-1, n}; all other vertices form one component.
VerdictReport verify_theorem13(unsigned n);

// D(A_n) has at most three components; if disconnected, all non-largest
// components are K_1. n >= 4.
VerdictReport verify_corollary14(unsigned n);

// Adjacency of each vertex to the 3-cycle vertex in D(A_n) for types
// containing a single 3-cycle, and distance <= 2 for types with >= 3 fixed
// points and no 3-cycle part. Checked via explicit divisibility witnesses.
VerdictReport verify_lemmas_14_15(unsigned n);

// Exact small-degree component structure: D(S_3), D(S_4), D(S_5) each have
// two components with the known vertex sets; D(A_4)..D(A_8) have at most
// three components, every non-largest one K_1, and the formula-built graph
// equals the oracle-built graph vertex-for-vertex and edge-for-edge.
VerdictReport reproduce_figures();

// diam(D(S_n)) <= 8, diam(D(A_n)) <= 10. Records the observed value.
VerdictReport diameter_bounds(unsigned n, bool alternating);

// Report-only sweep of observed diameters; flags any value > 4 as a
// candidate counterexample to the open diameter-4 conjecture. Never fails.
VerdictReport conjecture_sweep(unsigned n_max, bool alternating);

// Differential test of the formula path against the brute-force oracle:
// class sizes by tally (n <= max_tally), centralizer orders and A_n orbit
// splitting (n <= max_orbit).
VerdictReport verify_oracle(unsigned max_tally, unsigned max_orbit);

// Remark on powers: the vertex of g^m equals or is adjacent to the vertex
// of g, in D(S_n) and (for even pairs) D(A_n), for all types and m <= n.
VerdictReport verify_power_adjacency(unsigned n);

std::string to_string(Verdict v);

} // namespace divgraph

#endif
