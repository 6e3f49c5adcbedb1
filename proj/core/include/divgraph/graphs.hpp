#ifndef DIVGRAPH_GRAPHS_HPP
#define DIVGRAPH_GRAPHS_HPP

#include <string>
#include <utility>
#include <vector>

#include "divgraph/factored_nat.hpp"

namespace divgraph {

// The deduplicated set of class sizes X* = X \ {1}, ascending, with a
// back-map from each size to the class labels that attain it. Split A_n
// half-classes are labelled with trailing "+" / "-".
struct SizeSet {
    struct Entry {
        FactoredNat size;
        std::string decimal; // cached decimal rendering of size
        std::vector<std::string> origins;
    };
    std::vector<Entry> entries; // strictly ascending by value, none equal to 1

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
};

SizeSet size_set_sym(unsigned n);
SizeSet size_set_alt(unsigned n);

// Raw X from user-supplied values: 1s and duplicates dropped. Origin labels
// are the decimal values themselves.
SizeSet size_set_from_values(std::vector<FactoredNat> values);

enum class GraphKind { D, Gamma, Delta, B };

// Undirected simple graph over string-keyed vertices. For B the first
// prime_part_count vertices are the prime side.
struct UGraph {
    GraphKind kind = GraphKind::D;
    std::vector<std::string> vertex_keys;
    std::vector<std::pair<int, int>> edges; // i < j, lexicographically sorted
    std::vector<std::vector<int>> adjacency;
    std::size_t prime_part_count = 0; // B only

    std::size_t vertex_count() const { return vertex_keys.size(); }
};

// D(X): edge {a, b} iff a != b and a | b or b | a.
UGraph build_D(const SizeSet& x);
// Gamma(X): edge iff gcd(a, b) > 1.
UGraph build_Gamma(const SizeSet& x);
// Delta(X): vertices are the primes dividing members of X*; edge {p, q} iff
// pq divides some single member.
UGraph build_Delta(const SizeSet& x);
// B(X): bipartite, primes vs sizes, edge iff p | x. Prime vertices are
// keyed "p:<prime>" to keep the two sides distinct.
UGraph build_B(const SizeSet& x);

UGraph build_graph(const SizeSet& x, GraphKind kind);

struct ComponentReport {
    int component_count = 0;
    std::vector<std::vector<std::string>> components; // sorted canonically
    std::vector<int> diameters;                       // parallel to components
    int overall_diameter = 0;
    std::vector<std::string> isolated;                // K_1 components
    bool null_graph = false;                          // no vertices at all
};

// BFS components; per-component diameter by BFS from every vertex. With
// with_diameters off the quadratic eccentricity sweep is skipped and all
// reported diameters are -1 (used above the diameter budget).
ComponentReport components(const UGraph& g, bool with_diameters = true);

// Connectivity structure of D(X) without materializing the edge set.
// Union-find over the ascending size list; used for large sweeps where the
// quadratic divisibility pass is affordable but edge storage is not.
struct ConnectivityScan {
    std::vector<int> component_of;    // per vertex
    std::vector<int> component_sizes; // indexed by component id
    std::vector<char> isolated;       // per vertex, degree == 0
    int component_count = 0;
    std::uint64_t edge_count = 0;
};
ConnectivityScan scan_D(const SizeSet& x);

} // namespace divgraph

#endif
