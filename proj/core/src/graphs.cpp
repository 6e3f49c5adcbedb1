#include "divgraph/graphs.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "divgraph/class_sizes.hpp"
#include "divgraph/errors.hpp"

namespace divgraph {

namespace {

SizeSet finalize_size_set(std::map<std::string, SizeSet::Entry>&& by_decimal) {
    std::vector<SizeSet::Entry> entries;
    entries.reserve(by_decimal.size());
    for (auto& [dec, entry] : by_decimal)
        entries.push_back(std::move(entry));
    std::sort(entries.begin(), entries.end(),
              [](const SizeSet::Entry& a, const SizeSet::Entry& b) {
                  if (a.decimal.size() != b.decimal.size())
                      return a.decimal.size() < b.decimal.size();
                  return a.decimal < b.decimal;
              });
    return SizeSet{std::move(entries)};
}

void add_size(std::map<std::string, SizeSet::Entry>& by_decimal,
              const FactoredNat& size, const std::string& label) {
    if (size.is_one())
        return;
    std::string dec = size.to_decimal();
    auto it = by_decimal.find(dec);
    if (it == by_decimal.end())
        it = by_decimal.emplace(dec, SizeSet::Entry{size, dec, {}}).first;
    it->second.origins.push_back(label);
}

} // namespace

SizeSet size_set_sym(unsigned n) {
    std::map<std::string, SizeSet::Entry> acc;
    for (const CycleType& ct : enumerate_cycle_types(n))
        add_size(acc, class_size_sym(ct), ct.to_string());
    return finalize_size_set(std::move(acc));
}

SizeSet size_set_alt(unsigned n) {
    std::map<std::string, SizeSet::Entry> acc;
    for (const CycleType& ct : enumerate_cycle_types(n)) {
        if (ct.parity() != Parity::even)
            continue;
        AltClassSizes alt = class_sizes_alt(ct);
        if (alt.split) {
            // Two half-classes of equal size: one vertex, two labels.
            add_size(acc, alt.size, ct.to_string() + "+");
            add_size(acc, alt.size, ct.to_string() + "-");
        } else {
            add_size(acc, alt.size, ct.to_string());
        }
    }
    return finalize_size_set(std::move(acc));
}

SizeSet size_set_from_values(std::vector<FactoredNat> values) {
    std::map<std::string, SizeSet::Entry> acc;
    for (const FactoredNat& v : values) {
        std::string dec = v.to_decimal();
        auto it = acc.find(dec);
        if (v.is_one())
            continue;
        if (it == acc.end())
            acc.emplace(dec, SizeSet::Entry{v, dec, {dec}});
    }
    return finalize_size_set(std::move(acc));
}

namespace {

// Dense exponent rows over the union of primes occurring in X, packed
// 8 exponent bytes per 64-bit word so one-divides-the-other reduces to a
// couple of word operations. Falls back to a plain loop when some exponent
// does not fit in 7 bits.
class DivTable {
public:
    explicit DivTable(const SizeSet& x) {
        std::set<unsigned> prime_set;
        unsigned max_exp = 0;
        for (const auto& e : x.entries)
            for (auto [p, k] : e.size.factors()) {
                prime_set.insert(p);
                max_exp = std::max(max_exp, k);
            }
        primes_.assign(prime_set.begin(), prime_set.end());
        n_ = x.entries.size();
        swar_ = max_exp < 128;
        if (swar_) {
            words_ = (primes_.size() + 7) / 8;
            packed_.assign(n_ * std::max<std::size_t>(words_, 1), 0);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t k = 0; k < primes_.size(); ++k) {
                    std::uint64_t e = x.entries[i].size.exponent(primes_[k]);
                    packed_[i * words_ + k / 8] |= e << (8 * (k % 8));
                }
        } else {
            wide_.assign(n_ * primes_.size(), 0);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t k = 0; k < primes_.size(); ++k)
                    wide_[i * primes_.size() + k] = x.entries[i].size.exponent(primes_[k]);
        }
    }

    // entry i divides entry j
    bool divides(std::size_t i, std::size_t j) const {
        if (swar_) {
            constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
            const std::uint64_t* a = &packed_[i * words_];
            const std::uint64_t* b = &packed_[j * words_];
            for (std::size_t w = 0; w < words_; ++w)
                if ((((b[w] | kHigh) - a[w]) & kHigh) != kHigh)
                    return false;
            return true;
        }
        const std::uint32_t* a = &wide_[i * primes_.size()];
        const std::uint32_t* b = &wide_[j * primes_.size()];
        for (std::size_t k = 0; k < primes_.size(); ++k)
            if (a[k] > b[k])
                return false;
        return true;
    }

    const std::vector<unsigned>& primes() const { return primes_; }

private:
    std::vector<unsigned> primes_;
    std::vector<std::uint64_t> packed_;
    std::vector<std::uint32_t> wide_;
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    bool swar_ = false;
};

UGraph make_graph(GraphKind kind, std::vector<std::string> keys,
                  std::vector<std::pair<int, int>> edges,
                  std::size_t prime_part = 0) {
    UGraph g;
    g.kind = kind;
    g.vertex_keys = std::move(keys);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.prime_part_count = prime_part;
    g.adjacency.assign(g.vertex_keys.size(), {});
    for (auto [i, j] : g.edges) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
    }
    return g;
}

std::vector<std::string> size_keys(const SizeSet& x) {
    std::vector<std::string> keys;
    keys.reserve(x.entries.size());
    for (const auto& e : x.entries)
        keys.push_back(e.decimal);
    return keys;
}

} // namespace

UGraph build_D(const SizeSet& x) {
    DivTable table(x);
    std::vector<std::pair<int, int>> edges;
    // Entries ascend, so only smaller-divides-larger can hold.
    for (std::size_t i = 0; i < x.entries.size(); ++i)
        for (std::size_t j = i + 1; j < x.entries.size(); ++j)
            if (table.divides(i, j))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return make_graph(GraphKind::D, size_keys(x), std::move(edges));
}

UGraph build_Gamma(const SizeSet& x) {
    // Shared-prime bitmasks: gcd > 1 iff the masks intersect.
    DivTable table(x);
    const auto& primes = table.primes();
    std::size_t words = (primes.size() + 63) / 64;
    std::vector<std::uint64_t> masks(x.entries.size() * std::max<std::size_t>(words, 1), 0);
    for (std::size_t i = 0; i < x.entries.size(); ++i)
        for (std::size_t k = 0; k < primes.size(); ++k)
            if (x.entries[i].size.exponent(primes[k]) > 0)
                masks[i * words + k / 64] |= 1ULL << (k % 64);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < x.entries.size(); ++i)
        for (std::size_t j = i + 1; j < x.entries.size(); ++j) {
            bool shared = false;
            for (std::size_t w = 0; w < words && !shared; ++w)
                shared = (masks[i * words + w] & masks[j * words + w]) != 0;
            if (shared)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return make_graph(GraphKind::Gamma, size_keys(x), std::move(edges));
}

UGraph build_Delta(const SizeSet& x) {
    std::set<unsigned> prime_set;
    for (const auto& e : x.entries)
        for (auto [p, k] : e.size.factors())
            prime_set.insert(p);
    std::vector<unsigned> primes(prime_set.begin(), prime_set.end());
    std::map<unsigned, int> index;
    std::vector<std::string> keys;
    for (unsigned p : primes) {
        index[p] = static_cast<int>(keys.size());
        keys.push_back(std::to_string(p));
    }
    std::set<std::pair<int, int>> edge_set;
    for (const auto& e : x.entries) {
        std::vector<int> present;
        for (auto [p, k] : e.size.factors())
            present.push_back(index[p]);
        for (std::size_t a = 0; a < present.size(); ++a)
            for (std::size_t b = a + 1; b < present.size(); ++b)
                edge_set.emplace(present[a], present[b]);
    }
    return make_graph(GraphKind::Delta, std::move(keys),
                      {edge_set.begin(), edge_set.end()});
}

UGraph build_B(const SizeSet& x) {
    std::set<unsigned> prime_set;
    for (const auto& e : x.entries)
        for (auto [p, k] : e.size.factors())
            prime_set.insert(p);
    std::vector<std::string> keys;
    std::map<unsigned, int> index;
    for (unsigned p : prime_set) {
        index[p] = static_cast<int>(keys.size());
        keys.push_back("p:" + std::to_string(p));
    }
    std::size_t prime_part = keys.size();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        int v = static_cast<int>(prime_part + i);
        keys.push_back(x.entries[i].decimal);
        for (auto [p, k] : x.entries[i].size.factors())
            edges.emplace_back(index[p], v);
    }
    return make_graph(GraphKind::B, std::move(keys), std::move(edges), prime_part);
}

UGraph build_graph(const SizeSet& x, GraphKind kind) {
    switch (kind) {
    case GraphKind::D: return build_D(x);
    case GraphKind::Gamma: return build_Gamma(x);
    case GraphKind::Delta: return build_Delta(x);
    case GraphKind::B: return build_B(x);
    }
    throw std::invalid_argument("build_graph: unknown kind");
}

namespace {

// Numeric-friendly key order: shorter decimal strings first, then lex.
bool key_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

} // namespace

ComponentReport components(const UGraph& g, bool with_diameters) {
    ComponentReport rep;
    std::size_t n = g.vertex_count();
    if (n == 0) {
        rep.null_graph = true;
        return rep;
    }
    std::vector<int> comp(n, -1);
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1)
            continue;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        comp[s] = count;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adjacency[u])
                if (comp[v] == -1) {
                    comp[v] = count;
                    q.push(v);
                }
        }
        ++count;
    }

    std::vector<std::vector<int>> members(count);
    for (std::size_t v = 0; v < n; ++v)
        members[comp[v]].push_back(static_cast<int>(v));

    // Eccentricity sweep: BFS from every vertex of each component.
    std::vector<int> diam(count, with_diameters ? 0 : -1);
    std::vector<int> dist(n);
    for (std::size_t s = 0; with_diameters && s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(static_cast<int>(s));
        dist[s] = 0;
        int ecc = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            ecc = std::max(ecc, dist[u]);
            for (int v : g.adjacency[u])
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        diam[comp[s]] = std::max(diam[comp[s]], ecc);
    }

    struct Comp {
        std::vector<std::string> keys;
        int diameter;
    };
    std::vector<Comp> comps;
    comps.reserve(count);
    for (int c = 0; c < count; ++c) {
        std::vector<std::string> keys;
        keys.reserve(members[c].size());
        for (int v : members[c])
            keys.push_back(g.vertex_keys[v]);
        std::sort(keys.begin(), keys.end(), key_less);
        comps.push_back({std::move(keys), diam[c]});
    }
    std::sort(comps.begin(), comps.end(),
              [](const Comp& a, const Comp& b) { return key_less(a.keys[0], b.keys[0]); });

    rep.component_count = count;
    if (!with_diameters)
        rep.overall_diameter = -1;
    for (auto& c : comps) {
        if (c.keys.size() == 1)
            rep.isolated.push_back(c.keys[0]);
        rep.overall_diameter = std::max(rep.overall_diameter, c.diameter);
        rep.components.push_back(std::move(c.keys));
        rep.diameters.push_back(c.diameter);
    }
    return rep;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = static_cast<int>(i);
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[b] = a;
    }
};

} // namespace

ConnectivityScan scan_D(const SizeSet& x) {
    std::size_t n = x.entries.size();
    ConnectivityScan scan;
    scan.component_of.assign(n, -1);
    scan.isolated.assign(n, 1);
    if (n == 0)
        return scan;

    DivTable table(x);
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (table.divides(i, j)) {
                uf.unite(static_cast<int>(i), static_cast<int>(j));
                scan.isolated[i] = 0;
                scan.isolated[j] = 0;
                ++scan.edge_count;
            }

    std::map<int, int> root_to_id;
    for (std::size_t v = 0; v < n; ++v) {
        int root = uf.find(static_cast<int>(v));
        auto [it, inserted] = root_to_id.emplace(root, scan.component_count);
        if (inserted) {
            ++scan.component_count;
            scan.component_sizes.push_back(0);
        }
        scan.component_of[v] = it->second;
        ++scan.component_sizes[it->second];
    }
    return scan;
}

} // namespace divgraph
