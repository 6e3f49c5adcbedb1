#include "divgraph/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "divgraph/errors.hpp"

namespace divgraph::oracle {

Perm compose(const Perm& f, const Perm& g) {
    Perm r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = f[g[i]];
    return r;
}

Perm inverse(const Perm& f) {
    Perm r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[f[i]] = static_cast<int>(i);
    return r;
}

int sign(const Perm& f) {
    // Inversion parity; deliberately avoids the cycle decomposition.
    unsigned inversions = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (f[i] > f[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

CycleType cycle_type_of(const Perm& f) {
    std::vector<char> seen(f.size(), 0);
    std::vector<unsigned> lengths;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (seen[i])
            continue;
        unsigned len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(f[j]);
            ++len;
        }
        lengths.push_back(len);
    }
    return CycleType::from_cycle_lengths(static_cast<unsigned>(f.size()), lengths);
}

Perm representative(const CycleType& ct) {
    Perm f(ct.degree());
    std::iota(f.begin(), f.end(), 0);
    int next = static_cast<int>(ct.fixed_points());
    for (const auto& part : ct.parts())
        for (unsigned c = 0; c < part.count; ++c) {
            int start = next;
            for (unsigned k = 0; k + 1 < part.length; ++k, ++next)
                f[next] = next + 1;
            f[next] = start;
            ++next;
        }
    return f;
}

void enumerate_group(unsigned n, bool alternating,
                     const std::function<void(const Perm&)>& visit) {
    if (n == 0 || n > kMaxTallyDegree)
        throw capacity_error("enumerate_group: degree cap is " +
                             std::to_string(kMaxTallyDegree));
    Perm f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
        if (!alternating || sign(f) == 1)
            visit(f);
    } while (std::next_permutation(f.begin(), f.end()));
}

std::map<std::string, std::uint64_t> tally_class_sizes(unsigned n, bool alternating) {
    std::map<std::string, std::uint64_t> tally;
    enumerate_group(n, alternating, [&](const Perm& f) {
        ++tally[cycle_type_of(f).to_string()];
    });
    return tally;
}

namespace {

std::vector<Perm> group_generators(unsigned n, bool alternating) {
    std::vector<Perm> gens;
    if (!alternating) {
        for (unsigned i = 0; i + 1 < n; ++i) {
            Perm t(n);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[i], t[i + 1]);
            gens.push_back(t);
        }
    } else {
        for (unsigned k = 2; k < n; ++k) {
            Perm t(n);
            std::iota(t.begin(), t.end(), 0);
            t[0] = 1;
            t[1] = static_cast<int>(k);
            t[k] = 0;
            gens.push_back(t);
        }
    }
    return gens;
}

// Orbit of g under conjugation by the whole group, closed under
// conjugation by generators only.
std::set<Perm> conjugation_orbit(const Perm& g, const std::vector<Perm>& gens) {
    std::set<Perm> orbit{g};
    std::vector<Perm> worklist{g};
    while (!worklist.empty()) {
        Perm h = std::move(worklist.back());
        worklist.pop_back();
        for (const Perm& x : gens) {
            Perm conj = compose(compose(x, h), inverse(x));
            if (orbit.insert(conj).second)
                worklist.push_back(conj);
        }
    }
    return orbit;
}

} // namespace

std::vector<Orbit> conjugacy_orbits(unsigned n, bool alternating) {
    if (n == 0 || n > kMaxOrbitDegree)
        throw capacity_error("conjugacy_orbits: degree cap is " +
                             std::to_string(kMaxOrbitDegree));
    std::vector<Perm> gens = group_generators(n, alternating);
    std::set<Perm> visited;
    std::vector<Orbit> orbits;
    enumerate_group(n, alternating, [&](const Perm& f) {
        if (visited.count(f))
            return;
        std::set<Perm> orbit = conjugation_orbit(f, gens);
        orbits.push_back({cycle_type_of(f).to_string(),
                          static_cast<std::uint64_t>(orbit.size())});
        visited.insert(orbit.begin(), orbit.end());
    });
    return orbits;
}

std::uint64_t centralizer_order(unsigned n, const Perm& g, bool alternating) {
    if (n == 0 || n > kMaxOrbitDegree)
        throw capacity_error("centralizer_order: degree cap is " +
                             std::to_string(kMaxOrbitDegree));
    std::uint64_t count = 0;
    enumerate_group(n, alternating, [&](const Perm& x) {
        if (compose(x, g) == compose(g, x))
            ++count;
    });
    return count;
}

std::vector<AltTally> alt_class_sizes_via_tally(unsigned n) {
    if (n == 0 || n > kMaxTallyDegree)
        throw capacity_error("alt_class_sizes_via_tally: degree cap is " +
                             std::to_string(kMaxTallyDegree));
    // One pass over S_n per even type: count elements of the type and look
    // for an odd permutation commuting with a fixed representative. The
    // class splits in A_n exactly when no odd commuter exists.
    std::map<std::string, std::uint64_t> tally = tally_class_sizes(n, true);
    std::vector<AltTally> out;
    for (const CycleType& ct : enumerate_cycle_types(n)) {
        if (ct.parity() != Parity::even)
            continue;
        if (ct.is_identity()) {
            out.push_back({ct.to_string(), 1, false});
            continue;
        }
        Perm g = representative(ct);
        bool odd_commuter = false;
        enumerate_group(n, false, [&](const Perm& x) {
            if (!odd_commuter && sign(x) == -1 && compose(x, g) == compose(g, x))
                odd_commuter = true;
        });
        std::uint64_t total = tally.at(ct.to_string());
        if (odd_commuter)
            out.push_back({ct.to_string(), total, false});
        else
            out.push_back({ct.to_string(), total / 2, true});
    }
    return out;
}

} // namespace divgraph::oracle
