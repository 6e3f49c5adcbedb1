#include "divgraph/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "divgraph/class_sizes.hpp"
#include "divgraph/errors.hpp"
#include "divgraph/oracle.hpp"

namespace divgraph {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::report_only: return "report-only";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void fail(VerdictReport& rep, const std::string& witness) {
    if (rep.verdict != Verdict::fail) {
        rep.verdict = Verdict::fail;
        rep.witness = witness;
    }
}

CycleType p_cycle_type(unsigned n, unsigned p) {
    return CycleType(n, n - p, {{p, 1}});
}

// Expected isolated-vertex sizes of D(S_n) per the prime-cycle criterion.
std::set<std::string> expected_isolated_sym(unsigned n) {
    std::set<std::string> out;
    for (unsigned p : {n - 1, n})
        if (p >= 2 && is_prime(p))
            out.insert(class_size_sym(p_cycle_type(n, p)).to_decimal());
    return out;
}

// Same for D(A_n): primes p in {n-2, n-1, n} whose p-cycles are even.
std::set<std::string> expected_isolated_alt(unsigned n) {
    std::set<std::string> out;
    for (unsigned p : {n - 2, n - 1, n})
        if (p >= 3 && is_prime(p) && p % 2 == 1)
            out.insert(class_sizes_alt(p_cycle_type(n, p)).size.to_decimal());
    return out;
}

// Shared body of Theorems 9/13: isolated vertices are exactly `expected`,
// everything else is one component.
void check_isolation_structure(VerdictReport& rep, unsigned n, const SizeSet& x,
                               const std::set<std::string>& expected) {
    ConnectivityScan scan = scan_D(x);
    std::set<std::string> observed;
    for (std::size_t v = 0; v < x.entries.size(); ++v)
        if (scan.isolated[v])
            observed.insert(x.entries[v].decimal);
    if (observed != expected) {
        std::ostringstream os;
        os << "n=" << n << ": isolated vertex mismatch; observed {";
        for (const auto& s : observed) os << s << ' ';
        os << "} expected {";
        for (const auto& s : expected) os << s << ' ';
        os << '}';
        fail(rep, os.str());
        return;
    }
    int big_components = 0;
    for (int size : scan.component_sizes)
        if (size > 1)
            ++big_components;
    int expected_components = static_cast<int>(expected.size()) + (big_components > 0 ? 1 : 0);
    bool rest_connected =
        big_components <= 1 && scan.component_count == expected_components;
    // All non-isolated vertices must share one component.
    if (!rest_connected)
        fail(rep, "n=" + std::to_string(n) + ": non-isolated vertices split into " +
                      std::to_string(big_components) + " components");
}

} // namespace

VerdictReport verify_lemma2(unsigned x) {
    if (x < 1)
        throw std::invalid_argument("verify_lemma2: x must be >= 1");
    auto start = Clock::now();
    VerdictReport rep{"lemma2", {x}};
    FactoredNat xfact = FactoredNat::factorial(x);
    for (const CycleType& ct : enumerate_cycle_types(x)) {
        if (ct.fixed_points() != 0)
            continue;
        FactoredNat prod;
        bool has_long_part = false;
        for (const auto& part : ct.parts()) {
            prod *= FactoredNat::factorial(part.count);
            prod *= FactoredNat::of(part.length).pow(part.count);
            if (part.length >= 3)
                has_long_part = true;
        }
        if (!prod.divides(xfact)) {
            fail(rep, "x=" + std::to_string(x) + " type " + ct.to_string() +
                          ": product does not divide x!");
            break;
        }
        if (has_long_part && !(prod * FactoredNat::of(2)).divides(xfact)) {
            fail(rep, "x=" + std::to_string(x) + " type " + ct.to_string() +
                          ": doubled product does not divide x!");
            break;
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_lemma8(unsigned n) {
    if (n <= 2)
        throw std::invalid_argument("verify_lemma8: requires n > 2");
    auto start = Clock::now();
    VerdictReport rep{"lemma8", {n}};
    for (unsigned p : {n - 1, n}) {
        if (!is_prime(p))
            continue;
        CycleType pcycle = p_cycle_type(n, p);
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            if (ct.is_identity())
                continue;
            bool p_divides = centralizer_order_sym(ct).exponent(p) > 0;
            bool is_pcycle = ct == pcycle;
            if (p_divides != is_pcycle) {
                fail(rep, "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                              " type " + ct.to_string());
                break;
            }
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_lemma11(unsigned n) {
    if (n < 9)
        throw std::invalid_argument("verify_lemma11: requires n >= 9");
    auto start = Clock::now();
    VerdictReport rep{"lemma11", {n}};
    for (unsigned p : {n - 2, n - 1, n}) {
        if (!is_prime(p))
            continue;
        CycleType pcycle = p_cycle_type(n, p);
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            if (ct.is_identity() || ct.parity() != Parity::even)
                continue;
            bool p_divides = centralizer_order_alt(ct).exponent(p) > 0;
            bool is_pcycle = ct == pcycle;
            if (p_divides != is_pcycle) {
                fail(rep, "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                              " type " + ct.to_string());
                break;
            }
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_theorem9(unsigned n) {
    if (n <= 6)
        throw std::invalid_argument("verify_theorem9: hypothesis requires n > 6");
    auto start = Clock::now();
    VerdictReport rep{"theorem9", {n}};
    check_isolation_structure(rep, n, size_set_sym(n), expected_isolated_sym(n));
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_corollary2(unsigned n) {
    if (n < 3)
        throw std::invalid_argument("verify_corollary2: requires n >= 3");
    auto start = Clock::now();
    VerdictReport rep{"corollary2", {n}};
    ConnectivityScan scan = scan_D(size_set_sym(n));
    if (scan.component_count > 2) {
        fail(rep, "n=" + std::to_string(n) + ": " +
                      std::to_string(scan.component_count) + " components");
    } else if (scan.component_count == 2) {
        bool has_k1 = false;
        for (int size : scan.component_sizes)
            has_k1 = has_k1 || size == 1;
        if (!has_k1)
            fail(rep, "n=" + std::to_string(n) + ": disconnected without a K_1 component");
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_theorem13(unsigned n) {
    if (n < 9)
        throw std::invalid_argument("verify_theorem13: requires n >= 9");
    auto start = Clock::now();
    VerdictReport rep{"theorem13", {n}};
    check_isolation_structure(rep, n, size_set_alt(n), expected_isolated_alt(n));
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_corollary14(unsigned n) {
    if (n < 4)
        throw std::invalid_argument("verify_corollary14: requires n >= 4");
    auto start = Clock::now();
    VerdictReport rep{"corollary14", {n}};
    ConnectivityScan scan = scan_D(size_set_alt(n));
    if (scan.component_count > 3) {
        fail(rep, "n=" + std::to_string(n) + ": " +
                      std::to_string(scan.component_count) + " components");
    } else if (scan.component_count > 1) {
        std::vector<int> sizes = scan.component_sizes;
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        for (std::size_t i = 1; i < sizes.size(); ++i)
            if (sizes[i] != 1)
                fail(rep, "n=" + std::to_string(n) +
                              ": non-largest component is not K_1");
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_lemmas_14_15(unsigned n) {
    if (n < 9)
        throw std::invalid_argument("verify_lemmas_14_15: requires n >= 9");
    auto start = Clock::now();
    VerdictReport rep{"lemmas14-15", {n}};
    CycleType three_cycle(n, n - 3, {{3, 1}});
    FactoredNat tau_size = class_sizes_alt(three_cycle).size;
    for (const CycleType& ct : enumerate_cycle_types(n)) {
        if (ct.is_identity() || ct.parity() != Parity::even || ct == three_cycle)
            continue;
        bool single_three = false;
        bool any_three = false;
        for (const auto& part : ct.parts()) {
            if (part.length == 3) {
                any_three = true;
                single_three = part.count == 1;
            }
        }
        FactoredNat size = class_sizes_alt(ct).size;
        if (single_three) {
            // Lemma on single 3-cycle parts: the 3-cycle vertex size divides
            // this vertex size (same vertex or adjacent).
            if (!tau_size.divides(size))
                fail(rep, "n=" + std::to_string(n) + " type " + ct.to_string() +
                              ": 3-cycle size does not divide class size");
        } else if (!any_three && ct.fixed_points() >= 3) {
            // Distance <= 2 witness: replace three fixed points by a 3-cycle.
            std::vector<CyclePart> parts;
            bool inserted = false;
            for (const auto& part : ct.parts()) {
                if (!inserted && part.length > 3) {
                    parts.push_back({3, 1});
                    inserted = true;
                }
                parts.push_back(part);
            }
            if (!inserted)
                parts.push_back({3, 1});
            CycleType mid(n, ct.fixed_points() - 3, parts);
            FactoredNat mid_size = class_sizes_alt(mid).size;
            if (!size.divides(mid_size) || !tau_size.divides(mid_size))
                fail(rep, "n=" + std::to_string(n) + " type " + ct.to_string() +
                              ": no length-2 path witness through " + mid.to_string());
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

namespace {

SizeSet oracle_size_set_alt(unsigned n) {
    std::map<std::string, std::vector<std::string>> labels_by_size;
    if (n <= oracle::kMaxOrbitDegree) {
        for (const auto& orbit : oracle::conjugacy_orbits(n, true)) {
            if (orbit.size == 1 && orbit.type_label == CycleType::identity(n).to_string())
                continue;
            labels_by_size[std::to_string(orbit.size)].push_back(orbit.type_label);
        }
    } else {
        for (const auto& t : oracle::alt_class_sizes_via_tally(n)) {
            if (t.class_size == 1 && t.type_label == CycleType::identity(n).to_string())
                continue;
            auto& labels = labels_by_size[std::to_string(t.class_size)];
            if (t.split) {
                labels.push_back(t.type_label + "+");
                labels.push_back(t.type_label + "-");
            } else {
                labels.push_back(t.type_label);
            }
        }
    }
    SizeSet out;
    for (auto& [dec, labels] : labels_by_size) {
        std::uint64_t v = std::stoull(dec);
        if (v == 1)
            continue;
        out.entries.push_back({FactoredNat::of(v), dec, labels});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const SizeSet::Entry& a, const SizeSet::Entry& b) {
                  if (a.decimal.size() != b.decimal.size())
                      return a.decimal.size() < b.decimal.size();
                  return a.decimal < b.decimal;
              });
    return out;
}

bool same_graph(const UGraph& a, const UGraph& b) {
    return a.vertex_keys == b.vertex_keys && a.edges == b.edges;
}

} // namespace

VerdictReport reproduce_figures() {
    auto start = Clock::now();
    VerdictReport rep{"figures", {3, 4, 5, 6, 7, 8}};

    // D(S_3), D(S_4), D(S_5): exact component structures.
    const std::map<unsigned, std::vector<std::vector<std::string>>> expected_sym = {
        {3, {{"2"}, {"3"}}},
        {4, {{"3", "6"}, {"8"}}},
        {5, {{"10", "15", "20", "30"}, {"24"}}},
    };
    for (const auto& [n, expected] : expected_sym) {
        ComponentReport cr = components(build_D(size_set_sym(n)));
        if (cr.components != expected)
            fail(rep, "D(S_" + std::to_string(n) + ") component structure mismatch");
        else
            rep.notes.push_back("D(S_" + std::to_string(n) + "): " +
                                std::to_string(cr.component_count) + " components");
    }

    // D(A_4)..D(A_8): at most three components, non-largest all K_1, and the
    // formula-built graph must coincide with the oracle-built graph.
    for (unsigned n = 4; n <= 8; ++n) {
        SizeSet formula = size_set_alt(n);
        UGraph g = build_D(formula);
        ComponentReport cr = components(g);
        if (cr.component_count > 3) {
            fail(rep, "D(A_" + std::to_string(n) + "): " +
                          std::to_string(cr.component_count) + " components");
            continue;
        }
        std::size_t largest = 0;
        for (const auto& c : cr.components)
            largest = std::max(largest, c.size());
        bool non_largest_k1 = true;
        bool largest_seen = false;
        for (const auto& c : cr.components) {
            if (c.size() == largest && !largest_seen)
                largest_seen = true;
            else if (c.size() != 1)
                non_largest_k1 = false;
        }
        if (cr.component_count > 1 && !non_largest_k1) {
            fail(rep, "D(A_" + std::to_string(n) + "): non-largest component not K_1");
            continue;
        }
        SizeSet from_oracle = oracle_size_set_alt(n);
        UGraph g2 = build_D(from_oracle);
        if (!same_graph(g, g2)) {
            fail(rep, "D(A_" + std::to_string(n) + "): formula and oracle graphs differ");
            continue;
        }
        rep.notes.push_back("D(A_" + std::to_string(n) + "): " +
                            std::to_string(cr.component_count) +
                            " components, formula = oracle");
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport diameter_bounds(unsigned n, bool alternating) {
    auto start = Clock::now();
    VerdictReport rep{alternating ? "diameter-bounds-A" : "diameter-bounds-S", {n}};
    int bound = alternating ? 10 : 8;
    SizeSet x = alternating ? size_set_alt(n) : size_set_sym(n);
    ComponentReport cr = components(build_D(x));
    rep.notes.push_back("n=" + std::to_string(n) +
                        " diameter=" + std::to_string(cr.overall_diameter));
    if (cr.overall_diameter > bound)
        fail(rep, "n=" + std::to_string(n) + ": diameter " +
                      std::to_string(cr.overall_diameter) + " exceeds " +
                      std::to_string(bound));
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport conjecture_sweep(unsigned n_max, bool alternating) {
    auto start = Clock::now();
    VerdictReport rep{alternating ? "conjecture-A" : "conjecture-S", {}};
    rep.verdict = Verdict::report_only;
    for (unsigned n = 1; n <= n_max; ++n) {
        rep.range.push_back(n);
        SizeSet x = alternating ? size_set_alt(n) : size_set_sym(n);
        ComponentReport cr = components(build_D(x));
        std::string line = "n=" + std::to_string(n) +
                           " diameter=" + std::to_string(cr.overall_diameter);
        if (cr.overall_diameter > 4)
            line += " [exceeds 4: conjecture counterexample candidate]";
        rep.notes.push_back(line);
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_oracle(unsigned max_tally, unsigned max_orbit) {
    if (max_tally > oracle::kMaxTallyDegree || max_orbit > oracle::kMaxOrbitDegree)
        throw capacity_error("verify_oracle: caps are tally <= 8, orbit <= 7");
    auto start = Clock::now();
    VerdictReport rep{"oracle", {}};

    // Class sizes by full-group tally.
    for (unsigned n = 1; n <= max_tally; ++n) {
        rep.range.push_back(n);
        auto tally = oracle::tally_class_sizes(n, false);
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            auto it = tally.find(ct.to_string());
            std::string brute = it == tally.end() ? "0" : std::to_string(it->second);
            if (brute != class_size_sym(ct).to_decimal()) {
                fail(rep, "S_" + std::to_string(n) + " " + ct.to_string() +
                              ": formula " + class_size_sym(ct).to_decimal() +
                              " != tally " + brute);
            }
        }
        if (tally.size() != enumerate_cycle_types(n).size())
            fail(rep, "S_" + std::to_string(n) + ": type count mismatch");
    }

    for (unsigned n = 1; n <= max_orbit; ++n) {
        // Centralizer orders by literal commutation count.
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            oracle::Perm g = oracle::representative(ct);
            std::uint64_t brute = oracle::centralizer_order(n, g, false);
            if (std::to_string(brute) != centralizer_order_sym(ct).to_decimal())
                fail(rep, "C_{S_" + std::to_string(n) + "}(" + ct.to_string() +
                              "): formula != brute " + std::to_string(brute));
            if (ct.parity() == Parity::even) {
                std::uint64_t brute_alt = oracle::centralizer_order(n, g, true);
                if (std::to_string(brute_alt) != centralizer_order_alt(ct).to_decimal())
                    fail(rep, "C_{A_" + std::to_string(n) + "}(" + ct.to_string() +
                                  "): formula != brute " + std::to_string(brute_alt));
                // Even types fixing >= 2 points never split.
                if (ct.fixed_points() >= 2 && brute != 2 * brute_alt && n >= 2)
                    fail(rep, "A_" + std::to_string(n) + " " + ct.to_string() +
                                  ": centralizer not halved despite >= 2 fixed points");
            }
        }

        // True conjugation orbits: splitting happens exactly when predicted,
        // with matching sizes.
        std::map<std::string, std::vector<std::uint64_t>> orbits_by_type;
        for (const auto& orbit : oracle::conjugacy_orbits(n, true))
            orbits_by_type[orbit.type_label].push_back(orbit.size);
        for (const CycleType& ct : enumerate_cycle_types(n)) {
            if (ct.parity() != Parity::even)
                continue;
            auto& sizes = orbits_by_type[ct.to_string()];
            AltClassSizes alt = class_sizes_alt(ct);
            bool brute_split = sizes.size() == 2;
            if (brute_split && sizes[0] != sizes[1])
                fail(rep, "A_" + std::to_string(n) + " " + ct.to_string() +
                              ": split halves unequal");
            if (!brute_split && sizes.size() != 1)
                fail(rep, "A_" + std::to_string(n) + " " + ct.to_string() +
                              ": unexpected orbit count");
            if (brute_split != alt.split)
                fail(rep, "A_" + std::to_string(n) + " " + ct.to_string() +
                              ": splitting prediction wrong");
            if (!sizes.empty() && std::to_string(sizes[0]) != alt.size.to_decimal())
                fail(rep, "A_" + std::to_string(n) + " " + ct.to_string() +
                              ": orbit size mismatch");
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

VerdictReport verify_power_adjacency(unsigned n) {
    auto start = Clock::now();
    VerdictReport rep{"power-adjacency", {n}};
    for (const CycleType& ct : enumerate_cycle_types(n)) {
        FactoredNat size = class_size_sym(ct);
        if (size.is_one())
            continue;
        for (unsigned m = 1; m <= n; ++m) {
            CycleType pow_ct = ct.power(m);
            FactoredNat pow_size = class_size_sym(pow_ct);
            if (pow_size.is_one())
                continue; // identity class: not a vertex
            if (!(pow_size == size) && !pow_size.divides(size) && !size.divides(pow_size)) {
                fail(rep, "S_" + std::to_string(n) + " " + ct.to_string() + "^" +
                              std::to_string(m) + ": power vertex not adjacent");
            }
            if (ct.parity() == Parity::even && pow_ct.parity() == Parity::even) {
                FactoredNat a = class_sizes_alt(ct).size;
                FactoredNat b = class_sizes_alt(pow_ct).size;
                if (!a.is_one() && !b.is_one() && !(a == b) && !b.divides(a) &&
                    !a.divides(b))
                    fail(rep, "A_" + std::to_string(n) + " " + ct.to_string() + "^" +
                                  std::to_string(m) + ": power vertex not adjacent");
            }
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

} // namespace divgraph
