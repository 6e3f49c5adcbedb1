#include "divgraph/export_fmt.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace divgraph {

using nlohmann::json;

std::string kind_name(GraphKind k) {
    switch (k) {
    case GraphKind::D: return "D";
    case GraphKind::Gamma: return "Gamma";
    case GraphKind::Delta: return "Delta";
    case GraphKind::B: return "B";
    }
    return "?";
}

json graph_to_json(const GraphMeta& meta, const SizeSet& x,
                   const UGraph& g, const ComponentReport& rep) {
    json j;
    j["schema"] = "divgraph/1";
    j["n"] = meta.n;
    j["group"] = meta.group;
    j["kind"] = kind_name(meta.kind);
    j["vertices"] = g.vertex_keys;
    json edges = json::array();
    for (auto [a, b] : g.edges)
        edges.push_back({a, b});
    j["edges"] = edges;
    j["components"] = rep.components;
    j["diameters"] = rep.diameters;
    j["overall_diameter"] = rep.overall_diameter;
    j["isolated"] = rep.isolated;
    j["null_graph"] = rep.null_graph;
    // Origin back-map and factored forms for the size vertices.
    json origins = json::object();
    json factors = json::object();
    for (const auto& e : x.entries) {
        origins[e.decimal] = e.origins;
        json fmap = json::object();
        for (auto [p, k] : e.size.factors())
            fmap[std::to_string(p)] = k;
        factors[e.decimal] = fmap;
    }
    j["origins"] = origins;
    j["factors"] = factors;
    if (g.kind == GraphKind::B)
        j["prime_part_count"] = g.prime_part_count;
    return j;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string graph_to_dot(const GraphMeta& meta, const SizeSet& x,
                         const UGraph& g, const ComponentReport& rep) {
    std::map<std::string, std::vector<std::string>> origin_of;
    for (const auto& e : x.entries)
        origin_of[e.decimal] = e.origins;
    std::map<std::string, int> index_of;
    for (std::size_t v = 0; v < g.vertex_keys.size(); ++v)
        index_of[g.vertex_keys[v]] = static_cast<int>(v);

    std::ostringstream os;
    os << "graph \"" << kind_name(meta.kind);
    if (meta.group == "S" || meta.group == "A")
        os << "(" << meta.group << "_" << meta.n << ")";
    os << "\" {\n";
    if (rep.null_graph)
        os << "  // null graph: no vertices\n";
    int cluster = 0;
    for (std::size_t c = 0; c < rep.components.size(); ++c) {
        os << "  subgraph cluster_" << cluster++ << " {\n";
        for (const auto& key : rep.components[c]) {
            os << "    v" << index_of[key] << " [label=\"" << dot_escape(key);
            auto it = origin_of.find(key);
            if (it != origin_of.end())
                for (const auto& label : it->second)
                    os << "\\n" << dot_escape(label);
            os << "\"];\n";
        }
        os << "  }\n";
    }
    for (auto [a, b] : g.edges)
        os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_csv(const UGraph& g) {
    std::ostringstream os;
    os << "u,v\n";
    for (auto [a, b] : g.edges)
        os << g.vertex_keys[a] << ',' << g.vertex_keys[b] << '\n';
    return os.str();
}

std::string graph_to_text(const GraphMeta& meta, const SizeSet& x,
                          const UGraph& g, const ComponentReport& rep) {
    std::ostringstream os;
    os << kind_name(meta.kind);
    if (meta.group == "S" || meta.group == "A")
        os << "(" << meta.group << "_" << meta.n << ")";
    os << ": " << g.vertex_count() << " vertices, " << g.edges.size() << " edges, "
       << rep.component_count << " components, diameter " << rep.overall_diameter;
    if (rep.null_graph)
        os << " (null graph)";
    os << "\n";
    for (std::size_t c = 0; c < rep.components.size(); ++c) {
        os << "  component " << c << " (diameter " << rep.diameters[c] << "):";
        for (const auto& key : rep.components[c])
            os << ' ' << key;
        os << "\n";
    }
    (void)x;
    return os.str();
}

json verdict_to_json(const VerdictReport& r) {
    json j;
    j["claim"] = r.claim;
    j["range"] = r.range;
    j["verdict"] = to_string(r.verdict);
    if (r.witness)
        j["witness"] = *r.witness;
    if (!r.notes.empty())
        j["notes"] = r.notes;
    j["wall_ms"] = r.wall_ms;
    return j;
}

std::string verdict_to_text(const VerdictReport& r) {
    std::ostringstream os;
    os << r.claim;
    if (!r.range.empty()) {
        os << " [n=" << r.range.front();
        if (r.range.size() > 1)
            os << ".." << r.range.back();
        os << "]";
    }
    os << ": " << to_string(r.verdict);
    if (r.witness)
        os << "  witness: " << *r.witness;
    for (const auto& note : r.notes)
        os << "\n    " << note;
    return os.str();
}

} // namespace divgraph
