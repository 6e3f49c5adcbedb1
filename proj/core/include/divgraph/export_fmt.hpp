#ifndef DIVGRAPH_EXPORT_FMT_HPP
#define DIVGRAPH_EXPORT_FMT_HPP

#include <string>

#include "divgraph/graphs.hpp"
#include "divgraph/theorems.hpp"

#include <nlohmann/json_fwd.hpp>

namespace divgraph {

// Context for graph artifacts. group is "S", "A" or "X" (from-file input).
struct GraphMeta {
    unsigned n = 0;
    std::string group;
    GraphKind kind = GraphKind::D;
};

std::string kind_name(GraphKind k);

// Schema "divgraph/1": n, group, kind, vertices, edges (index pairs),
// components (index lists), diameters, plus origins and null-graph flag.
nlohmann::json graph_to_json(const GraphMeta& meta, const SizeSet& x,
                             const UGraph& g, const ComponentReport& rep);

// DOT with one cluster per component; vertex labels carry the decimal size
// and its origin cycle types.
std::string graph_to_dot(const GraphMeta& meta, const SizeSet& x,
                         const UGraph& g, const ComponentReport& rep);

// Edge list, one "u,v" row per edge.
std::string graph_to_csv(const UGraph& g);

std::string graph_to_text(const GraphMeta& meta, const SizeSet& x,
                          const UGraph& g, const ComponentReport& rep);

nlohmann::json verdict_to_json(const VerdictReport& r);
std::string verdict_to_text(const VerdictReport& r);

} // namespace divgraph

#endif
