#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "mclab/coloring.hpp"
#include "mclab/graph6.hpp"

namespace mclab {

/// {"graph6": "...", "edges": [[u,v],...], "colors": [c0,c1,...]}
inline nlohmann::json coloring_to_json(const EdgeColoring& col)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : col.edges())
        edges.push_back({e.u, e.v});
    return {{"graph6", emit_graph6(col.graph())}, {"edges", std::move(edges)}, {"colors", col.colors()}};
}

/// Edges may be listed in any order and orientation; each graph edge must appear once.
inline EdgeColoring coloring_from_json(const nlohmann::json& doc)
{
    try {
        const Graph g = parse_graph6(doc.at("graph6").get<std::string>());
        const auto& edges = doc.at("edges");
        const auto& colors = doc.at("colors");
        if (!edges.is_array() || !colors.is_array() || edges.size() != colors.size())
            throw Error("coloring JSON needs parallel \"edges\" and \"colors\" arrays");

        const std::vector<Edge> order = g.edges();
        std::vector<int> assigned(order.size(), -1);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& pair = edges[i];
            if (!pair.is_array() || pair.size() != 2)
                throw Error("edge entry " + std::to_string(i) + " is not a [u,v] pair");
            Edge e{pair[0].get<int>(), pair[1].get<int>()};
            if (e.u > e.v)
                std::swap(e.u, e.v);
            const auto it = std::lower_bound(order.begin(), order.end(), e);
            if (it == order.end() || *it != e)
                throw Error("edge entry " + std::to_string(i) + " is not an edge of the graph");
            int& slot = assigned[static_cast<std::size_t>(it - order.begin())];
            if (slot >= 0)
                throw Error("edge entry " + std::to_string(i) + " repeats an edge");
            slot = colors[i].get<int>();
        }
        if (edges.size() != order.size())
            throw Error("coloring covers " + std::to_string(edges.size()) + " of " + std::to_string(order.size()) + " edges");
        return EdgeColoring(g, std::move(assigned));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed coloring JSON: ") + e.what());
    }
}

} // namespace mclab
