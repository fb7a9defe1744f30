#pragma once

#include <json.hpp>

#include "mclab/coloring_json.hpp"
#include "mclab/graph6.hpp"
#include "mclab/solver.hpp"

namespace mclab {

inline nlohmann::json bounds_to_json(const std::vector<Bound>& bounds)
{
    nlohmann::json out = nlohmann::json::array();
    for (const Bound& b : bounds)
        out.push_back({{"name", b.name}, {"value", b.value}});
    return out;
}

/// {"graph6":..., "mc":..., "method":..., "bounds":[...], "coloring":{...}}
inline nlohmann::json certificate_to_json(const McCertificate& cert)
{
    return {{"graph6", emit_graph6(cert.coloring.graph())},
            {"mc", cert.value},
            {"method", to_string(cert.method)},
            {"bounds", bounds_to_json(cert.bound_trace)},
            {"coloring", coloring_to_json(cert.coloring)}};
}

} // namespace mclab
