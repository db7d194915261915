#pragma once

#include "omwis/core.hpp"

namespace omwis {

class NotBipartite : public std::runtime_error {
public:
    explicit NotBipartite(std::vector<Vertex> cycle)
        : std::runtime_error("graph is not bipartite"), cycle(std::move(cycle))
    {
    }
    std::vector<Vertex> cycle; // odd cycle, consecutive vertices adjacent
};

// side[v] in {0, 1} for v in alive, -1 elsewhere. Throws NotBipartite.
auto two_coloring(const OrderedGraph &g, const VertexSet &alive) -> std::vector<int>;

// MWIS of g[alive] by min cut. `side` may be supplied when a 2-colouring is
// already known; otherwise it is computed.
auto mwis_bipartite(const OrderedGraph &g, const std::vector<std::int64_t> &w, const VertexSet &alive,
                    const std::vector<int> *side = nullptr) -> Sol;

auto mwis_bipartite(const OrderedGraph &g, const Weights &w) -> Solution;

} // namespace omwis
