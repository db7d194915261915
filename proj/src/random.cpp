#include "omwis/random.hpp"

#include <algorithm>

namespace omwis {

auto random_weights(int n, Rng &rng) -> Weights
{
    std::vector<Rational> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto q = static_cast<std::int64_t>(1 + rng.below(4));
        auto p = static_cast<std::int64_t>(1 + rng.below(12));
        w.emplace_back(p, q);
    }
    return Weights(std::move(w));
}

auto random_graph(int n, double p, Rng &rng) -> OrderedGraph
{
    OrderedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p))
                g.add_edge(u, v);
    return g;
}

auto random_free_graph(int n, double p, const std::vector<OrderedGraph> &forbidden, Rng &rng, MatchMode mode)
    -> OrderedGraph
{
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    OrderedGraph g(n);
    for (auto [u, v] : pairs) {
        if (!rng.chance(p))
            continue;
        g.add_edge(u, v);
        // new copies must use the new edge as a pattern edge
        for (const auto &h : forbidden)
            if (find_pattern_through(g, h, mode, u, v)) {
                g.remove_edge(u, v);
                break;
            }
    }
    return g;
}

} // namespace omwis
