#pragma once

#include "omwis/core.hpp"
#include "omwis/pattern.hpp"
#include "omwis/random.hpp"

#include <functional>

namespace omwis::testing {

// all increasing maps of pattern positions into host positions
inline void for_each_embedding(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode,
                               const std::function<bool(const std::vector<Vertex> &)> &visit)
{
    std::vector<Vertex> img(h.n());
    std::function<bool(int, Vertex)> rec = [&](int p, Vertex from) -> bool {
        if (p == h.n()) {
            for (int a = 0; a < h.n(); ++a)
                for (int b = a + 1; b < h.n(); ++b) {
                    bool want = h.adjacent(a, b), have = g.adjacent(img[a], img[b]);
                    if (want && !have)
                        return true;
                    if (!want && have && mode == MatchMode::Induced)
                        return true;
                }
            return visit(img);
        }
        for (Vertex x = from; x < g.n(); ++x) {
            img[p] = x;
            if (!rec(p + 1, x + 1))
                return false;
        }
        return true;
    };
    rec(0, 0);
}

inline auto naive_find(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode)
    -> std::optional<std::vector<Vertex>>
{
    std::optional<std::vector<Vertex>> out;
    for_each_embedding(g, h, mode, [&](const std::vector<Vertex> &img) {
        out = img;
        return false;
    });
    return out;
}

inline auto weight_of(const Weights &w, const std::vector<Vertex> &s) -> Rational
{
    Rational t(0);
    for (Vertex v : s)
        t += w[v];
    return t;
}

// every labelled graph on n ordered vertices, by edge bitmask
inline void for_each_graph(int n, const std::function<void(const OrderedGraph &)> &visit)
{
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        OrderedGraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u)
                g.add_edge(pairs[i].first, pairs[i].second);
        visit(g);
    }
}

} // namespace omwis::testing
