#include "omwis/bipartite.hpp"

#include "omwis/flow.hpp"

#include <algorithm>
#include <deque>

namespace omwis {

auto two_coloring(const OrderedGraph &g, const VertexSet &alive) -> std::vector<int>
{
    std::vector<int> side(g.n(), -1), parent(g.n(), -1);
    for (auto s = alive.find_first(); s != VertexSet::npos; s = alive.find_next(s)) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::deque<Vertex> q{static_cast<Vertex>(s)};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (!alive.test(y))
                    continue;
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    parent[y] = x;
                    q.push_back(y);
                }
                else if (side[y] == side[x]) {
                    // walk both BFS paths up to their meeting point
                    std::vector<Vertex> px{x}, py{y};
                    while (parent[px.back()] >= 0)
                        px.push_back(parent[px.back()]);
                    while (parent[py.back()] >= 0)
                        py.push_back(parent[py.back()]);
                    while (px.size() > 1 && py.size() > 1 && px[px.size() - 2] == py[py.size() - 2]) {
                        px.pop_back();
                        py.pop_back();
                    }
                    // px.back() == py.back() is the meeting vertex
                    std::vector<Vertex> cycle(px.begin(), px.end());
                    for (auto it = py.rbegin() + 1; it != py.rend(); ++it)
                        cycle.push_back(*it);
                    throw NotBipartite(std::move(cycle));
                }
            }
        }
    }
    return side;
}

auto mwis_bipartite(const OrderedGraph &g, const std::vector<std::int64_t> &w, const VertexSet &alive,
                    const std::vector<int> *side) -> Sol
{
    std::vector<int> own;
    if (side == nullptr) {
        own = two_coloring(g, alive);
        side = &own;
    }
    auto vs = members(alive);
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i)
        index[vs[i]] = static_cast<int>(i);
    int s = static_cast<int>(vs.size()), t = s + 1;
    MaxFlow f(s + 2);
    std::int64_t total = 0;
    for (Vertex v : vs) {
        total += w[v];
        if ((*side)[v] == 0) {
            f.add_arc(s, index[v], w[v]);
            for (Vertex u : g.neighbors(v))
                if (alive.test(u)) {
                    if ((*side)[u] == 0)
                        throw std::logic_error("supplied colouring is not proper");
                    f.add_arc(index[v], index[u], MaxFlow::infinite);
                }
        }
        else {
            f.add_arc(index[v], t, w[v]);
        }
    }
    auto cut = f.run(s, t);
    auto reach = f.residual_reach(s);
    Sol out;
    for (Vertex v : vs) {
        bool r = reach[index[v]];
        if (((*side)[v] == 0) == r)
            out.add(v, w[v]);
    }
    if (out.value != total - cut)
        throw std::logic_error("bipartite min cut witness mismatch");
    return out;
}

auto mwis_bipartite(const OrderedGraph &g, const Weights &w) -> Solution
{
    auto s = mwis_bipartite(g, w.scaled(), g.full_set());
    return to_solution(std::move(s), w);
}

} // namespace omwis
