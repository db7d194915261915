#include "omwis/poly.hpp"

#include "omwis/flow.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace omwis {

auto solve_p3free(const OrderedGraph &g, const Weights &w, const SolveOptions &opt) -> Solution
{
    Search search(opt);
    search.node(-1, "p3free");
    const auto &ws = w.scaled();
    int n = g.n();
    // A feasible flow sends w(v) along s -> in_v -> out_v -> t. What remains
    // is to push as much back from t to s as the lower bounds allow; only
    // these residual arcs matter for that.
    auto out = [](Vertex v) { return v; };
    auto in = [n](Vertex v) { return n + v; };
    int t = 2 * n, s = 2 * n + 1;
    MaxFlow f(2 * n + 2);
    std::int64_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
        total += ws[v];
        f.add_arc(t, out(v), ws[v]);
        f.add_arc(in(v), s, ws[v]);
        f.add_arc(in(v), out(v), MaxFlow::infinite);
        for (Vertex u : g.neighbors(v))
            if (u > v)
                f.add_arc(out(v), in(u), MaxFlow::infinite);
    }
    auto back = f.run(t, s);
    auto reach = f.residual_reach(t);
    Sol sol;
    for (Vertex v = 0; v < n; ++v)
        if (reach[out(v)] && !reach[in(v)])
            sol.add(v, ws[v]);
    if (sol.value != total - back)
        throw std::logic_error("antichain weight does not match minimum flow");
    return search.finish(std::move(sol), w);
}

auto solve_chordfree(const OrderedGraph &g, const Weights &w, bool mirrored, const SolveOptions &opt) -> Solution
{
    Search search(opt);
    search.node(-1, mirrored ? "chordrev" : "chordfree");
    int n = g.n();
    const auto &ws = w.scaled();
    auto at = [&](Vertex i) { return mirrored ? n - 1 - i : i; };

    std::vector<std::int64_t> r(n);
    for (Vertex i = 0; i < n; ++i)
        r[i] = ws[at(i)];
    std::vector<Vertex> marked;
    for (Vertex i = 0; i < n; ++i) {
        if (r[i] <= 0)
            continue;
        marked.push_back(i);
        for (Vertex u : g.neighbors(at(i))) {
            Vertex j = at(u);
            if (j > i)
                r[j] -= r[i];
        }
    }
    Sol sol;
    VertexSet taken(n);
    for (auto it = marked.rbegin(); it != marked.rend(); ++it) {
        Vertex v = at(*it);
        if ((g.row(v) & taken).none()) {
            taken.set(v);
            sol.add(v, ws[v]);
        }
    }
    return search.finish(std::move(sol), w);
}

auto solve_oneedgek(const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt) -> Solution
{
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    Search search(opt);
    long root = search.node(-1, "oneedgek");
    const auto &ws = w.scaled();
    int n = g.n();
    Sol best;
    if (k == 0) {
        // oneedge(0) is a single edge: the graph has none
        for (Vertex v = 0; v < n; ++v)
            best.add(v, ws[v]);
        return search.finish(std::move(best), w);
    }

    struct Entry {
        std::int64_t value;
        Vertex pred; // u extending I minus its last vertex; -1: base case
    };
    std::map<std::vector<Vertex>, Entry> tab;

    // independent sets of size < k are complete solutions on their own
    std::vector<Vertex> cur;
    std::function<void(Vertex, std::int64_t)> small = [&](Vertex from, std::int64_t val) {
        if (val > best.value) {
            best.value = val;
            best.set = cur;
        }
        if (static_cast<int>(cur.size()) + 1 >= k)
            return;
        for (Vertex v = from; v < n; ++v) {
            bool ok = std::none_of(cur.begin(), cur.end(), [&](Vertex x) { return g.adjacent(x, v); });
            if (!ok)
                continue;
            cur.push_back(v);
            small(v + 1, val + ws[v]);
            cur.pop_back();
        }
    };
    small(0, 0);

    for (Vertex vi = 0; vi < n; ++vi) {
        // keys I with max(I) = vi: rest is an independent (k-1)-subset before vi
        std::vector<Vertex> rest;
        std::function<void(Vertex)> keys = [&](Vertex from) {
            if (static_cast<int>(rest.size()) == k - 1) {
                search.node(root, "table");
                std::int64_t base = set_weight(ws, rest);
                Entry e{base, -1};
                Vertex lo = rest.empty() ? vi : rest.front();
                for (Vertex u = 0; u < lo; ++u) {
                    if (g.adjacent(u, vi))
                        continue;
                    std::vector<Vertex> prev{u};
                    prev.insert(prev.end(), rest.begin(), rest.end());
                    auto it = tab.find(prev);
                    if (it != tab.end() && it->second.value > e.value)
                        e = Entry{it->second.value, u};
                }
                e.value += ws[vi];
                std::vector<Vertex> key = rest;
                key.push_back(vi);
                if (e.value > best.value) {
                    best.value = e.value;
                    best.set = key; // placeholder, rebuilt below
                }
                tab.emplace(std::move(key), e);
                return;
            }
            for (Vertex v = from; v < vi; ++v) {
                if (g.adjacent(v, vi))
                    continue;
                bool ok = std::none_of(rest.begin(), rest.end(), [&](Vertex x) { return g.adjacent(x, v); });
                if (!ok)
                    continue;
                rest.push_back(v);
                keys(v + 1);
                rest.pop_back();
            }
        };
        keys(0);
    }

    // rebuild when the optimum came from the table
    if (static_cast<int>(best.set.size()) == k && tab.count(best.set)) {
        std::vector<Vertex> key = best.set, sol;
        while (true) {
            const auto &e = tab.at(key);
            Vertex last = key.back();
            sol.push_back(last);
            key.pop_back();
            if (e.pred < 0) {
                sol.insert(sol.end(), key.begin(), key.end());
                break;
            }
            key.insert(key.begin(), e.pred);
        }
        best.set = std::move(sol);
    }
    best.value = set_weight(ws, best.set);
    return search.finish(std::move(best), w);
}

} // namespace omwis
