#include "omwis/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace omwis {

namespace {

struct Brute {
    int n;
    std::vector<std::uint64_t> nbr;
    const std::vector<std::int64_t> &w;
    std::int64_t best = -1;
    std::uint64_t best_set = 0;
    std::uint64_t nodes = 0;

    auto weight_of(std::uint64_t m) const -> std::int64_t
    {
        std::int64_t t = 0;
        while (m) {
            t += w[__builtin_ctzll(m)];
            m &= m - 1;
        }
        return t;
    }

    void search(std::uint64_t cand, std::uint64_t chosen, std::int64_t value)
    {
        ++nodes;
        if (cand == 0) {
            if (value > best) {
                best = value;
                best_set = chosen;
            }
            return;
        }
        if (value + weight_of(cand) <= best)
            return;
        int v = __builtin_ctzll(cand);
        std::uint64_t bit = std::uint64_t{1} << v;
        search(cand & ~bit & ~nbr[v], chosen | bit, value + w[v]);
        search(cand & ~bit, chosen, value);
    }
};

} // namespace

auto alpha_brute(const OrderedGraph &g, const Weights &w, int cap) -> Solution
{
    if (g.n() > cap || g.n() > 64)
        throw std::length_error("oracle cap exceeded: n = " + std::to_string(g.n()) + " > " +
                                std::to_string(std::min(cap, 64)));
    Brute b{g.n(), std::vector<std::uint64_t>(g.n(), 0), w.scaled()};
    for (auto [u, v] : g.edges()) {
        b.nbr[u] |= std::uint64_t{1} << v;
        b.nbr[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    b.search(all, 0, 0);
    Sol s;
    for (Vertex v = 0; v < g.n(); ++v)
        if (b.best_set >> v & 1)
            s.add(v, w.scaled()[v]);
    auto out = to_solution(std::move(s), w);
    out.nodes = b.nodes;
    return out;
}

namespace {

class UnitMis {
public:
    explicit UnitMis(std::vector<std::unordered_set<int>> adj) : adj_(std::move(adj)), alive_(adj_.size(), 1)
    {
    }

    auto solve() -> std::int64_t
    {
        std::int64_t gain = reduce();
        std::vector<int> live;
        for (int v = 0; v < static_cast<int>(adj_.size()); ++v)
            if (alive_[v])
                live.push_back(v);
        if (live.empty())
            return gain;

        // split into components
        std::vector<int> comp(adj_.size(), -1);
        int ncomp = 0;
        for (int s : live) {
            if (comp[s] >= 0)
                continue;
            std::deque<int> q{s};
            comp[s] = ncomp;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int y : adj_[x])
                    if (comp[y] < 0) {
                        comp[y] = ncomp;
                        q.push_back(y);
                    }
            }
            ++ncomp;
        }
        if (ncomp > 1) {
            std::vector<std::vector<int>> parts(ncomp);
            for (int v : live)
                parts[comp[v]].push_back(v);
            for (auto &p : parts)
                gain += sub(p).solve();
            return gain;
        }

        int b = live.front();
        for (int v : live)
            if (adj_[v].size() > adj_[b].size())
                b = v;
        // exclude b
        UnitMis without = *this;
        without.remove(b);
        std::int64_t a = without.solve();
        // include b
        UnitMis with = *this;
        std::vector<int> nb(adj_[b].begin(), adj_[b].end());
        with.remove(b);
        for (int x : nb)
            with.remove(x);
        std::int64_t c = 1 + with.solve();
        return gain + std::max(a, c);
    }

private:
    auto sub(const std::vector<int> &vs) const -> UnitMis
    {
        std::vector<int> index(adj_.size(), -1);
        for (std::size_t i = 0; i < vs.size(); ++i)
            index[vs[i]] = static_cast<int>(i);
        std::vector<std::unordered_set<int>> adj(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (int y : adj_[vs[i]])
                adj[i].insert(index[y]);
        return UnitMis(std::move(adj));
    }

    void remove(int v)
    {
        if (!alive_[v])
            return;
        for (int y : adj_[v]) {
            adj_[y].erase(v);
            touched_.push_back(y);
        }
        adj_[v].clear();
        alive_[v] = 0;
    }

    auto dominated_neighbor(int u) const -> int
    {
        // neighbour v with N[u] subset of N[v]
        for (int v : adj_[u]) {
            if (adj_[v].size() < adj_[u].size())
                continue;
            bool ok = true;
            for (int x : adj_[u])
                if (x != v && !adj_[v].count(x)) {
                    ok = false;
                    break;
                }
            if (ok)
                return v;
        }
        return -1;
    }

    auto reduce() -> std::int64_t
    {
        std::int64_t gain = 0;
        for (int v = 0; v < static_cast<int>(adj_.size()); ++v)
            if (alive_[v])
                touched_.push_back(v);
        while (!touched_.empty()) {
            int v = touched_.back();
            touched_.pop_back();
            if (!alive_[v])
                continue;
            auto d = adj_[v].size();
            if (d == 0) {
                alive_[v] = 0;
                ++gain;
            }
            else if (d == 1) {
                int u = *adj_[v].begin();
                remove(v);
                remove(u);
                ++gain;
            }
            else if (d == 2) {
                auto it = adj_[v].begin();
                int a = *it++;
                int b = *it;
                if (adj_[a].count(b)) {
                    remove(v);
                    remove(a);
                    remove(b);
                    ++gain;
                }
                else {
                    // fold v, a, b into one vertex c: alpha(G) = alpha(G') + 1
                    std::unordered_set<int> nc;
                    for (int x : adj_[a])
                        if (x != v)
                            nc.insert(x);
                    for (int x : adj_[b])
                        if (x != v)
                            nc.insert(x);
                    remove(v);
                    remove(a);
                    remove(b);
                    int c = static_cast<int>(adj_.size());
                    adj_.emplace_back();
                    alive_.push_back(1);
                    for (int x : nc) {
                        adj_[c].insert(x);
                        adj_[x].insert(c);
                        touched_.push_back(x);
                    }
                    touched_.push_back(c);
                    ++gain;
                }
            }
            else {
                int dom = dominated_neighbor(v);
                if (dom >= 0) {
                    remove(dom);
                    touched_.push_back(v);
                }
            }
        }
        return gain;
    }

    std::vector<std::unordered_set<int>> adj_;
    std::vector<char> alive_;
    std::vector<int> touched_;
};

} // namespace

auto alpha_unit(const OrderedGraph &g) -> std::int64_t
{
    std::vector<std::unordered_set<int>> adj(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    return UnitMis(std::move(adj)).solve();
}

} // namespace omwis
