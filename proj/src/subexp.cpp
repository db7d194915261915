#include "omwis/subexp.hpp"

#include "omwis/bipartite.hpp"

#include <algorithm>
#include <functional>

namespace omwis {

auto degree_threshold(int n) -> int
{
    int t = 1;
    while (static_cast<long long>(t) * t * t < n)
        ++t;
    return t;
}

auto partition_segments(const OrderedGraph &g, const VertexSet &alive) -> SegmentDecomposition
{
    auto vs = members(alive);
    if (vs.size() < 2)
        throw std::invalid_argument("segments need at least two vertices");
    if (components(g, alive).size() != 1)
        throw std::invalid_argument("segments need a connected graph");
    int n = g.n();
    SegmentDecomposition d;
    d.roof = VertexSet(n);
    auto close = [&](Vertex x, Vertex y, Vertex from) {
        Segment s;
        s.x = x;
        s.y = y;
        s.z = alive & range_set(n, from, y + 1);
        d.roof.set(x);
        d.roof.set(y);
        d.segments.push_back(std::move(s));
    };
    Vertex x = vs.front();
    close(x, last_of(g.row(x) & alive), x);
    while (d.segments.back().y != vs.back()) {
        // only the last segment has edges to the rest
        const auto &z = d.segments.back().z;
        Vertex end = d.segments.back().y, bx = -1, by = -1;
        for (auto u = z.find_first(); u != VertexSet::npos; u = z.find_next(u)) {
            Vertex far = last_of(g.row(static_cast<Vertex>(u)) & alive);
            if (far > end && far > by) {
                bx = static_cast<Vertex>(u);
                by = far;
            }
        }
        if (bx < 0)
            throw std::logic_error("segment construction stalled");
        close(bx, by, end + 1);
    }
    return d;
}

auto partition_segments(const OrderedGraph &g) -> SegmentDecomposition
{
    return partition_segments(g, g.full_set());
}

void pick_guards(const OrderedGraph &g, SegmentDecomposition &d, int k)
{
    auto roof_nb = closed_nbhd(g, members(d.roof));
    for (auto &s : d.segments) {
        s.first.clear();
        s.last.clear();
        auto pool = members(s.z - roof_nb);
        VertexSet blocked(g.n());
        for (auto it = pool.begin(); it != pool.end() && static_cast<int>(s.first.size()) < k; ++it)
            if (!blocked.test(*it)) {
                s.first.push_back(*it);
                blocked |= closed_nbhd(g, *it);
            }
        for (auto it = pool.rbegin(); it != pool.rend() && static_cast<int>(s.last.size()) < k; ++it)
            if (!blocked.test(*it)) {
                s.last.push_back(*it);
                blocked |= closed_nbhd(g, *it);
            }
        std::reverse(s.last.begin(), s.last.end());
    }
}

namespace {

// every independent subset of `from`, by inclusion/exclusion
void each_independent(const OrderedGraph &g, const std::vector<Vertex> &from,
                      const std::function<void(const std::vector<Vertex> &)> &visit)
{
    std::vector<Vertex> cur;
    std::function<void(std::size_t, const VertexSet &)> rec = [&](std::size_t i, const VertexSet &blocked) {
        if (i == from.size()) {
            visit(cur);
            return;
        }
        Vertex v = from[i];
        if (!blocked.test(v)) {
            cur.push_back(v);
            rec(i + 1, blocked | closed_nbhd(g, v));
            cur.pop_back();
        }
        rec(i + 1, blocked);
    };
    rec(0, VertexSet(g.n()));
}

class AbbakSolver {
public:
    AbbakSolver(const OrderedGraph &g, const std::vector<std::int64_t> &w, int k, int tau, Search &search)
        : g_(g), w_(w), k_(k), tau_(tau), search_(search)
    {
    }

    auto solve(const VertexSet &alive, long parent, const char *action, std::int64_t credit) -> Sol
    {
        long id = search_.node(parent, action, credit);
        if (alive.none())
            return {};
        Vertex hub = -1;
        std::size_t deg = 0;
        for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
            auto d = (g_.row(static_cast<Vertex>(v)) & alive).count();
            if (d > deg) {
                deg = d;
                hub = static_cast<Vertex>(v);
            }
        }
        if (hub >= 0 && deg >= static_cast<std::size_t>(tau_)) {
            VertexSet out = alive;
            out.reset(hub);
            Sol best = solve(out, id, "exclude", 0);
            Sol in = solve(alive - closed_nbhd(g_, hub), id, "include", w_[hub]);
            in.add(hub, w_[hub]);
            return in.value > best.value ? in : best;
        }
        Sol total;
        for (const auto &c : components(g_, alive))
            total.absorb(solve_connected(c, id));
        return total;
    }

private:
    auto check() const -> bool { return search_.options().check_structure; }

    auto solve_connected(const VertexSet &c, long id) -> Sol
    {
        auto vs = members(c);
        int np = static_cast<int>(vs.size());
        if (np == 1) {
            Sol s;
            s.add(vs[0], w_[vs[0]]);
            return s;
        }
        int n = g_.n();
        auto d = partition_segments(g_, c);
        pick_guards(g_, d, k_);
        auto roof = members(d.roof);
        if (check())
            for (const auto &s : d.segments) {
                std::vector<Vertex> guard = roof;
                guard.insert(guard.end(), s.first.begin(), s.first.end());
                guard.insert(guard.end(), s.last.begin(), s.last.end());
                if (count_edges(g_, s.z - closed_nbhd(g_, guard)) != 0)
                    throw std::logic_error("segment interior is not independent; input is not abbak-free");
            }

        int third = np / 3;
        VertexSet left = c & range_set(n, 0, third > 0 ? vs[third - 1] + 1 : 0);
        VertexSet right = c & range_set(n, third > 0 ? vs[np - third] : n, n);
        VertexSet middle = c - left - right;
        auto small = [&](const Segment &s) { return static_cast<long long>(s.z.count()) * tau_ < np; };
        int t = static_cast<int>(d.segments.size());

        for (int i = 0; i < t; ++i) {
            const auto &s = d.segments[i];
            if (!small(s) || !s.z.intersects(middle))
                continue;
            // guess the solution inside Z_i; what is left falls apart
            VertexSet before = c & range_set(n, 0, first_of(s.z));
            VertexSet after = c & range_set(n, last_of(s.z) + 1, n);
            Sol best;
            bool any = false;
            each_independent(g_, members(s.z), [&](const std::vector<Vertex> &guess) {
                auto nb = open_nbhd(g_, guess);
                VertexSet lo = before - nb, hi = after - nb;
                if (check() && open_nbhd(g_, members(lo)).intersects(hi))
                    throw std::logic_error("edge across a removed segment");
                Sol cand;
                for (Vertex v : guess)
                    cand.add(v, w_[v]);
                cand.absorb(solve(lo, id, "left", 0));
                cand.absorb(solve(hi, id, "right", 0));
                if (!any || cand.value > best.value) {
                    best = std::move(cand);
                    any = true;
                }
            });
            return best;
        }

        // every small segment lies in Left or Right
        int l = -1, r = -1;
        for (int i = 0; i < t; ++i) {
            if (!small(d.segments[i]))
                continue;
            if (d.segments[i].z.is_subset_of(left))
                l = i;
            else if (r < 0 && d.segments[i].z.is_subset_of(right))
                r = i;
        }
        int to = r >= 0 ? r : t;
        VertexSet lo(n), mid(n), hi(n), s(n);
        std::vector<Vertex> guards;
        for (int i = 0; i < t; ++i) {
            const auto &seg = d.segments[i];
            if (i < l)
                lo |= seg.z;
            else if (i == l || i == r) {
                s |= seg.z;
                guards.push_back(seg.x);
                guards.push_back(seg.y);
            }
            else if (i >= to)
                hi |= seg.z;
            else {
                mid |= seg.z;
                guards.push_back(seg.x);
                guards.push_back(seg.y);
                guards.insert(guards.end(), seg.first.begin(), seg.first.end());
                guards.insert(guards.end(), seg.last.begin(), seg.last.end());
            }
        }
        // roof vertices next to the middle lie in Z_l, the middle or Z_r
        for (Vertex v : roof)
            if ((l >= 0 && d.segments[l].z.test(v)) || (r >= 0 && d.segments[r].z.test(v)))
                guards.push_back(v);
        s |= closed_nbhd(g_, guards) & c;
        Sol best;
        bool any = false;
        each_independent(g_, members(s), [&](const std::vector<Vertex> &guess) {
            auto gone = s | open_nbhd(g_, guess);
            Sol cand;
            for (Vertex v : guess)
                cand.add(v, w_[v]);
            cand.absorb(solve(lo - gone, id, "left", 0));
            cand.absorb(solve(hi - gone, id, "right", 0));
            search_.node(id, "middle", 0);
            try {
                cand.absorb(mwis_bipartite(g_, w_, mid - gone));
            }
            catch (const NotBipartite &) {
                throw std::logic_error("middle part is not bipartite; input is not abbak-free");
            }
            if (!any || cand.value > best.value) {
                best = std::move(cand);
                any = true;
            }
        });
        return best;
    }

    const OrderedGraph &g_;
    const std::vector<std::int64_t> &w_;
    int k_, tau_;
    Search &search_;
};

} // namespace

auto solve_abbak(const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt) -> Solution
{
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    int tau = opt.tau ? *opt.tau : degree_threshold(g.n());
    if (tau < 1)
        throw std::invalid_argument("degree threshold must be positive");
    Search search(opt);
    AbbakSolver s(g, w.scaled(), k, tau, search);
    return search.finish(s.solve(g.full_set(), -1, "abbak", 0), w);
}

} // namespace omwis
